// Copyright 2026 The esembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "esembed/graph.hpp"
#include "esembed/rng.hpp"
#include "esembed/tree.hpp"

namespace esembed::testing {

// Tries every injective map of tree vertices into host vertices and checks all tree
// edges only once the map is complete. Exponential; meant for |T| <= 6, |G| <= 7.
inline bool naive_contains(const Graph& g, const RootedTree& t) {
  const std::size_t tn = t.vertex_count();
  const std::size_t gn = g.vertex_count();
  if (tn > gn) return false;
  std::vector<Vertex> image(tn, kNoVertex);
  std::vector<bool> used(gn, false);
  const std::vector<Edge> edges = t.edges();
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == tn) {
      for (const auto& [u, v] : edges) {
        if (!g.adjacent(image[static_cast<std::size_t>(u)], image[static_cast<std::size_t>(v)])) return false;
      }
      return true;
    }
    for (std::size_t h = 0; h < gn; ++h) {
      if (used[h]) continue;
      used[h] = true;
      image[i] = static_cast<Vertex>(h);
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// G(n, num/den) with the portable generator.
inline Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.below(den) < num) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

/// Random recursive tree with k edges: vertex v attaches to a uniform earlier vertex.
inline RootedTree random_tree(std::size_t k, Rng& rng) {
  std::vector<Vertex> parent(k + 1, kNoVertex);
  for (std::size_t v = 1; v <= k; ++v) parent[v] = static_cast<Vertex>(rng.below(v));
  return RootedTree(std::move(parent));
}

}  // namespace esembed::testing
