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

#include "esembed/case1.hpp"

#include <algorithm>
#include <span>
#include <string>

namespace esembed {

std::size_t leaf_target(std::size_t k, const ParameterSet& p) {
  return static_cast<std::size_t>(scaled_sqrt_ceil(p.c_leafcut, p.delta, static_cast<std::int64_t>(k)));
}

bool has_many_leaves(const RootedTree& t, std::size_t k, const ParameterSet& p) {
  return t.leaves().size() >= leaf_target(k, p);
}

LeafApparatus build_leaf_apparatus(const RootedTree& t, std::size_t k, const ParameterSet& p, Rng* leaf_sampler) {
  Vertex r = t.root();
  if (t.degree(r) <= 1 && t.vertex_count() > 2) {
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      if (t.degree(static_cast<Vertex>(v)) >= 2) {
        r = static_cast<Vertex>(v);
        break;
      }
    }
  }
  LeafApparatus app{r == t.root() ? t : t.rerooted(r), {}, {}, {}, {}, {}, {}, {}};
  const RootedTree& tree = app.tree;
  const std::size_t size = tree.vertex_count();

  std::vector<Vertex> leaves;
  for (Vertex v : tree.leaves()) {
    if (v != r) leaves.push_back(v);
  }
  const std::size_t take = std::min(leaves.size(), leaf_target(k, p));
  if (leaf_sampler != nullptr) {
    leaf_sampler->shuffle(std::span<Vertex>(leaves));
    leaves.resize(take);
    std::sort(leaves.begin(), leaves.end());
  } else {
    leaves.resize(take);
  }
  app.L = std::move(leaves);
  app.in_L = VertexSet::of(size, app.L);

  VertexSet p1(size);
  for (Vertex l : app.L) p1.insert(tree.parent(l));
  app.P1 = p1.to_vector();

  app.in_P2 = p1;
  app.in_P2.insert(r);
  // Reverse BFS visits children before parents, so one pass reaches the fixpoint.
  const auto& order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (app.in_P2.contains(v)) continue;
    std::size_t in_p2 = 0;
    for (Vertex c : tree.children(v)) in_p2 += app.in_P2.contains(c) ? 1 : 0;
    if (in_p2 >= 2) app.in_P2.insert(v);
  }
  app.P2 = app.in_P2.to_vector();

  app.in_P3 = VertexSet(size);
  for (Vertex v : app.P2) {
    if (tree.parent(v) != kNoVertex) app.in_P3.insert(tree.parent(v));
  }
  app.P3 = app.in_P3.to_vector();
  return app;
}

Case1Result embed_case1(const Graph& g, const Classification& c, const LeafApparatus& app) {
  const RootedTree& tree = app.tree;
  Case1Result out{PartialEmbedding(tree.vertex_count(), g.vertex_count()), {}, 0, 0};
  PartialEmbedding& e = out.embedding;

  // (i) T[P2] into H, top-down, preferring H \ S'.
  const VertexSet high_first = c.H - c.S_prime;
  const VertexSet high_second = c.H & c.S_prime;
  std::size_t before = e.mapped_count();
  for (Vertex v : tree.bfs_order()) {
    if (!app.in_P2.contains(v)) continue;
    VertexSet cand = placement_candidates(g, tree, e, v, high_first);
    if (cand.empty()) cand = placement_candidates(g, tree, e, v, high_second);
    if (cand.empty()) {
      const std::string reason = c.H.size() < app.P2.size()
                                     ? "|H| = " + std::to_string(c.H.size()) + " < |P2| = " + std::to_string(app.P2.size())
                                     : "no unused H-vertex adjacent to the parent image";
      throw EngineFailure({"case1.p2_into_high", v, 0, e.used().size(), reason}, false);
    }
    e.place(v, cand.first());
  }
  out.phases.push_back({"case1.p2_into_high", e.mapped_count() - before, e.used().size()});

  // (ii) T - L top-down inside G'.
  before = e.mapped_count();
  for (Vertex v : tree.bfs_order()) {
    if (e.is_mapped(v) || app.in_L.contains(v)) continue;
    std::size_t embedded_neighbours = 0;
    for (Vertex w : tree.neighbors(v)) embedded_neighbours += e.is_mapped(w) ? 1 : 0;
    const VertexSet cand = placement_candidates(g, tree, e, v, c.G_prime);
    if (cand.empty()) {
      throw EngineFailure({"case1.top_down", v, 0, e.used().size(),
                           embedded_neighbours >= 2 ? "no common neighbour in G' for a P3 vertex"
                                                    : "no unused neighbour of the parent image in G'"},
                          false);
    }
    if (embedded_neighbours >= 2) ++out.double_constrained;
    e.place(v, cand.first());
  }
  out.phases.push_back({"case1.top_down", e.mapped_count() - before, e.used().size()});
  out.embedded_before_leaves = e.mapped_count();

  // (iii) leaves anywhere in G.
  before = e.mapped_count();
  const VertexSet everywhere = g.all_vertices();
  for (Vertex l : app.L) place_lowest(g, tree, e, l, everywhere, "case1.leaves");
  out.phases.push_back({"case1.leaves", e.mapped_count() - before, e.used().size()});
  return out;
}

}  // namespace esembed
