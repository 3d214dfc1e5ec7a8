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

#include "esembed/graph.hpp"

#include <algorithm>
#include <string>

#include "esembed/errors.hpp"

namespace esembed {

Graph::Graph(std::size_t vertex_count)
    : rows_(vertex_count, VertexSet(vertex_count)), degrees_(vertex_count, 0) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  const auto n = static_cast<Vertex>(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                        std::to_string(vertex_count) + " vertices");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (rows_[static_cast<std::size_t>(u)].contains(v)) {
      throw DomainError("repeated edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
    ++edge_count_;
  }
}

Graph Graph::complete(std::size_t vertex_count) {
  Graph g(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    g.rows_[v] = VertexSet::full(vertex_count);
    g.rows_[v].erase(static_cast<Vertex>(v));
    g.degrees_[v] = vertex_count - 1;
  }
  g.edge_count_ = vertex_count * (vertex_count == 0 ? 0 : vertex_count - 1) / 2;
  return g;
}

std::size_t Graph::min_degree() const noexcept {
  if (degrees_.empty()) return 0;
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const noexcept {
  if (degrees_.empty()) return 0;
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    });
  }
  return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& mask) {
  InducedSubgraph out;
  out.to_host = mask.to_vector();
  std::vector<Vertex> to_local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    to_local[static_cast<std::size_t>(out.to_host[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    (g.neighbors(out.to_host[i]) & mask).for_each([&](Vertex w) {
      const Vertex j = to_local[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    });
  }
  out.graph = Graph(out.to_host.size(), edges);
  return out;
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("average degree of the empty graph");
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(g.vertex_count()));
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v, const VertexSet& restrict) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("common_neighbors: vertex out of range");
  if (u == v) throw DomainError("common_neighbors: u and v must differ");
  return g.neighbors(u) & g.neighbors(v) & restrict;
}

}  // namespace esembed
