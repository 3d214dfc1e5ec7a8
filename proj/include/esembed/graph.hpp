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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "esembed/rational.hpp"
#include "esembed/vertex_set.hpp"

namespace esembed {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1. Each vertex owns a bitset
// row, so adjacency tests are O(1) and neighbourhood intersections are word-parallel.
// Induced subgraphs are expressed as VertexSet masks passed to the query functions;
// `induced` materialises one only when a relabelled standalone graph is needed.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph.
  explicit Graph(std::size_t vertex_count);
  /// Throws DomainError on out-of-range ids, self-loops or repeated edges.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  static Graph complete(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const noexcept { return degrees_[static_cast<std::size_t>(v)]; }
  /// |N(v) ∩ mask|.
  std::size_t degree_in(Vertex v, const VertexSet& mask) const noexcept {
    return intersection_size(rows_[static_cast<std::size_t>(v)], mask);
  }

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::size_t> degrees_;
  std::size_t edge_count_ = 0;
};

// Standalone copy of G[mask] with vertices relabelled 0..|mask|-1 in increasing host order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // local id -> host id
};

InducedSubgraph induced(const Graph& g, const VertexSet& mask);

/// 2|E|/|V| exactly. Throws DomainError on the empty graph.
Rational average_degree(const Graph& g);

/// N(u) ∩ N(v) ∩ restrict. Throws DomainError if u == v or either is out of range.
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v, const VertexSet& restrict);

}  // namespace esembed
