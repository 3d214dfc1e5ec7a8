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
#include <vector>

#include "esembed/graph.hpp"

namespace esembed {

// Immutable rooted tree on vertices 0..size-1 (size = k + 1 for a tree with k edges).
// Children lists are sorted by id; bfs_order() lists every vertex after its parent.
class RootedTree {
 public:
  /// Single vertex.
  RootedTree();
  /// parent[root] must be kNoVertex and every other entry a valid id; throws DomainError
  /// unless the array describes one tree.
  explicit RootedTree(std::vector<Vertex> parent);
  /// Throws DomainError unless `edges` form a spanning tree on vertex_count vertices.
  static RootedTree from_edges(std::size_t vertex_count, std::span<const Edge> edges, Vertex root = 0);

  std::size_t vertex_count() const noexcept { return parent_.size(); }
  std::size_t edge_count() const noexcept { return parent_.size() - 1; }
  Vertex root() const noexcept { return root_; }

  Vertex parent(Vertex v) const noexcept { return parent_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& parents() const noexcept { return parent_; }
  const std::vector<Vertex>& children(Vertex v) const noexcept { return children_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& neighbors(Vertex v) const noexcept { return neighbors_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const noexcept { return neighbors_[static_cast<std::size_t>(v)].size(); }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  const std::vector<Vertex>& bfs_order() const noexcept { return bfs_; }
  std::size_t depth(Vertex v) const noexcept { return depth_[static_cast<std::size_t>(v)]; }

  /// Vertices of degree 1, ascending.
  std::vector<Vertex> leaves() const;
  /// Vertices of degree exactly d, ascending.
  std::vector<Vertex> vertices_of_degree(std::size_t d) const;

  /// Same tree, rooted at r.
  RootedTree rerooted(Vertex r) const;
  /// (parent, child) pairs in id order of the child.
  std::vector<Edge> edges() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.parent_ == b.parent_; }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<Vertex> bfs_;
  std::vector<std::size_t> depth_;
  Vertex root_ = 0;
};

}  // namespace esembed
