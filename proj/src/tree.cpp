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

#include "esembed/tree.hpp"

#include <algorithm>
#include <string>

#include "esembed/errors.hpp"

namespace esembed {

RootedTree::RootedTree() : RootedTree(std::vector<Vertex>{kNoVertex}) {}

RootedTree::RootedTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw DomainError("a tree needs at least one vertex");
  children_.assign(n, {});
  neighbors_.assign(n, {});
  root_ = kNoVertex;
  for (std::size_t v = 0; v < n; ++v) {
    const Vertex p = parent_[v];
    if (p == kNoVertex) {
      if (root_ != kNoVertex) throw DomainError("parent array has more than one root");
      root_ = static_cast<Vertex>(v);
      continue;
    }
    if (p < 0 || static_cast<std::size_t>(p) >= n) {
      throw DomainError("parent of vertex " + std::to_string(v) + " out of range");
    }
    if (static_cast<std::size_t>(p) == v) throw DomainError("vertex " + std::to_string(v) + " is its own parent");
    children_[static_cast<std::size_t>(p)].push_back(static_cast<Vertex>(v));
  }
  if (root_ == kNoVertex) throw DomainError("parent array has no root");

  bfs_.reserve(n);
  depth_.assign(n, 0);
  bfs_.push_back(root_);
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    const Vertex v = bfs_[head];
    for (Vertex c : children_[static_cast<std::size_t>(v)]) {
      depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
      bfs_.push_back(c);
    }
  }
  // Children lists were filled in id order; a cycle leaves its vertices unreachable.
  if (bfs_.size() != n) throw DomainError("parent array contains a cycle");

  for (std::size_t v = 0; v < n; ++v) {
    if (parent_[v] != kNoVertex) neighbors_[v].push_back(parent_[v]);
    for (Vertex c : children_[v]) neighbors_[v].push_back(c);
    std::sort(neighbors_[v].begin(), neighbors_[v].end());
  }
}

RootedTree RootedTree::from_edges(std::size_t vertex_count, std::span<const Edge> edges, Vertex root) {
  if (vertex_count == 0) throw DomainError("a tree needs at least one vertex");
  if (edges.size() + 1 != vertex_count) throw DomainError("a tree on n vertices has n-1 edges");
  if (root < 0 || static_cast<std::size_t>(root) >= vertex_count) throw DomainError("root out of range");
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count || static_cast<std::size_t>(v) >= vertex_count) {
      throw DomainError("tree edge out of range");
    }
    if (u == v) throw DomainError("tree edge is a self-loop");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<Vertex> parent(vertex_count, kNoVertex);
  std::vector<bool> seen(vertex_count, false);
  std::vector<Vertex> queue{root};
  seen[static_cast<std::size_t>(root)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != vertex_count) throw DomainError("tree edges do not form a connected graph");
  return RootedTree(std::move(parent));
}

bool RootedTree::adjacent(Vertex u, Vertex v) const noexcept {
  return parent_[static_cast<std::size_t>(u)] == v || parent_[static_cast<std::size_t>(v)] == u;
}

std::vector<Vertex> RootedTree::leaves() const { return vertices_of_degree(1); }

std::vector<Vertex> RootedTree::vertices_of_degree(std::size_t d) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (neighbors_[v].size() == d) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

RootedTree RootedTree::rerooted(Vertex r) const {
  const auto e = edges();
  return from_edges(vertex_count(), e, r);
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != kNoVertex) out.emplace_back(parent_[v], static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace esembed
