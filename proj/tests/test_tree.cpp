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

#include <gtest/gtest.h>

#include <vector>

#include "esembed/errors.hpp"
#include "esembed/tree.hpp"
#include "support.hpp"

namespace esembed {
namespace {

TEST(RootedTree, StructureQueries) {
  // 0 has children 1 and 2; 1 has children 3 and 4; 2 has child 5.
  const RootedTree t({kNoVertex, 0, 0, 1, 1, 2});
  EXPECT_EQ(t.edge_count(), 5U);
  EXPECT_EQ(t.root(), 0);
  EXPECT_EQ(t.children(1), (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(t.neighbors(1), (std::vector<Vertex>{0, 3, 4}));
  EXPECT_EQ(t.leaves(), (std::vector<Vertex>{3, 4, 5}));
  EXPECT_EQ(t.vertices_of_degree(2), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(t.depth(5), 2U);
  EXPECT_TRUE(t.adjacent(5, 2));
  EXPECT_FALSE(t.adjacent(3, 4));
  EXPECT_EQ(t.bfs_order(), (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}}));
}

TEST(RootedTree, RejectsNonTrees) {
  EXPECT_THROW(RootedTree({kNoVertex, kNoVertex}), DomainError);
  EXPECT_THROW(RootedTree({1, 0}), DomainError);
  EXPECT_THROW(RootedTree({kNoVertex, 2, 1}), DomainError);
  EXPECT_THROW(RootedTree({kNoVertex, 5}), DomainError);
  const std::vector<Edge> cyc{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW(RootedTree::from_edges(3, cyc), DomainError);
  const std::vector<Edge> few{{0, 1}};
  EXPECT_THROW(RootedTree::from_edges(3, few), DomainError);
}

TEST(RootedTree, RerootKeepsEdgeSet) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const RootedTree t = testing::random_tree(1 + rng.below(40), rng);
    const auto r = static_cast<Vertex>(rng.below(t.vertex_count()));
    const RootedTree u = t.rerooted(r);
    EXPECT_EQ(u.root(), r);
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
      EXPECT_EQ(t.neighbors(static_cast<Vertex>(v)), u.neighbors(static_cast<Vertex>(v)));
    }
    // BFS lists each vertex after its parent.
    std::vector<bool> seen(u.vertex_count(), false);
    for (Vertex v : u.bfs_order()) {
      if (u.parent(v) != kNoVertex) {
        EXPECT_TRUE(seen[static_cast<std::size_t>(u.parent(v))]);
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Edge> undirected;
    for (auto [p, c] : u.edges()) undirected.emplace_back(std::min(p, c), std::max(p, c));
    EXPECT_EQ(RootedTree::from_edges(u.vertex_count(), undirected, r), u);
  }
}

TEST(RootedTree, SingleVertex) {
  const RootedTree t;
  EXPECT_EQ(t.vertex_count(), 1U);
  EXPECT_EQ(t.edge_count(), 0U);
  EXPECT_TRUE(t.leaves().empty());
}

}  // namespace
}  // namespace esembed
