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

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "esembed/generators.hpp"
#include "esembed/oracle.hpp"
#include "support.hpp"

namespace esembed {
namespace {

Graph disjoint_cliques(std::size_t k, std::size_t copies) {
  HostParams hp;
  hp.k = k;
  hp.copies = copies;
  return gen_host(HostFamily::kDisjointCliques, hp);
}

TEST(Oracle, PathIntoFourCycle) {
  const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const Graph g(4, c4);
  const RootedTree t = gen_tree(TreeFamily::kPath, 3);
  const OracleResult r = contains_tree_exact(g, t);
  ASSERT_EQ(r.decision, Decision::kContained);
  EXPECT_TRUE(validate_embedding(g, t, *r.embedding).certifies_containment());
  EXPECT_GE(r.stats.nodes_expanded, t.vertex_count());
  EXPECT_EQ(r.stats.max_depth, 4U);
}

TEST(Oracle, TwoDisjointK5HaveNoSixVertexTree) {
  const Graph g = disjoint_cliques(5, 2);
  for (const RootedTree& t : all_trees(5)) {
    EXPECT_EQ(contains_tree_exact(g, t).decision, Decision::kNotContained);
    OracleOptions no_prune;
    no_prune.pruning = false;
    EXPECT_EQ(contains_tree_exact(g, t, no_prune).decision, Decision::kNotContained);
  }
}

TEST(Oracle, DeadlineGivesIndeterminate) {
  // Spanning-path search in a sparse random graph with a zero deadline.
  Rng rng(1);
  const Graph g = testing::random_graph(40, 1, 4, rng);
  const RootedTree t = gen_tree(TreeFamily::kPath, 39);
  OracleOptions o;
  o.deadline = std::chrono::milliseconds(0);
  o.pruning = false;
  const OracleResult r = contains_tree_exact(g, t, o);
  EXPECT_NE(r.decision, Decision::kNotContained);
  if (r.decision == Decision::kIndeterminate) EXPECT_FALSE(r.embedding.has_value());
}

TEST(Oracle, AllSixVertexTreesInDenseConnectedSixVertexGraphs) {
  const auto trees = all_trees(5);
  ASSERT_EQ(trees.size(), 6U);
  std::size_t graphs = 0;
  // d > 4 on 6 vertices means 2m > 24, m >= 13.
  for_each_dense_graph(6, 13, true, [&](const Graph& g) {
    ++graphs;
    for (const RootedTree& t : trees) EXPECT_EQ(contains_tree_exact(g, t).decision, Decision::kContained);
  });
  EXPECT_EQ(graphs, 4U);  // two classes with 13 edges, one each with 14 and 15
}

TEST(OracleProperty, AgreesWithNaiveAndIgnoresPruning) {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(8);
    const Graph g = testing::random_graph(n, rng.below(11), 10, rng);
    const RootedTree t = testing::random_tree(rng.below(7), rng);
    const bool expected = testing::naive_contains(g, t);
    const OracleResult a = contains_tree_exact(g, t);
    OracleOptions off;
    off.pruning = false;
    const OracleResult b = contains_tree_exact(g, t, off);
    EXPECT_EQ(a.decision == Decision::kContained, expected) << format_graph6(g) << " | " << format_parent_array(t);
    EXPECT_EQ(a.decision, b.decision);
    EXPECT_LE(a.stats.nodes_expanded, b.stats.nodes_expanded);
    if (a.embedding) EXPECT_TRUE(validate_embedding(g, t, *a.embedding).certifies_containment());
  }
}

TEST(TreeEnumeration, CountsMatchKnownSequence) {
  // Unlabelled trees on k+1 vertices: 1, 1, 1, 2, 3, 6, 11, 23, 47.
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto trees = all_trees(k);
    EXPECT_EQ(trees.size(), expected[k]) << k;
    std::set<std::string> forms;
    for (const auto& t : trees) {
      EXPECT_EQ(t.edge_count(), k);
      forms.insert(tree_canonical_form(t));
    }
    EXPECT_EQ(forms.size(), trees.size());
  }
  EXPECT_THROW(all_trees(9), RejectedInput);
}

TEST(TreeEnumeration, CanonicalFormIgnoresLabelsAndRoot) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const RootedTree t = testing::random_tree(1 + rng.below(20), rng);
    const RootedTree u = t.rerooted(static_cast<Vertex>(rng.below(t.vertex_count())));
    EXPECT_EQ(tree_canonical_form(t), tree_canonical_form(u));
  }
  EXPECT_NE(tree_canonical_form(gen_tree(TreeFamily::kPath, 4)), tree_canonical_form(gen_tree(TreeFamily::kStar, 4)));
}

TEST(Prufer, FrozenDecodings) {
  // Reference decodings from an independent implementation.
  const RootedTree a = prufer_decode({3, 3, 3, 4});
  std::vector<Edge> ea;
  for (auto [p, c] : a.edges()) ea.emplace_back(std::min(p, c), std::max(p, c));
  std::sort(ea.begin(), ea.end());
  EXPECT_EQ(ea, (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
  const RootedTree b = prufer_decode({0, 1, 2});
  std::vector<Edge> eb;
  for (auto [p, c] : b.edges()) eb.emplace_back(std::min(p, c), std::max(p, c));
  std::sort(eb.begin(), eb.end());
  EXPECT_EQ(eb, (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 4}}));
  EXPECT_EQ(prufer_decode({}).edge_count(), 1U);
}

TEST(GraphEnumeration, IsomorphismClassCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    std::size_t count = 0;
    for_each_dense_graph(n, 0, true, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, expected[n]) << n;
  }
  std::size_t labelled = 0;
  for_each_dense_graph(5, 0, false, [&](const Graph&) { ++labelled; });
  EXPECT_EQ(labelled, 1024U);
  EXPECT_DOUBLE_EQ(labelled_graph_count(5, 0), 1024.0);
  EXPECT_DOUBLE_EQ(labelled_graph_count(4, 5), 7.0);
}

TEST(GraphEnumeration, CanonicalCodeIsAnInvariant) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(7);
    const Graph g = testing::random_graph(n, rng.below(11), 10, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<Vertex>(perm));
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
      Vertex a = perm[static_cast<std::size_t>(u)];
      Vertex b = perm[static_cast<std::size_t>(v)];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    EXPECT_EQ(graph_canonical_code(g), graph_canonical_code(Graph(n, e)));
  }
  EXPECT_THROW(graph_canonical_code(Graph(8)), DomainError);
}

TEST(VerifyConjecture, SmallExhaustiveRuns) {
  VerifyOptions o;
  o.k = 3;
  o.n_max = 6;
  const VerifyReport r = verify_conjecture(o);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.trees, 2U);
  EXPECT_GT(r.graphs, 0U);
  EXPECT_EQ(r.pairs, r.graphs * r.trees);
  o.k = 5;
  o.n_max = 7;
  o.workers = 3;
  const VerifyReport s = verify_conjecture(o);
  EXPECT_TRUE(s.counterexamples.empty());
  EXPECT_EQ(s.indeterminate, 0U);
}

TEST(VerifyConjecture, RejectsInfeasibleRuns) {
  VerifyOptions o;
  o.k = 2;
  o.n_max = 11;
  EXPECT_THROW(verify_conjecture(o), RejectedInput);
  o.n_max = 10;
  o.max_instances = 1000;
  try {
    verify_conjecture(o);
    FAIL();
  } catch (const RejectedInput& e) {
    EXPECT_NE(std::string(e.what()).find("about"), std::string::npos);
  }
}

TEST(VerifyConjecture, SampledModeIsSeeded) {
  VerifyOptions o;
  o.k = 4;
  o.n_max = 9;
  o.mode = VerifyMode::kSampled;
  o.samples = 200;
  o.seed = 5;
  const VerifyReport a = verify_conjecture(o);
  const VerifyReport b = verify_conjecture(o);
  EXPECT_EQ(a.graphs, b.graphs);
  EXPECT_EQ(a.graphs_in_regime, b.graphs_in_regime);
  EXPECT_TRUE(a.counterexamples.empty());
}

}  // namespace
}  // namespace esembed
