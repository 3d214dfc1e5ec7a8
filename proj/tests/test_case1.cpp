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

#include "esembed/case1.hpp"
#include "esembed/generators.hpp"
#include "support.hpp"

namespace esembed {
namespace {

TEST(LeafTarget, FrozenValues) {
  EXPECT_EQ(leaf_target(100, ParameterSet::desk(Rational(1, 20))), 23U);  // ceil(sqrt(1/20) * 100)
  EXPECT_EQ(leaf_target(100, ParameterSet::paper()), 1U);                 // ceil(10 * 1e-5 * 100)
  EXPECT_TRUE(has_many_leaves(gen_tree(TreeFamily::kStar, 7), 7, ParameterSet::desk(Rational(1))));
  EXPECT_FALSE(has_many_leaves(gen_tree(TreeFamily::kPath, 7), 7, ParameterSet::desk(Rational(1))));
}

TEST(LeafApparatus, SpiderSets) {
  // Legs 0-1-2, 0-3-4, 0-5-6; |L| = ceil(sqrt(1/4) * 6) = 3.
  const RootedTree t = gen_tree(TreeFamily::kSpider, 6, 1, {3, 0, 0});
  const LeafApparatus app = build_leaf_apparatus(t, 6, ParameterSet::desk(Rational(1, 4)));
  EXPECT_EQ(app.root(), 0);
  EXPECT_EQ(app.L, (std::vector<Vertex>{2, 4, 6}));
  EXPECT_EQ(app.P1, (std::vector<Vertex>{1, 3, 5}));
  EXPECT_EQ(app.P2, (std::vector<Vertex>{0, 1, 3, 5}));
  EXPECT_EQ(app.P3, std::vector<Vertex>{0});
}

TEST(LeafApparatus, LeafRootIsMoved) {
  // 0-1, 1-2, 1-3, 2-4, 3-5 rooted at the leaf 0: the lowest-id non-leaf (1) becomes the root.
  const RootedTree t({kNoVertex, 0, 1, 1, 2, 3});
  ParameterSet p = ParameterSet::desk(Rational(1));
  p.c_leafcut = Rational(1, 2);  // |L| = ceil(5/2) = 3
  const LeafApparatus app = build_leaf_apparatus(t, 5, p);
  EXPECT_EQ(app.root(), 1);
  EXPECT_EQ(app.L, (std::vector<Vertex>{0, 4, 5}));
  EXPECT_EQ(app.P2, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(app.P3, std::vector<Vertex>{1});
}

TEST(LeafApparatus, ClosureAddsBranchingAncestors) {
  // 0-1, 1-2, 1-3, 2-4, 3-5, 0-6, 6-7. Cutting leaves 4 and 5 puts 2 and 3 into P1,
  // so their common parent 1 joins P2.
  const RootedTree t({kNoVertex, 0, 1, 1, 2, 3, 0, 6});
  ParameterSet p = ParameterSet::desk(Rational(1));
  p.c_leafcut = Rational(2, 7);  // |L| = 2
  const LeafApparatus app = build_leaf_apparatus(t, 7, p);
  EXPECT_EQ(app.root(), 0);
  EXPECT_EQ(app.L, (std::vector<Vertex>{4, 5}));
  EXPECT_EQ(app.P1, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(app.P2, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(app.P3, (std::vector<Vertex>{0, 1}));
}

TEST(LeafApparatus, ClosureInvariant) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 2 + rng.below(60);
    const RootedTree t = gen_tree(TreeFamily::kPruferRandom, k, rng.next());
    Rng sampler(rng.next());
    const LeafApparatus app = build_leaf_apparatus(t, k, ParameterSet::desk(Rational(1, 10)), i % 2 ? &sampler : nullptr);
    const RootedTree& tr = app.tree;
    EXPECT_TRUE(app.in_P2.contains(app.root()));
    for (Vertex l : app.L) {
      EXPECT_EQ(tr.degree(l), 1U);
      EXPECT_TRUE(app.in_P2.contains(tr.parent(l)));
    }
    // No vertex outside P2 has two children inside it; P2 is closed upward.
    for (std::size_t v = 0; v < tr.vertex_count(); ++v) {
      std::size_t in = 0;
      for (Vertex c : tr.children(static_cast<Vertex>(v))) in += app.in_P2.contains(c) ? 1 : 0;
      if (!app.in_P2.contains(static_cast<Vertex>(v))) EXPECT_LT(in, 2U);
    }
  }
}

TEST(EmbedCase1, StarIntoCompleteGraph) {
  const ParameterSet p = ParameterSet::desk(Rational(1));
  const Graph g = Graph::complete(8);
  const RootedTree t = gen_tree(TreeFamily::kStar, 7);
  const Classification c = classify(g, 7, p);
  const Case1Result r = embed_case1(g, c, build_leaf_apparatus(t, 7, p));
  EXPECT_TRUE(validate_embedding(g, t, r.embedding).certifies_containment());
  ASSERT_EQ(r.phases.size(), 3U);
  EXPECT_EQ(r.phases[0].placed, 1U);
  EXPECT_EQ(r.phases[2].placed, 7U);
  EXPECT_EQ(r.embedded_before_leaves, 1U);
}

TEST(EmbedCase1, FailsWithTraceWhenHighSetIsEmpty) {
  const ParameterSet p = ParameterSet::desk(Rational(1));
  const Graph g = Graph::complete(8);
  const RootedTree t = gen_tree(TreeFamily::kStar, 7);
  Classification c = classify(g, 7, p);
  c.H = VertexSet(8);
  try {
    embed_case1(g, c, build_leaf_apparatus(t, 7, p));
    FAIL();
  } catch (const EngineFailure& f) {
    EXPECT_EQ(f.trace().phase, "case1.p2_into_high");
    EXPECT_FALSE(f.regime());
  }
}

TEST(EmbedCase1Property, SuccessfulRunsAreValid) {
  Rng rng(15);
  int successes = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t k = 20 + rng.below(60);
    const ParameterSet p = ParameterSet::desk(Rational(1, 10));
    const Graph g = gen_host(HostFamily::kPaperRegime, {k, 0, {}, 0, 2, Rational(1, 10), 0}, rng.next());
    const TreeFamily fam = i % 3 == 0 ? TreeFamily::kCaterpillar : i % 3 == 1 ? TreeFamily::kBroom : TreeFamily::kPruferRandom;
    const RootedTree t = gen_tree(fam, k, rng.next());
    if (!has_many_leaves(t, k, p)) continue;
    const Reduction red = minimal_reduction(g, k);
    const Classification c = classify(red.graph, k, p);
    try {
      const Case1Result r = embed_case1(red.graph, c, build_leaf_apparatus(t, k, p));
      EXPECT_TRUE(validate_embedding(red.graph, t, r.embedding).certifies_containment());
      ++successes;
    } catch (const EngineFailure&) {
    }
  }
  EXPECT_GT(successes, 50);
}

}  // namespace
}  // namespace esembed
