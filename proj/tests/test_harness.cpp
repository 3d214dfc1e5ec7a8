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
#include <sstream>
#include <vector>

#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "esembed/generators.hpp"
#include "esembed/harness.hpp"

namespace esembed {
namespace {

RunConfig config(const Rational& delta) {
  RunConfig c;
  c.params = ParameterSet::desk(delta);
  return c;
}

TEST(CmdEmbed, StarInCompleteGraphViaCase1) {
  RunConfig c = config(Rational(1, 20));
  c.skip_dense_spot = true;
  const RunReport r = cmd_embed(Graph::complete(31), gen_tree(TreeFamily::kStar, 30), c);
  EXPECT_EQ(r.branch, "case1");
  EXPECT_EQ(r.outcome, Outcome::kEmbeddedByEngine);
  EXPECT_EQ(r.embedding.size(), 31U);
  EXPECT_FALSE(r.fallback_used);
}

TEST(CmdEmbed, PathInCompleteGraphViaCase2) {
  // n = k + 5 leaves enough high-degree vertices outside the prefix for the reserve.
  RunConfig c = config(Rational(1, 5));
  c.skip_dense_spot = true;
  const RunReport r = cmd_embed(Graph::complete(45), gen_tree(TreeFamily::kPath, 40), c);
  EXPECT_EQ(r.branch, "case2");
  EXPECT_EQ(r.outcome, Outcome::kEmbeddedByEngine);
  ASSERT_TRUE(r.case2.has_value());
  EXPECT_EQ(r.case2->image_size, 41U);
  EXPECT_EQ(r.case2->image_in_s_prime, r.case2->s_prime);
}

TEST(CmdEmbed, DenseSpotShortcut) {
  const RunReport r = cmd_embed(Graph::complete(31), gen_tree(TreeFamily::kStar, 30), config(Rational(1, 20)));
  EXPECT_EQ(r.branch, "dense-spot");
  EXPECT_EQ(r.outcome, Outcome::kEmbeddedByEngine);
  EXPECT_TRUE(r.oracle.has_value());
}

TEST(CmdEmbed, DisjointCliquesGiveNoEmbedding) {
  HostParams hp;
  hp.k = 5;
  hp.copies = 2;
  const RunReport r = cmd_embed(gen_host(HostFamily::kDisjointCliques, hp), gen_tree(TreeFamily::kSpider, 5), config(Rational(1, 20)));
  EXPECT_EQ(r.branch, "hypothesis-failed");
  EXPECT_EQ(r.outcome, Outcome::kNoEmbedding);
  EXPECT_TRUE(r.embedding.empty());
}

TEST(CmdEmbed, EngineFailureNeedsOptInFallback) {
  // Paper constants on a small host: the degree-2 mass cannot cover R1 if the tree is a
  // spider with many short legs, so Case 2 raises a regime failure.
  RunConfig c;
  c.params = ParameterSet::paper();
  c.params.delta = Rational(1, 20);
  c.skip_dense_spot = true;
  const Graph g = Graph::complete(61);
  const RootedTree t = gen_tree(TreeFamily::kPath, 60);
  const RunReport plain = cmd_embed(g, t, c);
  EXPECT_EQ(plain.outcome, Outcome::kIndeterminate);
  ASSERT_TRUE(plain.failure.has_value());
  EXPECT_TRUE(plain.failure_regime);
  EXPECT_FALSE(plain.fallback_used);
  c.fallback = true;
  const RunReport fb = cmd_embed(g, t, c);
  EXPECT_EQ(fb.outcome, Outcome::kEmbeddedByOracleFallback);
  EXPECT_TRUE(fb.fallback_used);
  EXPECT_EQ(fb.branch, plain.branch);
}

TEST(CmdEmbed, ReportsAreByteIdentical) {
  RunConfig c = config(Rational(1, 20));
  c.skip_dense_spot = true;
  c.seed = 77;
  HostParams hp;
  hp.k = 120;
  const Graph g = gen_host(HostFamily::kPaperRegime, hp, 5);
  const RootedTree t = gen_tree(TreeFamily::kSpider, 120, 1, {3, 0, 0});
  EXPECT_EQ(to_json(cmd_embed(g, t, c), true), to_json(cmd_embed(g, t, c), true));
  EXPECT_EQ(to_csv(cmd_embed(g, t, c)), to_csv(cmd_embed(g, t, c)));
}

TEST(CmdEmbed, JsonCarriesSeedAndOutcome) {
  RunConfig c = config(Rational(1, 20));
  c.seed = 12345;
  const std::string j = to_json(cmd_embed(Graph::complete(11), gen_tree(TreeFamily::kPath, 10), c), false);
  EXPECT_NE(j.find("\"seed\":12345"), std::string::npos);
  EXPECT_NE(j.find("\"outcome\":\"embedded-by-engine\""), std::string::npos);
  const std::string csv = to_csv(cmd_embed(Graph::complete(11), gen_tree(TreeFamily::kPath, 10), c));
  const std::string header = csv_header_embed();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(VerifyStream, EmptyAndMalformed) {
  std::istringstream empty("");
  EXPECT_TRUE(verify_stream(empty, 3, std::nullopt).empty());
  std::istringstream bad("C~\nC!\n");
  try {
    verify_stream(bad, 3, std::nullopt);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  std::istringstream two("C~\n" + format_graph6(Graph(4)) + "\n");
  const auto v = verify_stream(two, 3, std::nullopt);
  ASSERT_EQ(v.size(), 2U);
  EXPECT_EQ(v[0].decision, Decision::kContained);
  EXPECT_TRUE(v[0].hypothesis);
  EXPECT_EQ(v[1].decision, Decision::kNotContained);
  EXPECT_FALSE(v[1].hypothesis);
  EXPECT_EQ(v[1].failing_trees.size(), 2U);
}

TEST(CmdStats, CompleteAndEmptyGraphs) {
  const ParameterSet p = ParameterSet::desk(Rational(1, 20));
  const StatsReport full = cmd_stats(Graph::complete(60), 59, p, 1, 50);
  EXPECT_EQ(full.count_A, 50U);
  const StatsReport empty = cmd_stats(Graph(60), 59, p, 1, 50);
  EXPECT_EQ(empty.count_A, 0U);
  const StatsReport again = cmd_stats(Graph::complete(60), 59, p, 1, 50);
  EXPECT_EQ(to_json(full), to_json(again));
}

TEST(Explain, NamesTheCase) {
  const std::string e = explain_json(Graph::complete(21), gen_tree(TreeFamily::kPath, 20), config(Rational(1, 20)));
  EXPECT_NE(e.find("\"case\": \"case2\""), std::string::npos);
  EXPECT_NE(e.find("\"classification\""), std::string::npos);
}

}  // namespace
}  // namespace esembed
