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

#include <sstream>
#include <vector>

#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "support.hpp"

namespace esembed {
namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  for (auto& [u, v] : e) {
    if (u > v) std::swap(u, v);
  }
  return Graph(10, e);
}

TEST(Graph6, FrozenEncodings) {
  // Reference strings produced by an independent graph6 writer.
  EXPECT_EQ(format_graph6(Graph::complete(4)), "C~");
  const std::vector<Edge> path{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  EXPECT_EQ(format_graph6(Graph(5, path)), "DhC");
  EXPECT_EQ(format_graph6(petersen()), "IheA@GUAo");
  EXPECT_EQ(format_graph6(Graph(0)), "?");
  EXPECT_EQ(format_graph6(Graph(1)), "@");
  const std::string k63 = format_graph6(Graph::complete(63));
  EXPECT_EQ(k63.size(), 330U);
  EXPECT_EQ(k63.substr(0, 10), "~??~~~~~~~");
  std::vector<Edge> p70;
  for (Vertex i = 0; i + 1 < 70; ++i) p70.emplace_back(i, i + 1);
  EXPECT_EQ(format_graph6(Graph(70, p70)).substr(0, 10), "~?@EhCGGC@");
}

TEST(Graph6, RoundTripAndHeader) {
  EXPECT_EQ(parse_graph6(">>graph6<<IheA@GUAo"), petersen());
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(rng.below(80), rng.below(10), 10, rng);
    EXPECT_EQ(parse_graph6(format_graph6(g)), g);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);
  EXPECT_THROW(parse_graph6("C\x7f"), ParseError);
}

TEST(EdgeList, ParsesWithDiagnostics) {
  std::istringstream ok("3 2\n0 1\n\n1 2\n");
  const Graph g = parse_edge_list(ok);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(format_edge_list(g), "3 2\n0 1\n1 2\n");

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 x\n"), 3U);
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2U);
  EXPECT_EQ(line_of("3 1\n0 5\n"), 2U);
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3U);
  EXPECT_EQ(line_of("3\n"), 1U);
  std::istringstream dup("3 2\n0 1\n1 0\n");
  EXPECT_THROW(parse_edge_list(dup), ParseError);
}

TEST(ParseGraph, DetectsFormat) {
  std::istringstream g6("\n  \nC~\n");
  EXPECT_EQ(parse_graph(g6), Graph::complete(4));
  std::istringstream el("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  EXPECT_EQ(parse_graph(el), Graph::complete(4));
}

TEST(Graph6Stream, ReportsLineNumbers) {
  std::istringstream in("C~\n\nDhC\nC!\n");
  std::vector<std::size_t> lines;
  try {
    read_graph6_stream(in, [&](std::size_t line, const Graph&) { lines.push_back(line); });
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4U);
  }
  EXPECT_EQ(lines, (std::vector<std::size_t>{1, 3}));
  std::istringstream empty("");
  std::size_t calls = 0;
  read_graph6_stream(empty, [&](std::size_t, const Graph&) { ++calls; });
  EXPECT_EQ(calls, 0U);
}

TEST(ParentArray, RoundTripAndErrors) {
  const RootedTree t = parse_parent_array("5; 0 0 1 1");
  EXPECT_EQ(t.vertex_count(), 5U);
  EXPECT_EQ(t.children(1), (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(format_parent_array(t), "5; 0 0 1 1");
  EXPECT_EQ(format_parent_array(RootedTree()), "1;");
  EXPECT_EQ(format_parent_array(t.rerooted(3)), "5; 0 0 1 1");
  EXPECT_THROW(parse_parent_array("5; 0 0 1"), ParseError);
  EXPECT_THROW(parse_parent_array("3; 0 9"), ParseError);
  EXPECT_THROW(parse_parent_array("3; 2 1"), ParseError);  // cycle 1-2, no path to 0
  EXPECT_THROW(parse_parent_array("0 0 1"), ParseError);
  std::istringstream in("\n3; 0 1\n");
  EXPECT_EQ(parse_tree(in).edge_count(), 2U);
}

}  // namespace
}  // namespace esembed
