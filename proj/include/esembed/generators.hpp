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
#include <cstdint>
#include <string>
#include <string_view>

#include "esembed/graph.hpp"
#include "esembed/rational.hpp"
#include "esembed/tree.hpp"

namespace esembed {

enum class TreeFamily { kPath, kStar, kSpider, kCaterpillar, kBroom, kPruferRandom };
enum class HostFamily { kComplete, kCompleteMinusMatching, kGnpDense, kDisjointCliques, kPaperRegime };

const char* to_string(TreeFamily f) noexcept;
const char* to_string(HostFamily f) noexcept;
/// Throws DomainError on an unknown name.
TreeFamily parse_tree_family(std::string_view name);
HostFamily parse_host_family(std::string_view name);

// Family knobs; 0 selects the default noted next to each field.
struct TreeParams {
  std::size_t legs = 0;    // spider: 3
  std::size_t spine = 0;   // caterpillar: ⌈(k+1)/2⌉ spine vertices
  std::size_t handle = 0;  // broom: ⌈k/2⌉ handle edges
};

struct HostParams {
  std::size_t k = 0;
  std::size_t n = 0;          // complete, complete_minus_matching, gnp_dense: k + 1
  Rational p{9, 10};          // gnp_dense edge probability
  std::size_t matching = 0;   // complete_minus_matching: ⌊n/2⌋
  std::size_t copies = 2;     // disjoint_cliques: copies of K_k
  Rational delta{1, 20};      // paper_regime: n = ⌈(1 + delta)k⌉
  std::size_t slack = 0;      // paper_regime: edges kept above the 2m > n(k-1) threshold
};

// Every family has exactly k edges and is rooted at 0. Only prufer_random uses the
// seed; it is uniform over the (k+1)^(k-1) labelled trees. Throws DomainError on
// k = 0 or on knobs outside the family's range.
RootedTree gen_tree(TreeFamily family, std::size_t k, std::uint64_t seed = 1, const TreeParams& params = {});

// Throws DomainError on unsatisfiable parameters. paper_regime deletes a uniformly
// random edge order from K_n while 2m > n(k-1) stays true, so the result has average
// degree > k-1 and n = ⌈(1 + delta)k⌉.
Graph gen_host(HostFamily family, const HostParams& params, std::uint64_t seed = 1);

/// Degree-profile predicates each family's output satisfies.
bool matches_family(const RootedTree& t, TreeFamily family, const TreeParams& params = {});
bool matches_family(const Graph& g, HostFamily family, const HostParams& params);

// Text form "tree:<family>[:key=value,...]" or "host:<family>[:key=value,...]".
// Keys: k, seed, legs, spine, handle (trees); k, n, p, matching, copies, delta, slack
// (hosts). Rational values accept the Rational::parse syntax.
struct InstanceSpec {
  enum class Kind { kTree, kHost };
  Kind kind = Kind::kTree;
  TreeFamily tree_family = TreeFamily::kPath;
  HostFamily host_family = HostFamily::kComplete;
  std::size_t k = 0;
  std::uint64_t seed = 1;
  TreeParams tree;
  HostParams host;

  /// Throws DomainError on unknown kinds, families or keys and on malformed values.
  static InstanceSpec parse(std::string_view text);
  std::string to_string() const;

  RootedTree make_tree() const;
  Graph make_host() const;
};

}  // namespace esembed
