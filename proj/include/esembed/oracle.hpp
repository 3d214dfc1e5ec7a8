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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "esembed/embedding.hpp"
#include "esembed/graph.hpp"
#include "esembed/rational.hpp"
#include "esembed/tree.hpp"

namespace esembed {

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::size_t max_depth = 0;
  std::chrono::microseconds elapsed{0};
};

enum class Decision { kContained, kNotContained, kIndeterminate };

const char* to_string(Decision d) noexcept;

struct OracleOptions {
  std::optional<std::chrono::milliseconds> deadline;
  bool pruning = true;
};

struct OracleResult {
  Decision decision = Decision::kIndeterminate;
  std::optional<PartialEmbedding> embedding;  // total and valid iff kContained
  SearchStats stats;
};

// Exact backtracking search for a copy of t in g. Tree vertices are taken in BFS order
// from a centroid, larger subtrees first, so every vertex after the first only has to
// be adjacent to its (already placed) parent. Host candidates are tried by increasing
// number of free neighbours, then id. Pruning only removes candidates that cannot
// lead to a solution: too few free neighbours for the remaining children, or a
// connected component smaller than the tree.
OracleResult contains_tree_exact(const Graph& g, const RootedTree& t, const OracleOptions& options = {});

// ---- enumeration -------------------------------------------------------------------

/// Canonical string of a free (unrooted) tree; equal iff isomorphic.
std::string tree_canonical_form(const RootedTree& t);

/// Tree with the given Prüfer sequence on seq.size() + 2 vertices, rooted at 0.
RootedTree prufer_decode(const std::vector<Vertex>& seq);

/// One representative per isomorphism class of trees with k edges (k <= 8), rooted at 0.
std::vector<RootedTree> all_trees(std::size_t k);

/// Canonical code of a graph with at most 7 vertices (upper-triangle bits under the
/// lexicographically smallest relabelling).
std::uint64_t graph_canonical_code(const Graph& g);

/// Number of labelled graphs on n vertices with at least min_edges edges.
double labelled_graph_count(std::size_t n, std::size_t min_edges);

// Calls sink for every labelled graph on n vertices with >= min_edges edges, or, with
// iso_reject (n <= 7 only), for one graph per isomorphism class.
void for_each_dense_graph(std::size_t n, std::size_t min_edges, bool iso_reject,
                          const std::function<void(const Graph&)>& sink);

// ---- conjecture verification -------------------------------------------------------

enum class VerifyMode { kExhaustive, kSampled };

struct VerifyOptions {
  std::size_t k = 3;
  std::size_t n_max = 5;
  VerifyMode mode = VerifyMode::kExhaustive;
  std::size_t samples = 1000;       // graphs drawn in sampled mode
  std::uint64_t seed = 1;
  Rational delta{1, 10};            // for the n <= (1 + delta)k sub-report
  std::optional<std::chrono::milliseconds> deadline;  // per oracle call
  std::size_t workers = 1;
  bool iso_reject = true;
  double max_instances = 5e7;       // refuse exhaustive runs estimated above this
};

struct Counterexample {
  std::string graph6;
  std::string tree;  // parent-array format
};

struct VerifyReport {
  std::size_t k = 0;
  std::size_t graphs = 0;           // hypothesis-satisfying graphs examined
  std::size_t trees = 0;
  std::size_t pairs = 0;
  std::size_t indeterminate = 0;
  std::size_t graphs_in_regime = 0; // n <= (1 + delta)k
  std::size_t counterexamples_in_regime = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};
};

/// Throws RejectedInput when exhaustive enumeration is infeasible (the message carries
/// the estimated instance count) or n_max > 10.
VerifyReport verify_conjecture(const VerifyOptions& options);

}  // namespace esembed
