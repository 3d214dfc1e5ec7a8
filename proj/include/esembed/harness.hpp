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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esembed/embedding.hpp"
#include "esembed/graph.hpp"
#include "esembed/oracle.hpp"
#include "esembed/params.hpp"
#include "esembed/trace.hpp"
#include "esembed/tree.hpp"

namespace esembed {

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  ParameterSet params = ParameterSet::desk(Rational(1, 20));
  std::uint64_t seed = 1;
  std::optional<std::chrono::milliseconds> deadline;  // per oracle call
  bool fallback = false;         // run the oracle on the whole host after an engine failure
  bool trace = false;            // include per-phase detail and failure traces
  bool skip_dense_spot = false;  // go straight to Case 1 / Case 2
  bool sample_leaves = false;    // Case 1 leaf set drawn at random instead of lowest ids
  OutputFormat format = OutputFormat::kJson;
};

enum class Outcome { kEmbeddedByEngine, kEmbeddedByOracleFallback, kNoEmbedding, kIndeterminate };
const char* to_string(Outcome o) noexcept;

/// Counters of a successful Case 2 run, checked against their budgets.
struct Case2Ledger {
  std::size_t draws = 0;
  std::size_t failed_A = 0;
  std::size_t failed_B = 0;
  std::size_t failed_attempts = 0;
  std::size_t R1_paths = 0;
  std::size_t R2_paths = 0;
  std::size_t R3_paths = 0;
  std::size_t J = 0;
  std::size_t H_pi = 0;
  std::size_t reserve = 0;
  std::size_t landed = 0;
  std::size_t off_permutation = 0;
  std::size_t bridges = 0;
  std::size_t W = 0;
  std::size_t s_prime = 0;
  std::size_t image_in_s_prime = 0;
  std::size_t image_size = 0;
  bool severed_edge_ok = true;  // the Q1-Q2 edge maps onto a host edge
};

struct RunReport {
  std::string digest;        // FNV-1a 64 of "graph6|parent array"
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string delta;
  std::string branch;        // hypothesis-failed | dense-spot | case1 | case2
  bool fallback_used = false;
  Outcome outcome = Outcome::kIndeterminate;
  std::vector<std::pair<std::string, bool>> flags;  // numeric checks, in evaluation order
  std::vector<PhaseRecord> phases;
  std::optional<Case2Ledger> case2;
  std::optional<SearchStats> oracle;
  std::optional<FailureTrace> failure;
  bool failure_regime = false;
  std::vector<Vertex> embedding;  // host ids per tree vertex; empty unless embedded
};

/// Full pipeline. Every embedding is re-validated on the input instance before it is
/// stored; an invalid one throws std::logic_error.
RunReport cmd_embed(const Graph& g, const RootedTree& t, const RunConfig& config);

std::string instance_digest(const Graph& g, const RootedTree& t);

std::string to_json(const RunReport& r, bool trace);
std::string csv_header_embed();
std::string to_csv(const RunReport& r);

// ---- verify ------------------------------------------------------------------------

std::string to_json(const VerifyReport& r);
std::string csv_header_verify();
std::string to_csv(const VerifyReport& r);

struct StreamVerdict {
  std::size_t line = 0;
  std::string graph6;
  bool hypothesis = false;     // d(G) > k-1
  Decision decision = Decision::kContained;  // over all trees with k edges
  std::vector<std::string> failing_trees;
  std::uint64_t nodes_expanded = 0;
};

/// One verdict per graph6 line, in input order. Malformed lines throw ParseError.
std::vector<StreamVerdict> verify_stream(std::istream& in, std::size_t k,
                                         std::optional<std::chrono::milliseconds> deadline);
std::string to_json_line(const StreamVerdict& v);

// ---- stats -------------------------------------------------------------------------

struct StatsReport {
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t prefix = 0;
  std::size_t count_A = 0;
  std::size_t count_B = 0;
  std::size_t count_AB = 0;
  std::map<std::size_t, std::size_t> J_histogram;
  std::map<std::size_t, std::size_t> H_histogram;
};

/// Monte-Carlo over sample_permutation with S' as the used set.
StatsReport cmd_stats(const Graph& g, std::size_t k, const ParameterSet& p, std::uint64_t seed, std::size_t samples);
std::string to_json(const StatsReport& r);
std::string csv_header_stats();
std::string to_csv(const StatsReport& r);

// ---- explain -----------------------------------------------------------------------

/// Classification, thresholds and the case the engine would take, without embedding.
std::string explain_json(const Graph& g, const RootedTree& t, const RunConfig& config);

}  // namespace esembed
