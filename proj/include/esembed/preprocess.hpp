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
#include <optional>
#include <vector>

#include "esembed/graph.hpp"
#include "esembed/params.hpp"
#include "esembed/rng.hpp"

namespace esembed {

struct Reduction {
  Graph graph;                        // surviving vertices, relabelled in increasing host order
  std::vector<Vertex> to_host;        // reduced id -> input id
  std::vector<Vertex> deleted;        // input ids in deletion order
};

// Deletes vertices of degree < k/2 until none is left. Each deletion keeps the average
// degree above k-1, so the result is non-empty with minimum degree >= k/2.
// Throws RejectedInput unless average_degree(g) > k-1.
Reduction minimal_reduction(const Graph& g, std::size_t k);
/// Same fixpoint, but the next vertex to delete is drawn uniformly from the eligible ones.
Reduction minimal_reduction(const Graph& g, std::size_t k, Rng& order);

// Degree classes of a (reduced) host with respect to a tree with k edges.
struct Classification {
  std::size_t n = 0;
  std::size_t k = 0;
  std::int64_t a = 0;          // n - k
  VertexSet S;                 // degree <= c_small_k·k + c_small_a·a
  std::size_t b = 0;           // |S|
  VertexSet S_prime;           // the |S'| lowest (degree, id) vertices
  VertexSet H;                 // degree >= k
  VertexSet G_prime;           // V \ S'

  std::size_t min_degree_gprime = 0;
  std::size_t min_codegree_gprime = 0;  // over pairs of G' inside G'; 0 if |G'| < 2

  // Numeric checks of the inequalities the construction relies on.
  bool in_regime = false;      // n <= (1 + delta) k
  bool high_set_large = false; // |H| > k/6
  bool gprime_min_degree = false;  // δ(G') >= k - 4√δk
  bool gprime_codegree = false;    // codegree in G' >= k - 9√δk
  bool high_disjoint_small = false;  // H ∩ S = ∅
};

Classification classify(const Graph& g, std::size_t k, const ParameterSet& p);

struct DenseSpot {
  Vertex center = kNoVertex;
  VertexSet vertices;          // (N[center] \ S) ∪ {center}
  InducedSubgraph subgraph;
  std::size_t min_degree = 0;
  bool spans_tree = false;     // |V(G_v)| >= k + 1
  bool min_degree_above_two_thirds = false;  // δ(G_v) > 2k/3
};

/// Returns the spot around the lowest-id vertex with degree >= k + b, or nullopt,
/// which certifies Δ(G) < k + b.
std::optional<DenseSpot> dense_spot_test(const Graph& g, std::size_t k, const Classification& c);

}  // namespace esembed
