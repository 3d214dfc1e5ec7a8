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
#include <optional>
#include <vector>

#include "esembed/embedding.hpp"
#include "esembed/params.hpp"
#include "esembed/preprocess.hpp"
#include "esembed/rng.hpp"
#include "esembed/trace.hpp"
#include "esembed/tree.hpp"

namespace esembed {

// Embedding for trees with few leaves, which consist mostly of long degree-2 paths.
//
//  1. D1 (degree != 2) goes anywhere in G'. A short prefix R1 of the degree-2 paths
//     then swallows all of S' through every third path vertex (the X positions).
//  2. A random permutation π of the unused vertices is sampled until its prefix V_π
//     has few non-adjacent consecutive pairs (A) and enough high-degree vertices stay
//     outside with almost full neighbourhoods (B); H'_π is reserved from those.
//  3. The remaining paths R2, shortest first, are laid along V_π in order. A missing
//     consecutive edge costs one off-permutation "bridge" vertex.
//  4. Whatever is left (R3) interleaves its even positions with H'_π; odd positions
//     flanked by two H'_π vertices (W) are embedded last on a common neighbour.

using Path = std::vector<Vertex>;

struct PathDecomposition {
  VertexSet D1;                 // over tree vertices
  VertexSet D2;
  std::vector<Path> R;          // components of T[D2], each listed end to end
  std::vector<Path> R1;
  std::vector<Path> R2;
  std::optional<Edge> severed;  // (last vertex of Q1, first vertex of Q2)
  std::size_t r1_target = 0;

  std::size_t r1_vertices() const;
};

PathDecomposition decompose_degree2(const RootedTree& t);

/// ⌊c_R1·√δ·k⌋.
std::size_t r1_target(std::size_t k, const ParameterSet& p);

/// Splits with r1_target(k, p). Throws EngineFailure (regime) if T[D2] is too small.
PathDecomposition split_paths(PathDecomposition d, std::size_t k, const ParameterSet& p);
// R1' = fewest paths (longest first, ties by position) covering >= target vertices;
// its last path Q is cut so that R1 covers exactly `target`.
PathDecomposition split_paths_to(PathDecomposition d, std::size_t target);

struct Stage1Result {
  PartialEmbedding embedding;
  std::vector<Vertex> x_prime;    // tree vertices sent into S'
  std::size_t used_after_d1 = 0;
  std::size_t used = 0;           // |U|
  bool budget_ok = false;         // |U| <= |D1| + r1_target
  bool u_small = false;           // |U| <= k/300
  std::vector<PhaseRecord> phases;
};

/// Throws EngineFailure: regime if |X| < |S'|, placement otherwise.
Stage1Result embed_D1_and_R1(const Graph& g, const RootedTree& t, const Classification& c,
                             const PathDecomposition& d);

struct PermutationSample {
  std::vector<Vertex> pi;         // permutation of V(G) \ used
  std::size_t prefix = 0;         // |V_π|
  VertexSet V_pi;
  std::vector<std::size_t> J;     // 0-based i < prefix-1 with pi[i] !~ pi[i+1]
  VertexSet H_pi;
  bool passes_A = false;
  bool passes_B = false;
};

/// ⌈c_prefix·k⌉.
std::size_t prefix_length(std::size_t k, const ParameterSet& p);
/// ⌈c_B·√δ·k⌉, the size of H'_π.
std::size_t reserve_size(std::size_t k, const ParameterSet& p);

/// Throws EngineFailure (regime) if fewer than prefix_length(k, p) vertices are unused.
PermutationSample sample_permutation(const Graph& g, const Classification& c, const VertexSet& used, std::size_t k,
                                     const ParameterSet& p, Rng& rng);

struct RetryOutcome {
  std::optional<PermutationSample> accepted;
  std::size_t draws = 0;
  std::size_t failed_A = 0;
  std::size_t failed_B = 0;
};

RetryOutcome retry_sample(const Graph& g, const Classification& c, const VertexSet& used, std::size_t k,
                          const ParameterSet& p, Rng& rng, std::size_t budget);

/// Lowest-id reserve_size(k, p) vertices of H_π; empty optional if (B) fails.
std::optional<VertexSet> choose_reserve(const PermutationSample& s, std::size_t k, const ParameterSet& p);

struct R2Result {
  std::vector<Path> R3;
  std::size_t landed = 0;          // vertices placed on V_π
  std::size_t off_permutation = 0; // vertices placed outside V_π
  std::size_t bridges = 0;
  bool prefix_exhausted = false;
  bool off_permutation_ok = false; // off_permutation <= 2|R2| + |J_π|
  bool r3_small = false;           // |R3| <= (1 - c_prefix)|R2| + 1
};

R2Result embed_R2_along_permutation(const Graph& g, const RootedTree& t, const Classification& c,
                                    const PathDecomposition& d, const PermutationSample& s,
                                    const VertexSet& reserve, PartialEmbedding& e, const ParameterSet& p);

struct EndgameResult {
  std::size_t into_reserve = 0;
  std::size_t W = 0;
  std::size_t rest = 0;
  std::size_t unused_at_end = 0;
};

EndgameResult embed_R3_endgame(const Graph& g, const RootedTree& t, const Classification& c,
                               const std::vector<Path>& R3, const VertexSet& reserve, PartialEmbedding& e);

struct Case2Result {
  PartialEmbedding embedding;
  PathDecomposition decomposition;
  Stage1Result stage1;
  PermutationSample sample;
  R2Result r2;
  EndgameResult endgame;
  std::size_t draws = 0;
  std::size_t failed_A = 0;
  std::size_t failed_B = 0;
  std::size_t failed_attempts = 0;  // accepted samples whose later phases ran dry
  std::vector<PhaseRecord> phases;
};

// Full pipeline with the retry budget p.retry_budget shared between rejected samples
// and accepted samples whose later phases failed. Throws EngineFailure.
Case2Result embed_case2(const Graph& g, const RootedTree& t, const Classification& c, const ParameterSet& p,
                        Rng& rng);

}  // namespace esembed
