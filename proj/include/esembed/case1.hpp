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
#include <vector>

#include "esembed/embedding.hpp"
#include "esembed/params.hpp"
#include "esembed/preprocess.hpp"
#include "esembed/rng.hpp"
#include "esembed/trace.hpp"
#include "esembed/tree.hpp"

namespace esembed {

// Embedding for trees with many leaves.
//
// A set L of leaves is cut off; their parents P1 plus the root are closed upward into P2
// (add any vertex with two children in P2 until none is left), and P3 collects the
// parents of P2. T[P2] goes into the high-degree set H, the rest of T - L is embedded
// top-down inside G' (vertices of P3 need a common neighbour of their parent and their
// P2-child), and the leaves are hung off their H-images last.

/// ⌈c_leafcut·√δ·k⌉.
std::size_t leaf_target(std::size_t k, const ParameterSet& p);

/// True iff t has at least leaf_target(k, p) vertices of degree 1.
bool has_many_leaves(const RootedTree& t, std::size_t k, const ParameterSet& p);

struct LeafApparatus {
  RootedTree tree;            // the input tree rooted at r
  std::vector<Vertex> L;      // ascending
  std::vector<Vertex> P1;
  std::vector<Vertex> P2;
  std::vector<Vertex> P3;
  VertexSet in_L, in_P2, in_P3;  // membership over tree vertices

  Vertex root() const noexcept { return tree.root(); }
};

// The root r is the input root unless that is a leaf, in which case the lowest-id
// non-leaf is used. Leaves are the lowest-id ones, or a uniform sample when
// `leaf_sampler` is given.
LeafApparatus build_leaf_apparatus(const RootedTree& t, std::size_t k, const ParameterSet& p,
                                   Rng* leaf_sampler = nullptr);

struct Case1Result {
  PartialEmbedding embedding;
  std::vector<PhaseRecord> phases;
  std::size_t double_constrained = 0;   // P3 vertices placed on a common neighbour
  std::size_t embedded_before_leaves = 0;
};

/// Throws EngineFailure with a phase-tagged trace if a candidate set runs dry.
Case1Result embed_case1(const Graph& g, const Classification& c, const LeafApparatus& app);

}  // namespace esembed
