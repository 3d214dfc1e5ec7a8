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
#include <stdexcept>
#include <string>
#include <vector>

#include "esembed/embedding.hpp"
#include "esembed/graph.hpp"
#include "esembed/tree.hpp"

namespace esembed {

/// Where and why an embedding phase gave up.
struct FailureTrace {
  std::string phase;
  Vertex tree_vertex = kNoVertex;
  std::size_t candidate_count = 0;
  std::size_t used_count = 0;
  std::string reason;
};

/// Thrown by the constructive phases. `regime` marks failures of a size precondition
/// (not enough degree-2 mass, prefix too long, sampling budget exhausted) as opposed to
/// an empty candidate set while placing a vertex.
class EngineFailure : public std::runtime_error {
 public:
  EngineFailure(FailureTrace trace, bool regime)
      : std::runtime_error(trace.phase + ": " + trace.reason), trace_(std::move(trace)), regime_(regime) {}

  const FailureTrace& trace() const noexcept { return trace_; }
  bool regime() const noexcept { return regime_; }

 private:
  FailureTrace trace_;
  bool regime_;
};

/// Vertices placed by one phase, in order.
struct PhaseRecord {
  std::string phase;
  std::size_t placed = 0;
  std::size_t used_after = 0;
};

// Shared greedy step: unused host vertices inside `allowed` that are adjacent to the
// image of every already-embedded tree neighbour of `t`.
VertexSet placement_candidates(const Graph& g, const RootedTree& tree, const PartialEmbedding& e, Vertex t,
                               const VertexSet& allowed);

/// Places t on the lowest-id candidate or throws EngineFailure naming `phase`.
Vertex place_lowest(const Graph& g, const RootedTree& tree, PartialEmbedding& e, Vertex t, const VertexSet& allowed,
                    const std::string& phase);

}  // namespace esembed
