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

#include "esembed/graph.hpp"
#include "esembed/tree.hpp"

namespace esembed {

// Injective partial map tree vertex -> host vertex. `place` keeps injectivity and
// the used set in sync; host adjacency is not checked here (see validate_embedding).
class PartialEmbedding {
 public:
  PartialEmbedding() = default;
  PartialEmbedding(std::size_t tree_size, std::size_t host_size)
      : image_(tree_size, kNoVertex), used_(host_size) {}

  /// Builds from a raw image vector without enforcing injectivity, so that
  /// validate_embedding can be exercised on arbitrary (possibly broken) maps.
  static PartialEmbedding from_raw(std::vector<Vertex> image, std::size_t host_size);

  std::size_t tree_size() const noexcept { return image_.size(); }
  std::size_t host_size() const noexcept { return used_.universe(); }

  Vertex image(Vertex t) const noexcept { return image_[static_cast<std::size_t>(t)]; }
  bool is_mapped(Vertex t) const noexcept { return image_[static_cast<std::size_t>(t)] != kNoVertex; }
  const std::vector<Vertex>& images() const noexcept { return image_; }
  const VertexSet& used() const noexcept { return used_; }
  std::size_t mapped_count() const noexcept { return mapped_; }
  bool is_total() const noexcept { return mapped_ == image_.size(); }

  /// Throws std::logic_error if t is already mapped or h already used.
  void place(Vertex t, Vertex h);
  void unplace(Vertex t);

  /// Relabels host ids through `to_host` (local -> host) into a host of size host_size.
  PartialEmbedding lifted(const std::vector<Vertex>& to_host, std::size_t host_size) const;

 private:
  std::vector<Vertex> image_;
  VertexSet used_;
  std::size_t mapped_ = 0;
};

struct InjectivityViolation {
  Vertex host;
  std::vector<Vertex> tree_vertices;
};

struct ValidityReport {
  bool size_mismatch = false;
  std::vector<Vertex> out_of_range;                 // tree vertices mapped outside the host
  std::vector<InjectivityViolation> injectivity;    // host vertices hit more than once
  std::vector<Edge> non_adjacent;                   // tree edges (parent, child) whose images are not adjacent
  std::size_t mapped = 0;
  bool total = false;

  bool ok() const noexcept {
    return !size_mismatch && out_of_range.empty() && injectivity.empty() && non_adjacent.empty();
  }
  /// A total map with an empty report certifies T ⊆ G.
  bool certifies_containment() const noexcept { return ok() && total; }
};

ValidityReport validate_embedding(const Graph& g, const RootedTree& t, const PartialEmbedding& e);

}  // namespace esembed
