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

#include "esembed/trace.hpp"

namespace esembed {

VertexSet placement_candidates(const Graph& g, const RootedTree& tree, const PartialEmbedding& e, Vertex t,
                               const VertexSet& allowed) {
  VertexSet cand = allowed - e.used();
  for (Vertex w : tree.neighbors(t)) {
    if (e.is_mapped(w)) cand &= g.neighbors(e.image(w));
  }
  return cand;
}

Vertex place_lowest(const Graph& g, const RootedTree& tree, PartialEmbedding& e, Vertex t, const VertexSet& allowed,
                    const std::string& phase) {
  const VertexSet cand = placement_candidates(g, tree, e, t, allowed);
  const Vertex h = cand.first();
  if (h == kNoVertex) {
    throw EngineFailure({phase, t, 0, e.used().size(), "no unused host vertex adjacent to all embedded neighbours"},
                        false);
  }
  e.place(t, h);
  return h;
}

}  // namespace esembed
