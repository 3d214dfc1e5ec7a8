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

#include "esembed/embedding.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace esembed {

PartialEmbedding PartialEmbedding::from_raw(std::vector<Vertex> image, std::size_t host_size) {
  PartialEmbedding e;
  e.used_ = VertexSet(host_size);
  for (Vertex h : image) {
    if (h == kNoVertex) continue;
    ++e.mapped_;
    if (h >= 0 && static_cast<std::size_t>(h) < host_size) e.used_.insert(h);
  }
  e.image_ = std::move(image);
  return e;
}

void PartialEmbedding::place(Vertex t, Vertex h) {
  if (image_[static_cast<std::size_t>(t)] != kNoVertex) {
    throw std::logic_error("tree vertex " + std::to_string(t) + " is already embedded");
  }
  if (used_.contains(h)) throw std::logic_error("host vertex " + std::to_string(h) + " is already used");
  image_[static_cast<std::size_t>(t)] = h;
  used_.insert(h);
  ++mapped_;
}

void PartialEmbedding::unplace(Vertex t) {
  const Vertex h = image_[static_cast<std::size_t>(t)];
  if (h == kNoVertex) return;
  used_.erase(h);
  image_[static_cast<std::size_t>(t)] = kNoVertex;
  --mapped_;
}

PartialEmbedding PartialEmbedding::lifted(const std::vector<Vertex>& to_host, std::size_t host_size) const {
  PartialEmbedding out(image_.size(), host_size);
  for (std::size_t t = 0; t < image_.size(); ++t) {
    if (image_[t] != kNoVertex) out.place(static_cast<Vertex>(t), to_host[static_cast<std::size_t>(image_[t])]);
  }
  return out;
}

ValidityReport validate_embedding(const Graph& g, const RootedTree& t, const PartialEmbedding& e) {
  ValidityReport report;
  if (e.tree_size() != t.vertex_count()) {
    report.size_mismatch = true;
    return report;
  }
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::map<Vertex, std::vector<Vertex>> preimages;
  for (std::size_t v = 0; v < e.tree_size(); ++v) {
    const Vertex h = e.image(static_cast<Vertex>(v));
    if (h == kNoVertex) continue;
    ++report.mapped;
    if (h < 0 || h >= n) {
      report.out_of_range.push_back(static_cast<Vertex>(v));
      continue;
    }
    preimages[h].push_back(static_cast<Vertex>(v));
  }
  for (auto& [h, tv] : preimages) {
    if (tv.size() > 1) report.injectivity.push_back({h, tv});
  }
  for (const auto& [p, c] : t.edges()) {
    const Vertex hp = e.image(p);
    const Vertex hc = e.image(c);
    if (hp == kNoVertex || hc == kNoVertex) continue;
    if (hp < 0 || hp >= n || hc < 0 || hc >= n) continue;
    if (hp == hc || !g.adjacent(hp, hc)) report.non_adjacent.emplace_back(p, c);
  }
  report.total = report.mapped == t.vertex_count();
  return report;
}

}  // namespace esembed
