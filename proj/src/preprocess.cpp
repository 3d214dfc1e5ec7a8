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

#include "esembed/preprocess.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "esembed/errors.hpp"

namespace esembed {
namespace {

Reduction reduce(const Graph& g, std::size_t k, Rng* order) {
  if (g.vertex_count() == 0 || average_degree(g) <= Rational(static_cast<std::int64_t>(k) - 1)) {
    throw RejectedInput("minimal_reduction requires average degree > k-1");
  }
  const std::size_t n = g.vertex_count();
  VertexSet alive = VertexSet::full(n);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));

  Reduction out;
  std::vector<Vertex> eligible;
  while (true) {
    eligible.clear();
    alive.for_each([&](Vertex v) {
      if (2 * deg[static_cast<std::size_t>(v)] < k) eligible.push_back(v);
    });
    if (eligible.empty()) break;
    const Vertex victim = order != nullptr ? eligible[order->below(eligible.size())] : eligible.front();
    alive.erase(victim);
    (g.neighbors(victim) & alive).for_each([&](Vertex w) { --deg[static_cast<std::size_t>(w)]; });
    out.deleted.push_back(victim);
  }
  InducedSubgraph sub = induced(g, alive);
  out.graph = std::move(sub.graph);
  out.to_host = std::move(sub.to_host);
  return out;
}

}  // namespace

Reduction minimal_reduction(const Graph& g, std::size_t k) { return reduce(g, k, nullptr); }

Reduction minimal_reduction(const Graph& g, std::size_t k, Rng& order) { return reduce(g, k, &order); }

Classification classify(const Graph& g, std::size_t k, const ParameterSet& p) {
  Classification c;
  const std::size_t n = g.vertex_count();
  const auto kk = static_cast<std::int64_t>(k);
  c.n = n;
  c.k = k;
  c.a = static_cast<std::int64_t>(n) - kk;
  c.S = VertexSet(n);
  c.H = VertexSet(n);
  c.S_prime = VertexSet(n);

  const Rational small_threshold = p.c_small_k * Rational(kk) + p.c_small_a * Rational(c.a);
  for (std::size_t v = 0; v < n; ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
    if (Rational(d) <= small_threshold) c.S.insert(static_cast<Vertex>(v));
    if (d >= kk) c.H.insert(static_cast<Vertex>(v));
  }
  c.b = c.S.size();

  const auto s_size = std::min<std::size_t>(n, static_cast<std::size_t>(scaled_sqrt_ceil(p.c_sprime, p.delta, kk)));
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::sort(by_degree.begin(), by_degree.end(), [&](Vertex x, Vertex y) {
    const auto dx = g.degree(x);
    const auto dy = g.degree(y);
    return dx != dy ? dx < dy : x < y;
  });
  for (std::size_t i = 0; i < s_size; ++i) c.S_prime.insert(by_degree[i]);
  c.G_prime = c.S_prime.complement();

  const auto gp = c.G_prime.to_vector();
  c.min_degree_gprime = std::numeric_limits<std::size_t>::max();
  for (Vertex v : gp) c.min_degree_gprime = std::min(c.min_degree_gprime, g.degree_in(v, c.G_prime));
  if (gp.empty()) c.min_degree_gprime = 0;
  c.min_codegree_gprime = gp.size() < 2 ? 0 : std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < gp.size(); ++i) {
    const VertexSet nu = g.neighbors(gp[i]) & c.G_prime;
    for (std::size_t j = i + 1; j < gp.size(); ++j) {
      c.min_codegree_gprime = std::min(c.min_codegree_gprime, intersection_size(nu, g.neighbors(gp[j])));
    }
  }

  c.in_regime = Rational(c.a) <= p.delta * Rational(kk);
  c.high_set_large = Rational(static_cast<std::int64_t>(c.H.size())) > Rational(kk, 6);
  c.gprime_min_degree =
      at_most_scaled_sqrt(kk - static_cast<std::int64_t>(c.min_degree_gprime), Rational(4), p.delta, kk);
  c.gprime_codegree =
      gp.size() >= 2 && at_most_scaled_sqrt(kk - static_cast<std::int64_t>(c.min_codegree_gprime), Rational(9), p.delta, kk);
  c.high_disjoint_small = intersection_size(c.H, c.S) == 0;
  return c;
}

std::optional<DenseSpot> dense_spot_test(const Graph& g, std::size_t k, const Classification& c) {
  const std::size_t threshold = k + c.b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) < threshold) continue;
    DenseSpot spot;
    spot.center = static_cast<Vertex>(v);
    spot.vertices = g.neighbors(spot.center) - c.S;
    spot.vertices.insert(spot.center);
    spot.subgraph = induced(g, spot.vertices);
    spot.min_degree = spot.subgraph.graph.min_degree();
    spot.spans_tree = spot.vertices.size() >= k + 1;
    spot.min_degree_above_two_thirds = 3 * spot.min_degree > 2 * k;
    return spot;
  }
  return std::nullopt;
}

}  // namespace esembed
