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

#include "esembed/case2.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace esembed {
namespace {

std::size_t total_vertices(const std::vector<Path>& paths) {
  std::size_t s = 0;
  for (const auto& p : paths) s += p.size();
  return s;
}

}  // namespace

std::size_t PathDecomposition::r1_vertices() const { return total_vertices(R1); }

PathDecomposition decompose_degree2(const RootedTree& t) {
  const std::size_t size = t.vertex_count();
  PathDecomposition d;
  d.D2 = VertexSet::of(size, t.vertices_of_degree(2));
  d.D1 = d.D2.complement();

  auto d2_degree = [&](Vertex v) {
    std::size_t c = 0;
    for (Vertex w : t.neighbors(v)) c += d.D2.contains(w) ? 1 : 0;
    return c;
  };
  VertexSet seen(size);
  d.D2.for_each([&](Vertex start) {
    if (seen.contains(start) || d2_degree(start) > 1) return;
    Path path{start};
    seen.insert(start);
    Vertex prev = kNoVertex;
    Vertex cur = start;
    while (true) {
      Vertex next = kNoVertex;
      for (Vertex w : t.neighbors(cur)) {
        if (w != prev && d.D2.contains(w)) next = w;
      }
      if (next == kNoVertex) break;
      path.push_back(next);
      seen.insert(next);
      prev = cur;
      cur = next;
    }
    d.R.push_back(std::move(path));
  });
  return d;
}

std::size_t r1_target(std::size_t k, const ParameterSet& p) {
  return static_cast<std::size_t>(scaled_sqrt_floor(p.c_R1, p.delta, static_cast<std::int64_t>(k)));
}

PathDecomposition split_paths(PathDecomposition d, std::size_t k, const ParameterSet& p) {
  return split_paths_to(std::move(d), r1_target(k, p));
}

PathDecomposition split_paths_to(PathDecomposition d, std::size_t target) {
  d.R1.clear();
  d.R2.clear();
  d.severed.reset();
  d.r1_target = target;
  const std::size_t mass = total_vertices(d.R);
  if (mass < target) {
    throw EngineFailure({"case2.split", kNoVertex, mass, 0,
                         "degree-2 paths cover " + std::to_string(mass) + " vertices, R1 needs " +
                             std::to_string(target)},
                        true);
  }
  if (target == 0) {
    d.R2 = d.R;
    return d;
  }
  std::vector<std::size_t> by_length(d.R.size());
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t x, std::size_t y) { return d.R[x].size() > d.R[y].size(); });
  std::vector<bool> chosen(d.R.size(), false);
  std::size_t covered = 0;
  std::size_t q = 0;
  for (std::size_t idx : by_length) {
    chosen[idx] = true;
    covered += d.R[idx].size();
    q = idx;
    if (covered >= target) break;
  }
  for (std::size_t idx : by_length) {
    if (chosen[idx] && idx != q) d.R1.push_back(d.R[idx]);
  }
  const std::size_t excess = covered - target;
  const Path& Q = d.R[q];
  const auto cut = static_cast<std::ptrdiff_t>(Q.size() - excess);
  d.R1.emplace_back(Q.begin(), Q.begin() + cut);
  for (std::size_t idx = 0; idx < d.R.size(); ++idx) {
    if (!chosen[idx]) d.R2.push_back(d.R[idx]);
  }
  if (excess > 0) {
    d.R2.emplace_back(Q.begin() + cut, Q.end());
    d.severed = Edge{Q[static_cast<std::size_t>(cut - 1)], Q[static_cast<std::size_t>(cut)]};
  }
  return d;
}

Stage1Result embed_D1_and_R1(const Graph& g, const RootedTree& t, const Classification& c,
                             const PathDecomposition& d) {
  Stage1Result out;
  out.embedding = PartialEmbedding(t.vertex_count(), g.vertex_count());
  PartialEmbedding& e = out.embedding;

  for (Vertex v : t.bfs_order()) {
    if (d.D1.contains(v)) place_lowest(g, t, e, v, c.G_prime, "case2.d1");
  }
  out.used_after_d1 = e.used().size();
  out.phases.push_back({"case2.d1", e.mapped_count(), e.used().size()});

  // X: positions 2, 5, 8, ... (1-based) of each R1 path; ⌊m/3⌋ of them on a path of m.
  std::vector<Vertex> X;
  for (const Path& path : d.R1) {
    for (std::size_t pos = 1; pos + 1 < path.size(); pos += 3) X.push_back(path[pos]);
  }
  const std::vector<Vertex> s_prime = c.S_prime.to_vector();
  if (X.size() < s_prime.size()) {
    throw EngineFailure({"case2.fill_s_prime", kNoVertex, X.size(), e.used().size(),
                         "|X| = " + std::to_string(X.size()) + " < |S'| = " + std::to_string(s_prime.size())},
                        true);
  }
  const std::size_t before_x = e.mapped_count();
  for (std::size_t i = 0; i < s_prime.size(); ++i) {
    const Vertex x = X[i];
    const VertexSet slot = placement_candidates(g, t, e, x, VertexSet(g.vertex_count(), {s_prime[i]}));
    if (slot.empty()) {
      throw EngineFailure({"case2.fill_s_prime", x, 0, e.used().size(), "S'-vertex not adjacent to embedded neighbour"},
                          false);
    }
    e.place(x, s_prime[i]);
    out.x_prime.push_back(x);
  }
  out.phases.push_back({"case2.fill_s_prime", e.mapped_count() - before_x, e.used().size()});

  const std::size_t before_r1 = e.mapped_count();
  for (const Path& path : d.R1) {
    for (Vertex x : path) {
      if (e.is_mapped(x)) continue;
      std::size_t embedded = 0;
      std::size_t in_s_prime = 0;
      for (Vertex w : t.neighbors(x)) {
        if (!e.is_mapped(w)) continue;
        ++embedded;
        if (c.S_prime.contains(e.image(w))) ++in_s_prime;
      }
      if (embedded > 2 || in_s_prime > 1) {
        throw std::logic_error("R1 vertex " + std::to_string(x) + " has " + std::to_string(embedded) +
                               " embedded neighbours, " + std::to_string(in_s_prime) + " in S'");
      }
      place_lowest(g, t, e, x, c.G_prime, "case2.r1");
    }
  }
  out.phases.push_back({"case2.r1", e.mapped_count() - before_r1, e.used().size()});

  out.used = e.used().size();
  out.budget_ok = out.used <= d.D1.size() + d.r1_target;
  out.u_small = 300 * out.used <= c.k;
  return out;
}

std::size_t prefix_length(std::size_t k, const ParameterSet& p) {
  return static_cast<std::size_t>((p.c_prefix * Rational(static_cast<std::int64_t>(k))).ceil());
}

std::size_t reserve_size(std::size_t k, const ParameterSet& p) {
  return static_cast<std::size_t>(scaled_sqrt_ceil(p.c_B, p.delta, static_cast<std::int64_t>(k)));
}

PermutationSample sample_permutation(const Graph& g, const Classification& c, const VertexSet& used, std::size_t k,
                                     const ParameterSet& p, Rng& rng) {
  PermutationSample s;
  s.pi = (used.complement()).to_vector();
  s.prefix = prefix_length(k, p);
  if (s.prefix > s.pi.size()) {
    throw EngineFailure({"case2.sample", kNoVertex, s.pi.size(), used.size(),
                         "prefix of " + std::to_string(s.prefix) + " exceeds " + std::to_string(s.pi.size()) +
                             " unused vertices"},
                        true);
  }
  rng.shuffle(std::span<Vertex>(s.pi));

  s.V_pi = VertexSet(g.vertex_count());
  for (std::size_t i = 0; i < s.prefix; ++i) s.V_pi.insert(s.pi[i]);
  for (std::size_t i = 0; i + 1 < s.prefix; ++i) {
    if (!g.adjacent(s.pi[i], s.pi[i + 1])) s.J.push_back(i);
  }

  const VertexSet outside = used | s.V_pi;
  const VertexSet pool = c.G_prime - outside;
  const Rational limit = p.c_nonneigh * Rational(c.a);
  s.H_pi = VertexSet(g.vertex_count());
  (c.H - outside).for_each([&](Vertex v) {
    VertexSet non = pool - g.neighbors(v);
    non.erase(v);
    if (Rational(static_cast<std::int64_t>(non.size())) < limit) s.H_pi.insert(v);
  });

  const auto kk = static_cast<std::int64_t>(k);
  s.passes_A = at_most_scaled_sqrt(static_cast<std::int64_t>(s.J.size()), p.c_A, p.delta, kk);
  s.passes_B = s.H_pi.size() >= reserve_size(k, p);
  return s;
}

RetryOutcome retry_sample(const Graph& g, const Classification& c, const VertexSet& used, std::size_t k,
                          const ParameterSet& p, Rng& rng, std::size_t budget) {
  RetryOutcome out;
  while (out.draws < budget) {
    PermutationSample s = sample_permutation(g, c, used, k, p, rng);
    ++out.draws;
    out.failed_A += s.passes_A ? 0 : 1;
    out.failed_B += s.passes_B ? 0 : 1;
    if (s.passes_A && s.passes_B) {
      out.accepted = std::move(s);
      break;
    }
  }
  return out;
}

std::optional<VertexSet> choose_reserve(const PermutationSample& s, std::size_t k, const ParameterSet& p) {
  const std::size_t want = reserve_size(k, p);
  if (s.H_pi.size() < want) return std::nullopt;
  VertexSet reserve(s.H_pi.universe());
  for (Vertex v = s.H_pi.first(); v != kNoVertex && reserve.size() < want; v = s.H_pi.next_from(v + 1)) {
    reserve.insert(v);
  }
  return reserve;
}

R2Result embed_R2_along_permutation(const Graph& g, const RootedTree& t, const Classification& c,
                                    const PathDecomposition& d, const PermutationSample& s,
                                    const VertexSet& reserve, PartialEmbedding& e, const ParameterSet& p) {
  R2Result out;
  std::vector<Path> order = d.R2;
  std::stable_sort(order.begin(), order.end(), [](const Path& a, const Path& b) { return a.size() < b.size(); });

  const VertexSet landing = c.G_prime - reserve;
  const VertexSet bridge_area = c.G_prime - reserve - s.V_pi;
  std::size_t next = 0;

  auto fail = [&](Vertex x, std::size_t cands, const std::string& why) {
    throw EngineFailure({"case2.r2", x, cands, e.used().size(), why}, false);
  };

  for (std::size_t pi_idx = 0; pi_idx < order.size(); ++pi_idx) {
    const Path& path = order[pi_idx];
    for (std::size_t j = 0; j < path.size(); ++j) {
      while (next < s.prefix && e.used().contains(s.pi[next])) ++next;
      if (next == s.prefix) {
        out.prefix_exhausted = true;
        out.R3.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(j), path.end());
        for (std::size_t rest = pi_idx + 1; rest < order.size(); ++rest) out.R3.push_back(order[rest]);
        goto done;
      }
      const Vertex x = path[j];
      const Vertex v = s.pi[next];
      const VertexSet fits = placement_candidates(g, t, e, x, landing);
      if (fits.contains(v)) {
        e.place(x, v);
        ++next;
        ++out.landed;
        continue;
      }
      const bool last = j + 1 == path.size();
      VertexSet off = placement_candidates(g, t, e, x, bridge_area);
      if (!last) {
        off &= g.neighbors(v);
        if (off.empty()) fail(x, 0, "no bridge vertex adjacent to the previous image and to the next prefix vertex");
        ++out.bridges;
      } else if (off.empty()) {
        fail(x, 0, "no common neighbour for the path end outside V_pi and the reserve");
      }
      e.place(x, off.first());
      ++out.off_permutation;
    }
  }
done:
  out.off_permutation_ok = out.off_permutation <= 2 * d.R2.size() + s.J.size();
  out.r3_small = Rational(static_cast<std::int64_t>(out.R3.size())) <=
                 (Rational(1) - p.c_prefix) * Rational(static_cast<std::int64_t>(d.R2.size())) + Rational(1);
  return out;
}

EndgameResult embed_R3_endgame(const Graph& g, const RootedTree& t, const Classification& c,
                               const std::vector<Path>& R3, const VertexSet& reserve, PartialEmbedding& e) {
  EndgameResult out;
  VertexSet in_reserve(t.vertex_count());
  for (const Path& path : R3) {
    // 1-based even positions j != m are pairwise non-adjacent and have no embedded neighbour.
    for (std::size_t j = 2; j < path.size(); j += 2) {
      if ((reserve - e.used()).empty()) break;
      const VertexSet cand = placement_candidates(g, t, e, path[j - 1], reserve);
      if (cand.empty()) continue;
      e.place(path[j - 1], cand.first());
      in_reserve.insert(path[j - 1]);
      ++out.into_reserve;
    }
  }

  VertexSet W(t.vertex_count());
  for (const Path& path : R3) {
    const std::size_t m = path.size();
    for (std::size_t j = 3; j + 1 < m; j += 2) {  // odd j, 1 < j < m-1
      if (in_reserve.contains(path[j - 2]) && in_reserve.contains(path[j])) W.insert(path[j - 1]);
    }
  }
  out.W = W.size();

  for (const Path& path : R3) {
    for (Vertex x : path) {
      if (e.is_mapped(x) || W.contains(x)) continue;
      place_lowest(g, t, e, x, c.G_prime, "case2.r3");
      ++out.rest;
    }
  }
  const VertexSet everywhere = g.all_vertices();
  W.for_each([&](Vertex w) { place_lowest(g, t, e, w, everywhere, "case2.w"); });
  out.unused_at_end = g.vertex_count() - e.used().size();
  return out;
}

Case2Result embed_case2(const Graph& g, const RootedTree& t, const Classification& c, const ParameterSet& p,
                        Rng& rng) {
  const std::size_t k = t.edge_count();
  Case2Result out;
  out.decomposition = split_paths(decompose_degree2(t), k, p);
  out.stage1 = embed_D1_and_R1(g, t, c, out.decomposition);

  FailureTrace last;
  bool have_last = false;
  for (std::uint32_t attempt = 0; attempt < p.retry_budget; ++attempt) {
    PermutationSample s = sample_permutation(g, c, out.stage1.embedding.used(), k, p, rng);
    ++out.draws;
    out.failed_A += s.passes_A ? 0 : 1;
    out.failed_B += s.passes_B ? 0 : 1;
    if (!s.passes_A || !s.passes_B) continue;
    const VertexSet reserve = *choose_reserve(s, k, p);
    PartialEmbedding e = out.stage1.embedding;
    try {
      const std::size_t before_r2 = e.mapped_count();
      R2Result r2 = embed_R2_along_permutation(g, t, c, out.decomposition, s, reserve, e, p);
      const std::size_t before_r3 = e.mapped_count();
      EndgameResult eg = embed_R3_endgame(g, t, c, r2.R3, reserve, e);
      out.phases = out.stage1.phases;
      out.phases.push_back({"case2.r2", before_r3 - before_r2, before_r3});
      out.phases.push_back({"case2.r3", e.mapped_count() - before_r3, e.used().size()});
      out.embedding = std::move(e);
      out.sample = std::move(s);
      out.r2 = std::move(r2);
      out.endgame = eg;
      return out;
    } catch (const EngineFailure& f) {
      if (f.regime()) throw;
      ++out.failed_attempts;
      last = f.trace();
      have_last = true;
    }
  }
  std::string reason = "retry budget of " + std::to_string(p.retry_budget) + " exhausted (A failed " +
                       std::to_string(out.failed_A) + ", B failed " + std::to_string(out.failed_B) +
                       ", accepted samples that later failed " + std::to_string(out.failed_attempts) + ")";
  if (have_last) reason += "; last failure in " + last.phase + ": " + last.reason;
  throw EngineFailure({"case2.retry", have_last ? last.tree_vertex : kNoVertex, 0,
                       out.stage1.embedding.used().size(), reason},
                      true);
}

}  // namespace esembed
