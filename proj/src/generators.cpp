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

#include "esembed/generators.hpp"

#include <algorithm>
#include <charconv>
#include <span>
#include <vector>

#include "esembed/errors.hpp"
#include "esembed/oracle.hpp"
#include "esembed/rng.hpp"

namespace esembed {

namespace {

constexpr std::pair<TreeFamily, const char*> kTreeNames[] = {
    {TreeFamily::kPath, "path"},     {TreeFamily::kStar, "star"},   {TreeFamily::kSpider, "spider"},
    {TreeFamily::kCaterpillar, "caterpillar"}, {TreeFamily::kBroom, "broom"}, {TreeFamily::kPruferRandom, "prufer_random"},
};

constexpr std::pair<HostFamily, const char*> kHostNames[] = {
    {HostFamily::kComplete, "complete"},
    {HostFamily::kCompleteMinusMatching, "complete_minus_matching"},
    {HostFamily::kGnpDense, "gnp_dense"},
    {HostFamily::kDisjointCliques, "disjoint_cliques"},
    {HostFamily::kPaperRegime, "paper_regime"},
};

std::size_t spider_legs(const TreeParams& p) { return p.legs == 0 ? 3 : p.legs; }
std::size_t caterpillar_spine(std::size_t k, const TreeParams& p) { return p.spine == 0 ? (k + 2) / 2 : p.spine; }
std::size_t broom_handle(std::size_t k, const TreeParams& p) { return p.handle == 0 ? (k + 1) / 2 : p.handle; }
std::size_t host_order(const HostParams& p) { return p.n == 0 ? p.k + 1 : p.n; }
std::size_t matching_size(const HostParams& p) { return p.matching == 0 ? host_order(p) / 2 : p.matching; }

std::size_t paper_regime_order(const HostParams& p) {
  return static_cast<std::size_t>(((Rational(1) + p.delta) * Rational(static_cast<std::int64_t>(p.k))).ceil());
}

std::vector<std::size_t> degree_profile(const RootedTree& t) {
  std::vector<std::size_t> d(t.vertex_count());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = t.degree(static_cast<Vertex>(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t count_degree(const std::vector<std::size_t>& profile, std::size_t d) {
  return static_cast<std::size_t>(std::count(profile.begin(), profile.end(), d));
}

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DomainError("invalid value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

Rational parse_rational(std::string_view key, std::string_view value) {
  try {
    return Rational::parse(value);
  } catch (const std::exception&) {
    throw DomainError("invalid value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
}

}  // namespace

const char* to_string(TreeFamily f) noexcept {
  for (const auto& [family, name] : kTreeNames) {
    if (family == f) return name;
  }
  return "unknown";
}

const char* to_string(HostFamily f) noexcept {
  for (const auto& [family, name] : kHostNames) {
    if (family == f) return name;
  }
  return "unknown";
}

TreeFamily parse_tree_family(std::string_view name) {
  for (const auto& [family, n] : kTreeNames) {
    if (name == n) return family;
  }
  throw DomainError("unknown tree family '" + std::string(name) + "'");
}

HostFamily parse_host_family(std::string_view name) {
  for (const auto& [family, n] : kHostNames) {
    if (name == n) return family;
  }
  throw DomainError("unknown host family '" + std::string(name) + "'");
}

RootedTree gen_tree(TreeFamily family, std::size_t k, std::uint64_t seed, const TreeParams& params) {
  if (k == 0) throw DomainError("trees need k >= 1 edges");
  std::vector<Vertex> parent(k + 1, kNoVertex);
  switch (family) {
    case TreeFamily::kPath:
      for (std::size_t v = 1; v <= k; ++v) parent[v] = static_cast<Vertex>(v - 1);
      break;
    case TreeFamily::kStar:
      for (std::size_t v = 1; v <= k; ++v) parent[v] = 0;
      break;
    case TreeFamily::kSpider: {
      const std::size_t legs = spider_legs(params);
      if (legs > k) throw DomainError("spider needs 1 <= legs <= k");
      // The first k mod legs legs are one vertex longer.
      std::size_t next = 1;
      for (std::size_t leg = 0; leg < legs; ++leg) {
        const std::size_t len = k / legs + (leg < k % legs ? 1 : 0);
        Vertex prev = 0;
        for (std::size_t i = 0; i < len; ++i, ++next) {
          parent[next] = prev;
          prev = static_cast<Vertex>(next);
        }
      }
      break;
    }
    case TreeFamily::kCaterpillar: {
      const std::size_t spine = caterpillar_spine(k, params);
      if (spine < 1 || spine > k + 1) throw DomainError("caterpillar needs 1 <= spine <= k + 1");
      for (std::size_t v = 1; v < spine; ++v) parent[v] = static_cast<Vertex>(v - 1);
      for (std::size_t v = spine, i = 0; v <= k; ++v, ++i) parent[v] = static_cast<Vertex>(i % spine);
      break;
    }
    case TreeFamily::kBroom: {
      const std::size_t handle = broom_handle(k, params);
      if (handle < 1 || handle > k) throw DomainError("broom needs 1 <= handle <= k");
      for (std::size_t v = 1; v <= handle; ++v) parent[v] = static_cast<Vertex>(v - 1);
      for (std::size_t v = handle + 1; v <= k; ++v) parent[v] = static_cast<Vertex>(handle);
      break;
    }
    case TreeFamily::kPruferRandom: {
      Rng rng(seed);
      std::vector<Vertex> seq(k - 1);
      for (Vertex& x : seq) x = static_cast<Vertex>(rng.below(k + 1));
      return prufer_decode(seq);
    }
  }
  return RootedTree(std::move(parent));
}

Graph gen_host(HostFamily family, const HostParams& params, std::uint64_t seed) {
  std::vector<Edge> edges;
  switch (family) {
    case HostFamily::kComplete: {
      const std::size_t n = host_order(params);
      if (n == 0) throw DomainError("complete host needs n >= 1");
      return Graph::complete(n);
    }
    case HostFamily::kCompleteMinusMatching: {
      const std::size_t n = host_order(params);
      const std::size_t m = matching_size(params);
      if (n == 0 || 2 * m > n) throw DomainError("matching of size " + std::to_string(m) + " does not fit in K_" + std::to_string(n));
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (u % 2 == 0 && v == u + 1 && u / 2 < m) continue;
          edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
      }
      return Graph(n, edges);
    }
    case HostFamily::kGnpDense: {
      const std::size_t n = host_order(params);
      if (n == 0) throw DomainError("gnp_dense needs n >= 1");
      if (params.p < Rational(0) || params.p > Rational(1)) throw DomainError("edge probability must lie in [0, 1]");
      Rng rng(seed);
      const auto den = static_cast<std::uint64_t>(params.p.den());
      const auto num = static_cast<std::uint64_t>(params.p.num());
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (rng.below(den) < num) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
      }
      return Graph(n, edges);
    }
    case HostFamily::kDisjointCliques: {
      const std::size_t k = params.k;
      if (k == 0 || params.copies == 0) throw DomainError("disjoint_cliques needs k >= 1 and copies >= 1");
      for (std::size_t c = 0; c < params.copies; ++c) {
        for (std::size_t u = 0; u < k; ++u) {
          for (std::size_t v = u + 1; v < k; ++v) {
            edges.emplace_back(static_cast<Vertex>(c * k + u), static_cast<Vertex>(c * k + v));
          }
        }
      }
      return Graph(k * params.copies, edges);
    }
    case HostFamily::kPaperRegime: {
      const std::size_t k = params.k;
      if (k == 0) throw DomainError("paper_regime needs k >= 1");
      if (params.delta < Rational(0)) throw DomainError("delta must be non-negative");
      const std::size_t n = paper_regime_order(params);
      // K_n has average degree n-1, which exceeds k-1 only if n > k.
      if (n <= k) throw DomainError("average degree > k-1 needs n > k, but ⌈(1+delta)k⌉ = " + std::to_string(n));
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
      const std::size_t threshold = n * (k - 1) / 2 + 1 + params.slack;  // smallest m with 2m > n(k-1), plus slack
      if (threshold > edges.size()) throw DomainError("slack exceeds the edges of K_n");
      Rng rng(seed);
      rng.shuffle(std::span<Edge>(edges));
      edges.resize(threshold);
      std::sort(edges.begin(), edges.end());
      Graph g(n, edges);
      if (!(average_degree(g) > Rational(static_cast<std::int64_t>(k) - 1))) {
        throw std::logic_error("paper_regime produced a graph below the degree threshold");
      }
      return g;
    }
  }
  throw DomainError("unknown host family");
}

bool matches_family(const RootedTree& t, TreeFamily family, const TreeParams& params) {
  const std::size_t k = t.edge_count();
  if (k == 0) return false;
  const auto profile = degree_profile(t);
  const std::size_t n = profile.size();
  switch (family) {
    case TreeFamily::kPath:
      return k == 1 ? count_degree(profile, 1) == 2 : count_degree(profile, 1) == 2 && count_degree(profile, 2) == k - 1;
    case TreeFamily::kStar:
      return k <= 1 || (profile.back() == k && count_degree(profile, 1) == k);
    case TreeFamily::kSpider: {
      const std::size_t legs = spider_legs(params);
      if (legs <= 2) return matches_family(t, TreeFamily::kPath);
      return profile.back() == legs && count_degree(profile, legs) == 1 && count_degree(profile, 1) == legs &&
             count_degree(profile, 2) == n - legs - 1;
    }
    case TreeFamily::kCaterpillar: {
      // Removing all leaves leaves a path (or a single vertex or nothing).
      std::size_t inner = 0;
      std::size_t inner_ends = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (t.degree(static_cast<Vertex>(v)) <= 1) continue;
        ++inner;
        std::size_t inner_neighbours = 0;
        for (Vertex w : t.neighbors(static_cast<Vertex>(v))) inner_neighbours += t.degree(w) > 1 ? 1 : 0;
        if (inner_neighbours > 2) return false;
        inner_ends += inner_neighbours <= 1 ? 1 : 0;
      }
      return inner <= 1 || inner_ends == 2;
    }
    case TreeFamily::kBroom: {
      const std::size_t handle = broom_handle(k, params);
      const std::size_t bristles = k - handle;
      if (bristles <= 1) return matches_family(t, TreeFamily::kPath);
      if (handle == 1) return matches_family(t, TreeFamily::kStar);
      return profile.back() == bristles + 1 && count_degree(profile, bristles + 1) == 1 &&
             count_degree(profile, 1) == bristles + 1 && count_degree(profile, 2) == handle - 1;
    }
    case TreeFamily::kPruferRandom:
      return true;
  }
  return false;
}

bool matches_family(const Graph& g, HostFamily family, const HostParams& params) {
  const std::size_t n = g.vertex_count();
  switch (family) {
    case HostFamily::kComplete:
      return n == host_order(params) && g.min_degree() + 1 == n;
    case HostFamily::kCompleteMinusMatching: {
      const std::size_t m = matching_size(params);
      std::size_t deficient = 0;
      for (std::size_t v = 0; v < n; ++v) {
        const std::size_t d = g.degree(static_cast<Vertex>(v));
        if (d + 2 == n) {
          ++deficient;
        } else if (d + 1 != n) {
          return false;
        }
      }
      return n == host_order(params) && deficient == 2 * m;
    }
    case HostFamily::kGnpDense:
      return n == host_order(params);
    case HostFamily::kDisjointCliques:
      return n == params.k * params.copies && g.min_degree() + 1 == params.k && g.max_degree() + 1 == params.k &&
             average_degree(g) == Rational(static_cast<std::int64_t>(params.k) - 1);
    case HostFamily::kPaperRegime:
      return n == paper_regime_order(params) && average_degree(g) > Rational(static_cast<std::int64_t>(params.k) - 1);
  }
  return false;
}

InstanceSpec InstanceSpec::parse(std::string_view text) {
  InstanceSpec spec;
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (kind == "tree") {
    spec.kind = Kind::kTree;
  } else if (kind == "host") {
    spec.kind = Kind::kHost;
  } else {
    throw DomainError("instance spec must start with 'tree:' or 'host:'");
  }
  if (colon == std::string_view::npos) throw DomainError("instance spec is missing a family");
  std::string_view rest = text.substr(colon + 1);
  const auto colon2 = rest.find(':');
  const std::string_view family = rest.substr(0, colon2);
  if (spec.kind == Kind::kTree) {
    spec.tree_family = parse_tree_family(family);
  } else {
    spec.host_family = parse_host_family(family);
  }
  std::string_view params = colon2 == std::string_view::npos ? std::string_view{} : rest.substr(colon2 + 1);
  while (!params.empty()) {
    const auto comma = params.find(',');
    const std::string_view item = params.substr(0, comma);
    params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    const bool tree = spec.kind == Kind::kTree;
    if (key == "k") {
      spec.k = parse_u64(key, value);
      spec.host.k = spec.k;
    } else if (key == "seed") {
      spec.seed = parse_u64(key, value);
    } else if (tree && key == "legs") {
      spec.tree.legs = parse_u64(key, value);
    } else if (tree && key == "spine") {
      spec.tree.spine = parse_u64(key, value);
    } else if (tree && key == "handle") {
      spec.tree.handle = parse_u64(key, value);
    } else if (!tree && key == "n") {
      spec.host.n = parse_u64(key, value);
    } else if (!tree && key == "p") {
      spec.host.p = parse_rational(key, value);
    } else if (!tree && key == "matching") {
      spec.host.matching = parse_u64(key, value);
    } else if (!tree && key == "copies") {
      spec.host.copies = parse_u64(key, value);
    } else if (!tree && key == "delta") {
      spec.host.delta = parse_rational(key, value);
    } else if (!tree && key == "slack") {
      spec.host.slack = parse_u64(key, value);
    } else {
      throw DomainError("unknown key '" + std::string(key) + "' for this instance kind");
    }
  }
  return spec;
}

std::string InstanceSpec::to_string() const {
  std::string out;
  if (kind == Kind::kTree) {
    out = std::string("tree:") + esembed::to_string(tree_family) + ":k=" + std::to_string(k);
    if (tree.legs != 0) out += ",legs=" + std::to_string(tree.legs);
    if (tree.spine != 0) out += ",spine=" + std::to_string(tree.spine);
    if (tree.handle != 0) out += ",handle=" + std::to_string(tree.handle);
  } else {
    out = std::string("host:") + esembed::to_string(host_family) + ":k=" + std::to_string(host.k);
    out += ",n=" + std::to_string(host.n) + ",p=" + host.p.to_string() + ",matching=" + std::to_string(host.matching) +
           ",copies=" + std::to_string(host.copies) + ",delta=" + host.delta.to_string() +
           ",slack=" + std::to_string(host.slack);
  }
  return out + ",seed=" + std::to_string(seed);
}

RootedTree InstanceSpec::make_tree() const {
  if (kind != Kind::kTree) throw DomainError("not a tree spec");
  return gen_tree(tree_family, k, seed, tree);
}

Graph InstanceSpec::make_host() const {
  if (kind != Kind::kHost) throw DomainError("not a host spec");
  return gen_host(host_family, host, seed);
}

}  // namespace esembed
