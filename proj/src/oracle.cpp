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

#include "esembed/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <thread>
#include <unordered_set>

#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "esembed/rng.hpp"

namespace esembed {

const char* to_string(Decision d) noexcept {
  switch (d) {
    case Decision::kContained:
      return "contained";
    case Decision::kNotContained:
      return "not-contained";
    case Decision::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::size_t> subtree_sizes(const RootedTree& t) {
  std::vector<std::size_t> size(t.vertex_count(), 1);
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex p = t.parent(*it);
    if (p != kNoVertex) size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(*it)];
  }
  return size;
}

Vertex centroid(const RootedTree& t) {
  const auto size = subtree_sizes(t);
  const std::size_t n = t.vertex_count();
  Vertex best = t.root();
  std::size_t best_load = n;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t load = n - size[v];
    for (Vertex c : t.children(static_cast<Vertex>(v))) load = std::max(load, size[static_cast<std::size_t>(c)]);
    if (load < best_load) {
      best_load = load;
      best = static_cast<Vertex>(v);
    }
  }
  return best;
}

class TreeSearch {
 public:
  TreeSearch(const Graph& g, const RootedTree& t, const OracleOptions& options)
      : g_(g), options_(options), embedding_(t.vertex_count(), g.vertex_count()) {
    const RootedTree rooted = t.rerooted(centroid(t));
    const auto size = subtree_sizes(rooted);
    order_.push_back(rooted.root());
    for (std::size_t head = 0; head < order_.size(); ++head) {
      std::vector<Vertex> kids = rooted.children(order_[head]);
      std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
        return size[static_cast<std::size_t>(a)] > size[static_cast<std::size_t>(b)];
      });
      order_.insert(order_.end(), kids.begin(), kids.end());
    }
    parent_.resize(order_.size());
    need_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      parent_[i] = rooted.parent(order_[i]);
      need_[i] = rooted.children(order_[i]).size();
    }

    component_size_.assign(g.vertex_count(), 0);
    std::vector<Vertex> comp(g.vertex_count(), kNoVertex);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
      if (comp[s] != kNoVertex) continue;
      std::vector<Vertex> members{static_cast<Vertex>(s)};
      comp[s] = static_cast<Vertex>(s);
      for (std::size_t h = 0; h < members.size(); ++h) {
        g.neighbors(members[h]).for_each([&](Vertex w) {
          if (comp[static_cast<std::size_t>(w)] == kNoVertex) {
            comp[static_cast<std::size_t>(w)] = static_cast<Vertex>(s);
            members.push_back(w);
          }
        });
      }
      for (Vertex v : members) component_size_[static_cast<std::size_t>(v)] = members.size();
    }
  }

  OracleResult run() {
    const auto start = Clock::now();
    if (options_.deadline) deadline_ = start + *options_.deadline;
    OracleResult result;
    if (options_.pruning && order_.size() > g_.vertex_count()) {
      result.decision = Decision::kNotContained;
    } else {
      const bool found = extend(0);
      if (timed_out_) {
        result.decision = Decision::kIndeterminate;
      } else if (found) {
        result.decision = Decision::kContained;
        result.embedding = embedding_;
      } else {
        result.decision = Decision::kNotContained;
      }
    }
    stats_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    result.stats = stats_;
    return result;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    stats_.max_depth = std::max(stats_.max_depth, depth + 1);
    const Vertex tv = order_[depth];
    VertexSet pool = depth == 0 ? g_.all_vertices() : g_.neighbors(embedding_.image(parent_[depth]));
    pool -= embedding_.used();

    std::vector<std::pair<std::size_t, Vertex>> cands;
    pool.for_each([&](Vertex h) {
      const std::size_t free = intersection_size(g_.neighbors(h), embedding_.used().complement());
      if (options_.pruning) {
        if (free < need_[depth]) return;
        if (depth == 0 && component_size_[static_cast<std::size_t>(h)] < order_.size()) return;
      }
      cands.emplace_back(free, h);
    });
    std::sort(cands.begin(), cands.end());

    for (const auto& [free, h] : cands) {
      if ((++stats_.nodes_expanded & 255U) == 0 && deadline_ && Clock::now() > *deadline_) timed_out_ = true;
      if (timed_out_) return false;
      embedding_.place(tv, h);
      if (extend(depth + 1)) return true;
      embedding_.unplace(tv);
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  OracleOptions options_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> need_;
  std::vector<std::size_t> component_size_;
  PartialEmbedding embedding_;
  SearchStats stats_;
  std::optional<Clock::time_point> deadline_;
  bool timed_out_ = false;
};

std::string ahu(const RootedTree& t, Vertex v) {
  std::vector<std::string> parts;
  for (Vertex c : t.children(v)) parts.push_back(ahu(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

std::vector<Vertex> tree_centers(const RootedTree& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.degree(static_cast<Vertex>(v));
    if (deg[v] <= 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

double binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0.0;
  r = std::min(r, n - r);
  // Exact while the running product stays below 2^53.
  double c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

std::size_t min_edges_for_hypothesis(std::size_t n, std::size_t k) {
  // 2m > n(k-1)
  return n * (k - 1) / 2 + 1;
}

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return pairs;
}

Graph without(std::size_t n, const std::vector<Edge>& pairs, const std::vector<bool>& removed) {
  std::vector<Edge> kept;
  kept.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!removed[i]) kept.push_back(pairs[i]);
  }
  return Graph(n, kept);
}

}  // namespace

OracleResult contains_tree_exact(const Graph& g, const RootedTree& t, const OracleOptions& options) {
  return TreeSearch(g, t, options).run();
}

std::string tree_canonical_form(const RootedTree& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string code = ahu(t.rerooted(c), c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

RootedTree prufer_decode(const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> deg(n, 1);
  for (Vertex v : seq) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw DomainError("Prüfer entry out of range");
    ++deg[static_cast<std::size_t>(v)];
  }
  std::set<Vertex> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : seq) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  const Vertex u = *leaves.begin();
  const Vertex w = *std::next(leaves.begin());
  edges.emplace_back(u, w);
  return RootedTree::from_edges(n, edges, 0);
}

std::vector<RootedTree> all_trees(std::size_t k) {
  if (k > 8) throw RejectedInput("tree enumeration is limited to k <= 8");
  // Every tree with k edges is a tree with k - 1 edges plus one leaf.
  std::vector<RootedTree> out{RootedTree()};
  for (std::size_t edges = 1; edges <= k; ++edges) {
    std::set<std::string> seen;
    std::vector<RootedTree> next;
    for (const RootedTree& t : out) {
      for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        std::vector<Vertex> parent(t.vertex_count() + 1);
        for (std::size_t u = 0; u < t.vertex_count(); ++u) parent[u] = t.parent(static_cast<Vertex>(u));
        parent.back() = static_cast<Vertex>(v);
        RootedTree grown(std::move(parent));
        if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::uint64_t graph_canonical_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 7) throw DomainError("canonical codes are only computed for n <= 7");
  std::array<std::uint8_t, 7> row{};
  std::array<std::uint32_t, 7> key{};
  for (std::size_t v = 0; v < n; ++v) {
    g.neighbors(static_cast<Vertex>(v)).for_each([&](Vertex w) { row[v] |= static_cast<std::uint8_t>(1U << w); });
  }
  // Vertex invariant: degree, then the sorted degrees of the neighbours, 3 bits each.
  for (std::size_t v = 0; v < n; ++v) {
    std::array<std::uint32_t, 7> nd{};
    std::size_t cnt = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (row[v] >> w & 1U) nd[cnt++] = static_cast<std::uint32_t>(std::popcount(row[w]));
    }
    std::sort(nd.begin(), nd.begin() + static_cast<std::ptrdiff_t>(cnt), std::greater<>());
    key[v] = static_cast<std::uint32_t>(cnt);
    for (std::size_t i = 0; i < 6; ++i) key[v] = key[v] << 3 | nd[i];
  }
  std::array<std::uint8_t, 7> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), 0);
  std::stable_sort(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n),
                   [&](std::uint8_t a, std::uint8_t b) { return key[a] > key[b]; });
  // Relabellings that keep the invariant-sorted order: a product of permutations of each class.
  std::array<std::pair<std::size_t, std::size_t>, 7> classes{};
  std::size_t class_count = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[perm[j]] == key[perm[i]]) ++j;
    classes[class_count++] = {i, j};
    i = j;
  }
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  auto code_of = [&]() {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j) {
      const std::uint8_t r = row[perm[j]];
      for (std::size_t i = 0; i < j; ++i) code = code << 1 | (r >> perm[i] & 1U);
    }
    return code;
  };
  auto recurse = [&](auto&& self, std::size_t cls) -> void {
    if (cls == class_count) {
      best = std::min(best, code_of());
      return;
    }
    auto lo = perm.begin() + static_cast<std::ptrdiff_t>(classes[cls].first);
    auto hi = perm.begin() + static_cast<std::ptrdiff_t>(classes[cls].second);
    std::sort(lo, hi);
    do {
      self(self, cls + 1);
    } while (std::next_permutation(lo, hi));
  };
  recurse(recurse, 0);
  return best;
}

double labelled_graph_count(std::size_t n, std::size_t min_edges) {
  const std::size_t pairs = n * (n == 0 ? 0 : n - 1) / 2;
  double total = 0;
  for (std::size_t m = min_edges; m <= pairs; ++m) total += binomial(pairs, m);
  return total;
}

void for_each_dense_graph(std::size_t n, std::size_t min_edges, bool iso_reject,
                          const std::function<void(const Graph&)>& sink) {
  const std::vector<Edge> pairs = all_pairs(n);
  if (min_edges > pairs.size()) return;
  if (iso_reject && n > 7) throw DomainError("isomorphism rejection is only available for n <= 7");
  const std::size_t max_missing = pairs.size() - min_edges;
  std::unordered_set<std::uint64_t> seen;
  std::vector<bool> removed(pairs.size(), false);
  auto emit = [&]() {
    Graph g = without(n, pairs, removed);
    if (iso_reject && !seen.insert(graph_canonical_code(g)).second) return;
    sink(g);
  };
  // Missing-edge sets in order of size, each size in lexicographic order of indices.
  for (std::size_t r = 0; r <= max_missing; ++r) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::fill(removed.begin(), removed.end(), false);
      for (std::size_t i : idx) removed[i] = true;
      emit();
      if (r == 0) break;
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] == pairs.size() - r + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t q = pos; q < r; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
}

VerifyReport verify_conjecture(const VerifyOptions& options) {
  const auto start = Clock::now();
  const std::size_t k = options.k;
  if (k < 1) throw RejectedInput("verification needs k >= 1");
  if (options.mode == VerifyMode::kExhaustive && options.n_max > 10) {
    throw RejectedInput("exhaustive verification requires n_max <= 10");
  }
  const std::vector<RootedTree> trees = all_trees(k);

  VerifyReport report;
  report.k = k;
  report.trees = trees.size();

  if (options.mode == VerifyMode::kExhaustive) {
    double estimate = 0;
    for (std::size_t n = k + 1; n <= options.n_max; ++n) {
      estimate += labelled_graph_count(n, min_edges_for_hypothesis(n, k));
    }
    if (estimate > options.max_instances) {
      throw RejectedInput("exhaustive enumeration infeasible: about " + std::to_string(static_cast<long long>(estimate)) +
                          " labelled graphs (limit " + std::to_string(static_cast<long long>(options.max_instances)) +
                          ")");
    }
  }

  struct Outcome {
    std::size_t indeterminate = 0;
    std::vector<std::string> failing_trees;
  };
  auto check = [&](const Graph& g) {
    Outcome o;
    for (const RootedTree& t : trees) {
      OracleOptions oo;
      oo.deadline = options.deadline;
      const OracleResult r = contains_tree_exact(g, t, oo);
      if (r.decision == Decision::kIndeterminate) ++o.indeterminate;
      if (r.decision == Decision::kNotContained) o.failing_trees.push_back(format_parent_array(t));
    }
    return o;
  };

  std::vector<Graph> batch;
  auto flush = [&]() {
    const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, batch.size()));
    std::vector<Outcome> outcomes(batch.size());
    auto work = [&](std::size_t w) {
      for (std::size_t i = w; i < batch.size(); i += workers) outcomes[i] = check(batch[i]);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Graph& g = batch[i];
      const bool in_regime =
          Rational(static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(k)) <=
          options.delta * Rational(static_cast<std::int64_t>(k));
      ++report.graphs;
      report.pairs += trees.size();
      report.graphs_in_regime += in_regime ? 1 : 0;
      report.indeterminate += outcomes[i].indeterminate;
      for (auto& tree : outcomes[i].failing_trees) {
        report.counterexamples.push_back({format_graph6(g), std::move(tree)});
        report.counterexamples_in_regime += in_regime ? 1 : 0;
      }
    }
    batch.clear();
  };
  auto collect = [&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() >= 4096) flush();
  };

  if (options.mode == VerifyMode::kExhaustive) {
    for (std::size_t n = k + 1; n <= options.n_max; ++n) {
      for_each_dense_graph(n, min_edges_for_hypothesis(n, k), options.iso_reject && n <= 7, collect);
    }
  } else {
    if (options.n_max < k + 1) throw RejectedInput("n_max must be at least k + 1");
    Rng rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
      const std::size_t n = k + 1 + rng.below(options.n_max - k);
      const std::vector<Edge> pairs = all_pairs(n);
      const std::size_t min_edges = min_edges_for_hypothesis(n, k);
      if (min_edges > pairs.size()) continue;
      const std::size_t missing = rng.below(pairs.size() - min_edges + 1);
      std::vector<std::size_t> idx(pairs.size());
      std::iota(idx.begin(), idx.end(), 0);
      rng.shuffle(std::span<std::size_t>(idx));
      std::vector<bool> removed(pairs.size(), false);
      for (std::size_t i = 0; i < missing; ++i) removed[idx[i]] = true;
      collect(without(n, pairs, removed));
    }
  }
  flush();

  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.graph6, a.tree) < std::tie(b.graph6, b.tree);
            });
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

}  // namespace esembed
