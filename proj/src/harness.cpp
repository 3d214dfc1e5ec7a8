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

#include "esembed/harness.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "esembed/case1.hpp"
#include "esembed/case2.hpp"
#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "esembed/preprocess.hpp"
#include "esembed/rng.hpp"

namespace esembed {

using Json = nlohmann::ordered_json;

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::kEmbeddedByEngine:
      return "embedded-by-engine";
    case Outcome::kEmbeddedByOracleFallback:
      return "embedded-by-oracle-fallback";
    case Outcome::kNoEmbedding:
      return "no-embedding";
    case Outcome::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

// Random streams derived from the run seed.
constexpr std::uint64_t kLeafStream = 1;
constexpr std::uint64_t kPermutationStream = 2;

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json params_json(const ParameterSet& p) {
  return Json{{"delta", p.delta.to_string()},       {"c_leafcut", p.c_leafcut.to_string()},
              {"c_R1", p.c_R1.to_string()},         {"c_A", p.c_A.to_string()},
              {"c_B", p.c_B.to_string()},           {"c_prefix", p.c_prefix.to_string()},
              {"c_nonneigh", p.c_nonneigh.to_string()}, {"c_small_k", p.c_small_k.to_string()},
              {"c_small_a", p.c_small_a.to_string()}, {"c_sprime", p.c_sprime.to_string()},
              {"retry_budget", p.retry_budget}};
}

struct Pipeline {
  const Graph& g;
  const RootedTree& t;
  const RunConfig& cfg;
  RunReport& report;

  void flag(const char* name, bool value) { report.flags.emplace_back(name, value); }

  /// Stores a host-level embedding after re-validating it.
  void accept(const PartialEmbedding& e, Outcome outcome) {
    const ValidityReport v = validate_embedding(g, t, e);
    if (!v.certifies_containment()) throw std::logic_error("refusing to report an invalid embedding");
    report.embedding = e.images();
    report.outcome = outcome;
  }

  // Oracle on the whole host; used when the hypothesis fails and for --fallback.
  void oracle_on_host() {
    OracleOptions oo;
    oo.deadline = cfg.deadline;
    const OracleResult r = contains_tree_exact(g, t, oo);
    report.oracle = r.stats;
    report.fallback_used = true;
    switch (r.decision) {
      case Decision::kContained:
        accept(*r.embedding, Outcome::kEmbeddedByOracleFallback);
        break;
      case Decision::kNotContained:
        report.outcome = Outcome::kNoEmbedding;
        break;
      case Decision::kIndeterminate:
        report.outcome = Outcome::kIndeterminate;
        break;
    }
  }

  void run() {
    const std::size_t k = t.edge_count();
    const bool hypothesis = g.vertex_count() > 0 && average_degree(g) > Rational(static_cast<std::int64_t>(k) - 1);
    flag("hypothesis", hypothesis);
    if (!hypothesis) {
      report.branch = "hypothesis-failed";
      oracle_on_host();
      return;
    }

    const Reduction red = minimal_reduction(g, k);
    const Graph& h = red.graph;
    report.phases.push_back({"reduction", red.deleted.size(), h.vertex_count()});
    flag("reduced_min_degree", 2 * h.min_degree() >= k);
    flag("reduced_hypothesis", average_degree(h) > Rational(static_cast<std::int64_t>(k) - 1));

    const Classification c = classify(h, k, cfg.params);
    flag("in_regime", c.in_regime);
    flag("high_set_large", c.high_set_large);
    flag("gprime_min_degree", c.gprime_min_degree);
    flag("gprime_codegree", c.gprime_codegree);
    flag("high_disjoint_small", c.high_disjoint_small);

    if (!cfg.skip_dense_spot) {
      const auto spot = dense_spot_test(h, k, c);
      flag("dense_spot", spot.has_value());
      if (spot) {
        flag("spot_spans_tree", spot->spans_tree);
        flag("spot_min_degree", spot->min_degree_above_two_thirds);
        OracleOptions oo;
        oo.deadline = cfg.deadline;
        const OracleResult r = contains_tree_exact(spot->subgraph.graph, t, oo);
        report.oracle = r.stats;
        flag("spot_embedded", r.decision == Decision::kContained);
        if (r.decision == Decision::kContained) {
          report.branch = "dense-spot";
          const PartialEmbedding in_reduced = r.embedding->lifted(spot->subgraph.to_host, h.vertex_count());
          report.phases.push_back({"dense_spot.oracle", t.vertex_count(), t.vertex_count()});
          accept(in_reduced.lifted(red.to_host, g.vertex_count()), Outcome::kEmbeddedByEngine);
          return;
        }
      }
    }

    const bool many = has_many_leaves(t, k, cfg.params);
    flag("many_leaves", many);
    try {
      if (many) {
        report.branch = "case1";
        std::optional<Rng> sampler;
        if (cfg.sample_leaves) sampler.emplace(mix_seed(cfg.seed, kLeafStream));
        const LeafApparatus app = build_leaf_apparatus(t, k, cfg.params, sampler ? &*sampler : nullptr);
        flag("p2_fits_high", app.P2.size() <= c.H.size());
        const Case1Result res = embed_case1(h, c, app);
        report.phases.insert(report.phases.end(), res.phases.begin(), res.phases.end());
        accept(res.embedding.lifted(red.to_host, g.vertex_count()), Outcome::kEmbeddedByEngine);
      } else {
        report.branch = "case2";
        Rng rng(mix_seed(cfg.seed, kPermutationStream));
        const Case2Result res = embed_case2(h, t, c, cfg.params, rng);
        report.phases.insert(report.phases.end(), res.phases.begin(), res.phases.end());
        flag("budget_ok", res.stage1.budget_ok);
        flag("u_small", res.stage1.u_small);
        flag("passes_A", res.sample.passes_A);
        flag("passes_B", res.sample.passes_B);
        flag("off_permutation_ok", res.r2.off_permutation_ok);
        flag("r3_small", res.r2.r3_small);
        Case2Ledger L;
        L.draws = res.draws;
        L.failed_A = res.failed_A;
        L.failed_B = res.failed_B;
        L.failed_attempts = res.failed_attempts;
        L.R1_paths = res.decomposition.R1.size();
        L.R2_paths = res.decomposition.R2.size();
        L.R3_paths = res.r2.R3.size();
        L.J = res.sample.J.size();
        L.H_pi = res.sample.H_pi.size();
        L.reserve = reserve_size(k, cfg.params);
        L.landed = res.r2.landed;
        L.off_permutation = res.r2.off_permutation;
        L.bridges = res.r2.bridges;
        L.W = res.endgame.W;
        L.s_prime = c.S_prime.size();
        L.image_in_s_prime = intersection_size(res.embedding.used(), c.S_prime);
        L.image_size = res.embedding.used().size();
        if (res.decomposition.severed) {
          const auto [u, v] = *res.decomposition.severed;
          L.severed_edge_ok = h.adjacent(res.embedding.image(u), res.embedding.image(v));
        }
        report.case2 = L;
        accept(res.embedding.lifted(red.to_host, g.vertex_count()), Outcome::kEmbeddedByEngine);
      }
    } catch (const EngineFailure& f) {
      report.failure = f.trace();
      report.failure_regime = f.regime();
      if (cfg.fallback) {
        oracle_on_host();
      } else {
        report.outcome = Outcome::kIndeterminate;
      }
    }
  }
};

}  // namespace

std::string instance_digest(const Graph& g, const RootedTree& t) {
  return hex64(fnv1a(format_graph6(g) + "|" + format_parent_array(t)));
}

RunReport cmd_embed(const Graph& g, const RootedTree& t, const RunConfig& config) {
  config.params.validate();
  RunReport report;
  report.digest = instance_digest(g, t);
  report.seed = config.seed;
  report.k = t.edge_count();
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.delta = config.params.delta.to_string();
  Pipeline{g, t, config, report}.run();
  return report;
}

std::string to_json(const RunReport& r, bool trace) {
  Json j;
  j["digest"] = r.digest;
  j["seed"] = r.seed;
  j["k"] = r.k;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["branch"] = r.branch;
  j["fallback_used"] = r.fallback_used;
  j["outcome"] = to_string(r.outcome);
  Json flags = Json::object();
  for (const auto& [name, value] : r.flags) flags[name] = value;
  j["flags"] = flags;
  Json phases = Json::array();
  for (const auto& p : r.phases) {
    Json ph{{"phase", p.phase}, {"placed", p.placed}};
    if (trace) ph["used_after"] = p.used_after;
    phases.push_back(ph);
  }
  j["phases"] = phases;
  if (r.case2) {
    const Case2Ledger& L = *r.case2;
    j["case2"] = Json{{"draws", L.draws},
                      {"failed_A", L.failed_A},
                      {"failed_B", L.failed_B},
                      {"failed_attempts", L.failed_attempts},
                      {"R1_paths", L.R1_paths},
                      {"R2_paths", L.R2_paths},
                      {"R3_paths", L.R3_paths},
                      {"J", L.J},
                      {"H_pi", L.H_pi},
                      {"reserve", L.reserve},
                      {"landed", L.landed},
                      {"off_permutation", L.off_permutation},
                      {"bridges", L.bridges},
                      {"W", L.W},
                      {"s_prime", L.s_prime},
                      {"image_in_s_prime", L.image_in_s_prime},
                      {"image_size", L.image_size},
                      {"severed_edge_ok", L.severed_edge_ok}};
  }
  if (r.oracle) j["oracle"] = Json{{"nodes_expanded", r.oracle->nodes_expanded}, {"max_depth", r.oracle->max_depth}};
  if (r.failure) {
    Json f{{"phase", r.failure->phase}, {"regime", r.failure_regime}};
    if (trace) {
      f["tree_vertex"] = r.failure->tree_vertex;
      f["candidates"] = r.failure->candidate_count;
      f["used"] = r.failure->used_count;
      f["reason"] = r.failure->reason;
    }
    j["failure"] = f;
  }
  if (!r.embedding.empty()) j["embedding"] = r.embedding;
  return j.dump();
}

std::string csv_header_embed() {
  return "digest,seed,k,n,m,delta,branch,fallback_used,outcome,failed_flags,phases,draws,off_permutation,J,"
         "nodes_expanded,failure_phase";
}

std::string to_csv(const RunReport& r) {
  std::ostringstream os;
  std::string failed;
  for (const auto& [name, value] : r.flags) {
    if (!value) failed += (failed.empty() ? "" : ";") + name;
  }
  std::string phases;
  for (const auto& p : r.phases) phases += (phases.empty() ? "" : ";") + p.phase + "=" + std::to_string(p.placed);
  os << r.digest << ',' << r.seed << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.branch << ','
     << (r.fallback_used ? 1 : 0) << ',' << to_string(r.outcome) << ',' << failed << ',' << phases << ',';
  if (r.case2) {
    os << r.case2->draws << ',' << r.case2->off_permutation << ',' << r.case2->J;
  } else {
    os << ",,";
  }
  os << ',' << (r.oracle ? std::to_string(r.oracle->nodes_expanded) : "") << ','
     << (r.failure ? r.failure->phase : "");
  return os.str();
}

std::string to_json(const VerifyReport& r) {
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back(Json{{"graph6", c.graph6}, {"tree", c.tree}});
  Json j{{"k", r.k},
         {"graphs", r.graphs},
         {"trees", r.trees},
         {"pairs", r.pairs},
         {"indeterminate", r.indeterminate},
         {"graphs_in_regime", r.graphs_in_regime},
         {"counterexamples_in_regime", r.counterexamples_in_regime},
         {"counterexamples", ce}};
  return j.dump();
}

std::string csv_header_verify() {
  return "k,graphs,trees,pairs,indeterminate,graphs_in_regime,counterexamples_in_regime,counterexamples";
}

std::string to_csv(const VerifyReport& r) {
  std::ostringstream os;
  os << r.k << ',' << r.graphs << ',' << r.trees << ',' << r.pairs << ',' << r.indeterminate << ','
     << r.graphs_in_regime << ',' << r.counterexamples_in_regime << ',' << r.counterexamples.size();
  return os.str();
}

std::vector<StreamVerdict> verify_stream(std::istream& in, std::size_t k,
                                         std::optional<std::chrono::milliseconds> deadline) {
  const std::vector<RootedTree> trees = all_trees(k);
  std::vector<StreamVerdict> out;
  read_graph6_stream(in, [&](std::size_t line, const Graph& g) {
    StreamVerdict v;
    v.line = line;
    v.graph6 = format_graph6(g);
    v.hypothesis = g.vertex_count() > 0 && average_degree(g) > Rational(static_cast<std::int64_t>(k) - 1);
    bool undecided = false;
    for (const RootedTree& t : trees) {
      OracleOptions oo;
      oo.deadline = deadline;
      const OracleResult r = contains_tree_exact(g, t, oo);
      v.nodes_expanded += r.stats.nodes_expanded;
      if (r.decision == Decision::kNotContained) v.failing_trees.push_back(format_parent_array(t));
      if (r.decision == Decision::kIndeterminate) undecided = true;
    }
    v.decision = !v.failing_trees.empty() ? Decision::kNotContained
                 : undecided             ? Decision::kIndeterminate
                                         : Decision::kContained;
    out.push_back(std::move(v));
  });
  return out;
}

std::string to_json_line(const StreamVerdict& v) {
  Json j{{"instance", v.line},
         {"graph6", v.graph6},
         {"hypothesis", v.hypothesis},
         {"decision", to_string(v.decision)},
         {"failing_trees", v.failing_trees},
         {"nodes_expanded", v.nodes_expanded}};
  return j.dump();
}

StatsReport cmd_stats(const Graph& g, std::size_t k, const ParameterSet& p, std::uint64_t seed, std::size_t samples) {
  p.validate();
  const Classification c = classify(g, k, p);
  StatsReport r;
  r.k = k;
  r.n = g.vertex_count();
  r.seed = seed;
  r.samples = samples;
  r.prefix = prefix_length(k, p);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const PermutationSample s = sample_permutation(g, c, c.S_prime, k, p, rng);
    r.count_A += s.passes_A ? 1 : 0;
    r.count_B += s.passes_B ? 1 : 0;
    r.count_AB += s.passes_A && s.passes_B ? 1 : 0;
    ++r.J_histogram[s.J.size()];
    ++r.H_histogram[s.H_pi.size()];
  }
  return r;
}

namespace {

double frequency(std::size_t count, std::size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
}

Json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  Json out = Json::array();
  for (const auto& [value, count] : h) out.push_back(Json::array({value, count}));
  return out;
}

}  // namespace

std::string to_json(const StatsReport& r) {
  Json j{{"k", r.k},
         {"n", r.n},
         {"seed", r.seed},
         {"samples", r.samples},
         {"prefix", r.prefix},
         {"freq_A", frequency(r.count_A, r.samples)},
         {"freq_B", frequency(r.count_B, r.samples)},
         {"freq_AB", frequency(r.count_AB, r.samples)},
         {"J_histogram", histogram_json(r.J_histogram)},
         {"H_pi_histogram", histogram_json(r.H_histogram)}};
  return j.dump();
}

std::string csv_header_stats() { return "k,n,seed,samples,prefix,count_A,count_B,count_AB,freq_A,freq_B,freq_AB"; }

std::string to_csv(const StatsReport& r) {
  std::ostringstream os;
  os << r.k << ',' << r.n << ',' << r.seed << ',' << r.samples << ',' << r.prefix << ',' << r.count_A << ','
     << r.count_B << ',' << r.count_AB << ',' << frequency(r.count_A, r.samples) << ','
     << frequency(r.count_B, r.samples) << ',' << frequency(r.count_AB, r.samples);
  return os.str();
}

std::string explain_json(const Graph& g, const RootedTree& t, const RunConfig& config) {
  const ParameterSet& p = config.params;
  p.validate();
  const std::size_t k = t.edge_count();
  const auto kk = static_cast<std::int64_t>(k);
  Json j;
  j["digest"] = instance_digest(g, t);
  j["k"] = k;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["params"] = params_json(p);
  const bool hypothesis = g.vertex_count() > 0 && average_degree(g) > Rational(kk - 1);
  j["average_degree"] = g.vertex_count() > 0 ? average_degree(g).to_string() : "undefined";
  j["hypothesis"] = hypothesis;
  j["thresholds"] = Json{{"leaf_target", leaf_target(k, p)},
                         {"r1_target", r1_target(k, p)},
                         {"prefix_length", prefix_length(k, p)},
                         {"reserve_size", reserve_size(k, p)},
                         {"s_prime_size", scaled_sqrt_ceil(p.c_sprime, p.delta, kk)},
                         {"A_bound_floor", scaled_sqrt_floor(p.c_A, p.delta, kk)}};
  const std::size_t leaves = t.leaves().size();
  const bool many = has_many_leaves(t, k, p);
  j["tree"] = Json{{"leaves", leaves}, {"many_leaves", many}};
  if (many) {
    const LeafApparatus app = build_leaf_apparatus(t, k, p);
    j["case"] = "case1";
    j["case1"] = Json{{"root", app.root()},
                      {"L", app.L.size()},
                      {"P1", app.P1.size()},
                      {"P2", app.P2.size()},
                      {"P3", app.P3.size()}};
  } else {
    const PathDecomposition d = decompose_degree2(t);
    j["case"] = "case2";
    Json c2{{"D1", d.D1.size()}, {"D2", d.D2.size()}, {"paths", d.R.size()}};
    try {
      const PathDecomposition s = split_paths(d, k, p);
      c2["R1_paths"] = s.R1.size();
      c2["R2_paths"] = s.R2.size();
      c2["severed"] = s.severed.has_value();
    } catch (const EngineFailure& f) {
      c2["split_failure"] = f.trace().reason;
    }
    j["case2"] = c2;
  }
  if (hypothesis) {
    const Reduction red = minimal_reduction(g, k);
    const Classification c = classify(red.graph, k, p);
    j["reduction"] = Json{{"deleted", red.deleted.size()}, {"remaining", red.graph.vertex_count()}};
    j["classification"] = Json{{"a", c.a},
                               {"S", c.S.size()},
                               {"S_prime", c.S_prime.size()},
                               {"H", c.H.size()},
                               {"G_prime", c.G_prime.size()},
                               {"min_degree_gprime", c.min_degree_gprime},
                               {"min_codegree_gprime", c.min_codegree_gprime}};
    j["flags"] = Json{{"in_regime", c.in_regime},
                      {"high_set_large", c.high_set_large},
                      {"gprime_min_degree", c.gprime_min_degree},
                      {"gprime_codegree", c.gprime_codegree},
                      {"high_disjoint_small", c.high_disjoint_small}};
    const auto spot = dense_spot_test(red.graph, k, c);
    if (spot) {
      j["dense_spot"] = Json{{"center", red.to_host[static_cast<std::size_t>(spot->center)]},
                             {"size", spot->vertices.size()},
                             {"min_degree", spot->min_degree},
                             {"spans_tree", spot->spans_tree}};
    } else {
      j["dense_spot"] = nullptr;
    }
  }
  return j.dump(2);
}

}  // namespace esembed
