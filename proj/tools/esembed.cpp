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

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "esembed/generators.hpp"
#include "esembed/harness.hpp"
#include "esembed/oracle.hpp"

namespace {

using namespace esembed;

constexpr int kExitContained = 0;
constexpr int kExitNotContained = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitError = 3;

struct Common {
  std::string delta = "1/20";
  std::string preset = "desk";
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> retry_budget;
  std::optional<std::int64_t> deadline_ms;
  bool fallback = false;
  bool trace = false;
  std::string format = "json";
};

struct Inputs {
  std::string graph_path;
  std::string host_spec;
  std::string tree_path;
  std::string tree_spec;
};

// Errors raised while reading a named file keep the file name in the message.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fn>
auto with_input(const std::string& path, Fn&& fn) {
  try {
    if (path == "-") return fn(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return fn(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph load_graph(const Inputs& in) {
  if (!in.graph_path.empty() == !in.host_spec.empty()) {
    throw InputError("exactly one of --graph and --host-spec is required");
  }
  if (!in.host_spec.empty()) return InstanceSpec::parse(in.host_spec).make_host();
  return with_input(in.graph_path, [](std::istream& s) { return parse_graph(s); });
}

RootedTree load_tree(const Inputs& in) {
  if (!in.tree_path.empty() == !in.tree_spec.empty()) {
    throw InputError("exactly one of --tree and --tree-spec is required");
  }
  if (!in.tree_spec.empty()) return InstanceSpec::parse(in.tree_spec).make_tree();
  return with_input(in.tree_path, [](std::istream& s) { return parse_tree(s); });
}

ParameterSet make_params(const Common& c) {
  const Rational delta = Rational::parse(c.delta);
  ParameterSet p = c.preset == "paper" ? ParameterSet::paper() : ParameterSet::desk(delta);
  p.delta = delta;
  if (c.retry_budget) p.retry_budget = *c.retry_budget;
  p.validate();
  return p;
}

RunConfig make_config(const Common& c) {
  RunConfig cfg;
  cfg.params = make_params(c);
  cfg.seed = c.seed;
  if (c.deadline_ms) {
    if (*c.deadline_ms < 0) throw DomainError("--deadline must be non-negative");
    cfg.deadline = std::chrono::milliseconds(*c.deadline_ms);
  }
  cfg.fallback = c.fallback;
  cfg.trace = c.trace;
  cfg.format = c.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  return cfg;
}

void add_common(CLI::App* cmd, Common& c, bool engine_flags) {
  cmd->add_option("--delta-eff", c.delta, "Effective delta (rational, e.g. 1/20 or 0.05)")->capture_default_str();
  cmd->add_option("--preset", c.preset, "Constant preset")
      ->check(CLI::IsMember({"desk", "paper"}))
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "Run seed")->capture_default_str();
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  if (engine_flags) {
    cmd->add_option("--retry-budget", c.retry_budget, "Permutation draws before giving up");
    cmd->add_option("--deadline", c.deadline_ms, "Per oracle call, in milliseconds");
    cmd->add_flag("--fallback", c.fallback, "Run the exact oracle on the whole host after an engine failure");
    cmd->add_flag("--trace", c.trace, "Include per-phase detail and failure traces");
  }
}

void add_inputs(CLI::App* cmd, Inputs& in, bool tree) {
  cmd->add_option("--graph", in.graph_path, "Host graph file (edge list or graph6; '-' for stdin)");
  cmd->add_option("--host-spec", in.host_spec, "Generated host, e.g. host:paper_regime:k=100,delta=1/20");
  if (tree) {
    cmd->add_option("--tree", in.tree_path, "Tree file in parent-array format");
    cmd->add_option("--tree-spec", in.tree_spec, "Generated tree, e.g. tree:spider:k=100,legs=4");
  }
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::kEmbeddedByEngine:
    case Outcome::kEmbeddedByOracleFallback:
      return kExitContained;
    case Outcome::kNoEmbedding:
      return kExitNotContained;
    case Outcome::kIndeterminate:
      return kExitIndeterminate;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree embedding engine and exact containment oracle for dense host graphs"};
  app.require_subcommand(1);

  Common common;
  Inputs inputs;

  auto* embed = app.add_subcommand("embed", "Embed a tree into a host graph");
  add_common(embed, common, true);
  add_inputs(embed, inputs, true);
  bool skip_spot = false;
  bool sample_leaves = false;
  embed->add_flag("--skip-dense-spot", skip_spot, "Skip the dense-spot shortcut");
  embed->add_flag("--sample-leaves", sample_leaves, "Draw the cut leaf set at random");

  auto* verify = app.add_subcommand("verify", "Check tree containment over enumerated, sampled or streamed graphs");
  add_common(verify, common, false);
  VerifyOptions vopt;
  std::string mode = "exhaustive";
  std::string stream_path;
  std::optional<std::int64_t> verify_deadline;
  bool no_iso = false;
  verify->add_option("--k", vopt.k, "Tree edges")->capture_default_str();
  verify->add_option("--n-max", vopt.n_max, "Largest host order")->capture_default_str();
  verify->add_option("--mode", mode, "Enumeration mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  verify->add_option("--samples", vopt.samples, "Graphs drawn in sampled mode")->capture_default_str();
  verify->add_option("--workers", vopt.workers, "Worker threads")->capture_default_str();
  verify->add_option("--deadline", verify_deadline, "Per oracle call, in milliseconds");
  verify->add_option("--input", stream_path, "graph6 stream ('-' for stdin) instead of enumeration");
  verify->add_flag("--no-iso", no_iso, "Keep isomorphic copies during enumeration");

  auto* stats = app.add_subcommand("stats", "Monte-Carlo statistics of the permutation sample");
  add_common(stats, common, false);
  add_inputs(stats, inputs, false);
  std::optional<std::size_t> stats_k;
  std::size_t samples = 1000;
  stats->add_option("--k", stats_k, "Tree edges (default n - 1)");
  stats->add_option("--samples", samples, "Number of permutations")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate a tree or host instance");
  std::string spec_text;
  std::optional<std::uint64_t> gen_seed;
  bool graph6 = false;
  gen->add_option("spec", spec_text, "tree:<family>:k=..,... or host:<family>:k=..,...")->required();
  gen->add_option("--seed", gen_seed, "Overrides the seed in the spec");
  gen->add_flag("--graph6", graph6, "Write hosts as graph6 instead of an edge list");

  auto* explain = app.add_subcommand("explain", "Show classification and thresholds without embedding");
  add_common(explain, common, false);
  add_inputs(explain, inputs, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*embed) {
      RunConfig cfg = make_config(common);
      cfg.skip_dense_spot = skip_spot;
      cfg.sample_leaves = sample_leaves;
      const Graph g = load_graph(inputs);
      const RootedTree t = load_tree(inputs);
      const RunReport r = cmd_embed(g, t, cfg);
      if (cfg.format == OutputFormat::kCsv) {
        std::cout << csv_header_embed() << '\n' << to_csv(r) << '\n';
      } else {
        std::cout << to_json(r, cfg.trace) << '\n';
      }
      return exit_for(r.outcome);
    }
    if (*verify) {
      std::optional<std::chrono::milliseconds> deadline;
      if (verify_deadline) deadline = std::chrono::milliseconds(*verify_deadline);
      if (!stream_path.empty()) {
        const auto verdicts =
            with_input(stream_path, [&](std::istream& s) { return verify_stream(s, vopt.k, deadline); });
        int code = kExitContained;
        for (const auto& v : verdicts) {
          std::cout << to_json_line(v) << '\n';
          if (v.hypothesis && v.decision == Decision::kNotContained) code = kExitNotContained;
          if (v.decision == Decision::kIndeterminate && code == kExitContained) code = kExitIndeterminate;
        }
        return code;
      }
      vopt.mode = mode == "sampled" ? VerifyMode::kSampled : VerifyMode::kExhaustive;
      vopt.seed = common.seed;
      vopt.delta = Rational::parse(common.delta);
      vopt.deadline = deadline;
      vopt.iso_reject = !no_iso;
      const VerifyReport r = verify_conjecture(vopt);
      if (common.format == "csv") {
        std::cout << csv_header_verify() << '\n' << to_csv(r) << '\n';
      } else {
        std::cout << to_json(r) << '\n';
      }
      if (!r.counterexamples.empty()) return kExitNotContained;
      return r.indeterminate > 0 ? kExitIndeterminate : kExitContained;
    }
    if (*stats) {
      const ParameterSet p = make_params(common);
      const Graph g = load_graph(inputs);
      const std::size_t k = stats_k.value_or(g.vertex_count() == 0 ? 0 : g.vertex_count() - 1);
      const StatsReport r = cmd_stats(g, k, p, common.seed, samples);
      if (common.format == "csv") {
        std::cout << csv_header_stats() << '\n' << to_csv(r) << '\n';
      } else {
        std::cout << to_json(r) << '\n';
      }
      return kExitContained;
    }
    if (*gen) {
      InstanceSpec spec = InstanceSpec::parse(spec_text);
      if (gen_seed) spec.seed = *gen_seed;
      if (spec.kind == InstanceSpec::Kind::kTree) {
        std::cout << format_parent_array(spec.make_tree()) << '\n';
      } else {
        const Graph g = spec.make_host();
        std::cout << (graph6 ? format_graph6(g) + "\n" : format_edge_list(g));
      }
      return kExitContained;
    }
    if (*explain) {
      const RunConfig cfg = make_config(common);
      const Graph g = load_graph(inputs);
      const RootedTree t = load_tree(inputs);
      std::cout << explain_json(g, t, cfg) << '\n';
      return kExitContained;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
