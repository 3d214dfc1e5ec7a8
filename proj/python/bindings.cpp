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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "esembed/embedding.hpp"
#include "esembed/errors.hpp"
#include "esembed/formats.hpp"
#include "esembed/generators.hpp"
#include "esembed/graph.hpp"
#include "esembed/harness.hpp"
#include "esembed/oracle.hpp"
#include "esembed/tree.hpp"

namespace py = pybind11;
using namespace esembed;

namespace {

std::optional<std::chrono::milliseconds> to_deadline(std::optional<std::int64_t> ms) {
  if (!ms) return std::nullopt;
  if (*ms < 0) throw DomainError("deadline_ms must be non-negative");
  return std::chrono::milliseconds(*ms);
}

ParameterSet make_params(const std::string& delta, const std::string& preset, std::optional<std::uint32_t> retry_budget) {
  const Rational d = Rational::parse(delta);
  ParameterSet p;
  if (preset == "desk") {
    p = ParameterSet::desk(d);
  } else if (preset != "paper") {
    throw DomainError("preset must be 'desk' or 'paper'");
  }
  p.delta = d;
  if (retry_budget) p.retry_budget = *retry_budget;
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_esembed, m) {
  m.doc() = "Tree embedding engine and exact containment oracle for dense host graphs";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RejectedInput>(m, "RejectedInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EngineFailure>(m, "EngineFailure", PyExc_RuntimeError);
  (void)domain_error;

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> e(edges.begin(), edges.end());
             return Graph(n, e);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("complete", &Graph::complete, py::arg("n"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto& [u, v] : g.edges()) out.emplace_back(u, v);
        return out;
      })
      .def("average_degree", [](const Graph& g) { return average_degree(g).to_string(); })
      .def("to_graph6", &format_graph6)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<RootedTree>(m, "Tree")
      .def(py::init([](const std::vector<Vertex>& parent) { return RootedTree(parent); }), py::arg("parent"))
      .def_property_readonly("k", &RootedTree::edge_count)
      .def("parents", [](const RootedTree& t) {
        std::vector<Vertex> out(t.vertex_count());
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = t.parent(static_cast<Vertex>(v));
        return out;
      })
      .def("degree", &RootedTree::degree)
      .def("to_parent_array", &format_parent_array)
      .def("__repr__", [](const RootedTree& t) { return "Tree(" + format_parent_array(t) + ")"; });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
  m.def("parse_graph", [](const std::string& s) {
    std::istringstream in(s);
    return parse_graph(in);
  }, py::arg("text"), "Edge list ('n m' header) or a single graph6 line.");
  m.def("parse_tree", [](const std::string& s) { return parse_parent_array(s); }, py::arg("text"));

  m.def("generate", [](const std::string& spec) -> py::object {
    const InstanceSpec s = InstanceSpec::parse(spec);
    if (s.kind == InstanceSpec::Kind::kTree) return py::cast(s.make_tree());
    return py::cast(s.make_host());
  }, py::arg("spec"), "Tree or host from 'tree:<family>:k=..' / 'host:<family>:k=..'.");

  m.def("contains_tree", [](const Graph& g, const RootedTree& t, std::optional<std::int64_t> deadline_ms) {
    OracleOptions o;
    o.deadline = to_deadline(deadline_ms);
    OracleResult r;
    {
      py::gil_scoped_release release;
      r = contains_tree_exact(g, t, o);
    }
    py::object embedding = py::none();
    if (r.embedding) embedding = py::cast(r.embedding->images());
    return py::make_tuple(to_string(r.decision), embedding, r.stats.nodes_expanded);
  }, py::arg("graph"), py::arg("tree"), py::arg("deadline_ms") = py::none(),
     "Exact search. Returns (decision, images or None, nodes expanded).");

  m.def("is_embedding", [](const Graph& g, const RootedTree& t, const std::vector<Vertex>& images) {
    return validate_embedding(g, t, PartialEmbedding::from_raw(images, g.vertex_count())).certifies_containment();
  }, py::arg("graph"), py::arg("tree"), py::arg("images"));

  m.def("embed_json", [](const Graph& g, const RootedTree& t, const std::string& delta, const std::string& preset,
                         std::uint64_t seed, std::optional<std::uint32_t> retry_budget,
                         std::optional<std::int64_t> deadline_ms, bool fallback, bool trace, bool skip_dense_spot,
                         bool sample_leaves) {
    RunConfig c;
    c.params = make_params(delta, preset, retry_budget);
    c.seed = seed;
    c.deadline = to_deadline(deadline_ms);
    c.fallback = fallback;
    c.trace = trace;
    c.skip_dense_spot = skip_dense_spot;
    c.sample_leaves = sample_leaves;
    py::gil_scoped_release release;
    return to_json(cmd_embed(g, t, c), trace);
  }, py::arg("graph"), py::arg("tree"), py::arg("delta") = "1/20", py::arg("preset") = "desk", py::arg("seed") = 1,
     py::arg("retry_budget") = py::none(), py::arg("deadline_ms") = py::none(), py::arg("fallback") = false,
     py::arg("trace") = false, py::arg("skip_dense_spot") = false, py::arg("sample_leaves") = false);

  m.def("verify_json", [](std::size_t k, std::size_t n_max, const std::string& mode, std::size_t samples,
                          std::uint64_t seed, const std::string& delta, std::size_t workers, bool iso_reject,
                          std::optional<std::int64_t> deadline_ms) {
    VerifyOptions o;
    o.k = k;
    o.n_max = n_max;
    if (mode == "sampled") {
      o.mode = VerifyMode::kSampled;
    } else if (mode != "exhaustive") {
      throw DomainError("mode must be 'exhaustive' or 'sampled'");
    }
    o.samples = samples;
    o.seed = seed;
    o.delta = Rational::parse(delta);
    o.workers = workers;
    o.iso_reject = iso_reject;
    o.deadline = to_deadline(deadline_ms);
    py::gil_scoped_release release;
    return to_json(verify_conjecture(o));
  }, py::arg("k"), py::arg("n_max"), py::arg("mode") = "exhaustive", py::arg("samples") = 1000, py::arg("seed") = 1,
     py::arg("delta") = "1/10", py::arg("workers") = 1, py::arg("iso_reject") = true,
     py::arg("deadline_ms") = py::none());

  m.def("stats_json", [](const Graph& g, std::size_t k, const std::string& delta, const std::string& preset,
                         std::uint64_t seed, std::size_t samples) {
    const ParameterSet p = make_params(delta, preset, std::nullopt);
    py::gil_scoped_release release;
    return to_json(cmd_stats(g, k, p, seed, samples));
  }, py::arg("graph"), py::arg("k"), py::arg("delta") = "1/20", py::arg("preset") = "desk", py::arg("seed") = 1,
     py::arg("samples") = 1000);

  m.def("explain_json", [](const Graph& g, const RootedTree& t, const std::string& delta, const std::string& preset) {
    RunConfig c;
    c.params = make_params(delta, preset, std::nullopt);
    return explain_json(g, t, c);
  }, py::arg("graph"), py::arg("tree"), py::arg("delta") = "1/20", py::arg("preset") = "desk");
}
