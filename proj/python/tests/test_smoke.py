# Copyright 2026 The esembed Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import esembed


def test_graph6_round_trip():
    g = esembed.parse_graph6("C~")
    assert (g.n, g.m) == (4, 6)
    assert g.to_graph6() == "C~"
    assert esembed.parse_graph("3 2\n0 1\n1 2\n").edges() == [(0, 1), (1, 2)]


def test_malformed_graph6_is_a_value_error():
    with pytest.raises(esembed.ParseError):
        esembed.parse_graph6("C!")
    with pytest.raises(ValueError):
        esembed.parse_graph6("C!")


def test_generators_and_average_degree():
    host = esembed.generate("host:disjoint_cliques:k=5,copies=3")
    assert esembed.average_degree(host) == Fraction(4)
    tree = esembed.generate("tree:spider:k=9,legs=3")
    assert tree.k == 9 and tree.degree(0) == 3
    assert tree.to_parent_array().startswith("10;")


def test_oracle_decisions():
    decision, images, nodes = esembed.contains_tree(esembed.Graph.complete(6), esembed.parse_tree("6; 0 1 2 3 4"))
    assert decision == "contained"
    assert esembed.is_embedding(esembed.Graph.complete(6), esembed.parse_tree("6; 0 1 2 3 4"), images)
    assert nodes >= 6
    host = esembed.generate("host:disjoint_cliques:k=4,copies=2")
    assert esembed.contains_tree(host, esembed.generate("tree:path:k=4"))[0] == "not-contained"


def test_embed_report():
    host = esembed.generate("host:paper_regime:k=80,delta=1/20,seed=2")
    tree = esembed.generate("tree:caterpillar:k=80")
    report = esembed.embed(host, tree, delta=Fraction(1, 20), seed=3, skip_dense_spot=True)
    assert report["outcome"] == "embedded-by-engine"
    assert report["branch"] in ("case1", "case2")
    assert esembed.is_embedding(host, tree, report["embedding"])
    again = esembed.embed(host, tree, delta=Fraction(1, 20), seed=3, skip_dense_spot=True)
    assert again == report


def test_hypothesis_failure_goes_to_oracle():
    host = esembed.generate("host:disjoint_cliques:k=5,copies=2")
    report = esembed.embed(host, esembed.generate("tree:star:k=5"))
    assert report["branch"] == "hypothesis-failed"
    assert report["outcome"] == "no-embedding"


def test_verify_stats_explain():
    v = esembed.verify(3, 5)
    assert v["counterexamples"] == []
    with pytest.raises(esembed.RejectedInput):
        esembed.verify(3, 11)
    s = esembed.stats(esembed.Graph.complete(60), 59, samples=20)
    assert s["samples"] == 20
    e = esembed.explain(esembed.Graph.complete(21), esembed.generate("tree:path:k=20"))
    assert e["case"] == "case2"


def test_bad_arguments():
    with pytest.raises(esembed.DomainError):
        esembed.generate("tree:octopus:k=3")
    with pytest.raises(ValueError):
        esembed.embed(esembed.Graph.complete(5), esembed.generate("tree:path:k=4"), preset="huge")
