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

"""Tree embedding engine and exact containment oracle for dense host graphs."""

import json
from fractions import Fraction

from esembed._esembed import (
    DomainError,
    EngineFailure,
    Graph,
    ParseError,
    RejectedInput,
    Tree,
    contains_tree,
    generate,
    is_embedding,
    parse_graph,
    parse_graph6,
    parse_tree,
)
from esembed import _esembed

__all__ = [
    "DomainError",
    "EngineFailure",
    "Graph",
    "ParseError",
    "RejectedInput",
    "Tree",
    "average_degree",
    "contains_tree",
    "embed",
    "explain",
    "generate",
    "is_embedding",
    "parse_graph",
    "parse_graph6",
    "parse_tree",
    "stats",
    "verify",
]


def _rational(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def average_degree(graph):
    return Fraction(graph.average_degree())


def embed(graph, tree, delta="1/20", **options):
    """Runs the full pipeline and returns the report as a dict."""
    return json.loads(_esembed.embed_json(graph, tree, delta=_rational(delta), **options))


def verify(k, n_max, delta="1/10", **options):
    return json.loads(_esembed.verify_json(k, n_max, delta=_rational(delta), **options))


def stats(graph, k, delta="1/20", **options):
    return json.loads(_esembed.stats_json(graph, k, delta=_rational(delta), **options))


def explain(graph, tree, delta="1/20", **options):
    return json.loads(_esembed.explain_json(graph, tree, delta=_rational(delta), **options))
