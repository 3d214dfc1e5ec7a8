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

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "esembed/graph.hpp"
#include "esembed/tree.hpp"

namespace esembed {

// Edge list: first line "n m", then m lines "u v" (0-based). Blank lines are ignored.
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

// graph6 (n <= 258047). Leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

/// Edge-list or graph6, decided by the first non-blank line.
Graph parse_graph(std::istream& in);

/// One graph6 string per non-blank line; `sink` is called with (1-based line, graph).
/// Malformed lines throw ParseError carrying the line number.
void read_graph6_stream(std::istream& in, const std::function<void(std::size_t, const Graph&)>& sink);

// Tree: "k+1; p(1) p(2) ... p(k)", root implicitly 0.
RootedTree parse_parent_array(std::string_view text);
RootedTree parse_tree(std::istream& in);
/// Writes the tree rerooted at 0 when necessary.
std::string format_parent_array(const RootedTree& t);

}  // namespace esembed
