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

#include "esembed/formats.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

#include "esembed/errors.hpp"

namespace esembed {
namespace {

constexpr std::size_t kGraph6Max = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits on whitespace and parses non-negative integers; throws ParseError with `line`.
std::vector<std::int64_t> integers(std::string_view text, std::size_t line) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r') ++end;
    std::int64_t value = 0;
    const auto token = text.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "' (column " +
                                 std::to_string(pos + 1) + ")");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) return true;
  }
  return false;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(0, "empty graph file");
  const auto header = integers(trim(line), line_no);
  if (header.size() != 2) throw ParseError(line_no, "header must be 'n m'");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    const auto uv = integers(trim(line), line_no);
    if (uv.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    if (static_cast<std::size_t>(uv[0]) >= n || static_cast<std::size_t>(uv[1]) >= n) {
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (next_content_line(in, line, line_no)) throw ParseError(line_no, "trailing content after the edge list");
  try {
    return Graph(n, edges);
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(0, "empty graph6 string");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw ParseError(0, "invalid graph6 character");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw ParseError(0, "unsupported graph6 size prefix");
    n = (static_cast<std::size_t>(line[1] - 63) << 12) | (static_cast<std::size_t>(line[2] - 63) << 6) |
        static_cast<std::size_t>(line[3] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (line.size() - pos != chars) {
    throw ParseError(0, "graph6 body has " + std::to_string(line.size() - pos) + " characters, expected " +
                            std::to_string(chars));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = line[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(n, edges);
}

std::string format_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kGraph6Max) throw DomainError("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::istream& in) {
  std::string first;
  std::size_t line_no = 0;
  if (!next_content_line(in, first, line_no)) throw ParseError(0, "empty graph input");
  const auto body = trim(first);
  if (body.find(' ') == std::string_view::npos && body.find('\t') == std::string_view::npos &&
      !(body.size() == 1 && body[0] >= '0' && body[0] <= '9')) {
    try {
      return parse_graph6(body);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  // Re-feed the header line to the edge-list parser with line numbers preserved.
  std::stringstream rest;
  for (std::size_t i = 1; i < line_no; ++i) rest << '\n';
  rest << first << '\n' << in.rdbuf();
  return parse_edge_list(rest);
}

void read_graph6_stream(std::istream& in, const std::function<void(std::size_t, const Graph&)>& sink) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
    sink(line_no, g);
  }
}

RootedTree parse_parent_array(std::string_view text) {
  text = trim(text);
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError(0, "tree line must look like 'k+1; p(1) ... p(k)'");
  const auto count = integers(trim(text.substr(0, semi)), 0);
  if (count.size() != 1 || count[0] < 1) throw ParseError(0, "tree vertex count must be a positive integer");
  const auto parents = integers(trim(text.substr(semi + 1)), 0);
  const auto n = static_cast<std::size_t>(count[0]);
  if (parents.size() + 1 != n) {
    throw ParseError(0, "expected " + std::to_string(n - 1) + " parent entries, found " +
                            std::to_string(parents.size()));
  }
  std::vector<Vertex> parent(n, kNoVertex);
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (static_cast<std::size_t>(parents[i]) >= n) throw ParseError(0, "parent id out of range");
    parent[i + 1] = static_cast<Vertex>(parents[i]);
  }
  try {
    return RootedTree(std::move(parent));
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

RootedTree parse_tree(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(0, "empty tree input");
  try {
    return parse_parent_array(line);
  } catch (const ParseError& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string format_parent_array(const RootedTree& t) {
  const RootedTree& rooted = t.root() == 0 ? t : t.rerooted(0);
  std::ostringstream out;
  out << rooted.vertex_count() << ';';
  for (std::size_t v = 1; v < rooted.vertex_count(); ++v) out << ' ' << rooted.parent(static_cast<Vertex>(v));
  return out.str();
}

}  // namespace esembed
