// Copyright 2026 The pathecc Authors
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

#include <charconv>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathecc/graph.hpp"

namespace pathecc {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_int(std::string_view tok, std::int64_t& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

[[noreturn]] inline void fail_at(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

/// Parses the edge-list format: '#' comment lines, a header "n m", then
/// exactly m lines "u v".
inline Graph parse_edge_list(std::string_view text) {
  constexpr std::int64_t kMaxOrder = std::numeric_limits<Vertex>::max();
  std::optional<GraphBuilder> builder;
  std::int64_t expected = 0;
  std::int64_t seen = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    auto toks = detail::split_ws(line);
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b)) {
      detail::fail_at(lineno, builder ? "malformed edge line" : "malformed header, expected \"n m\"");
    }
    if (!builder) {
      if (a < 0 || b < 0) detail::fail_at(lineno, "malformed header, negative count");
      if (a > kMaxOrder) detail::fail_at(lineno, "vertex count exceeds 2^31-1");
      if (b > a * (a - 1) / 2) detail::fail_at(lineno, "edge count exceeds n(n-1)/2");
      builder.emplace(static_cast<Vertex>(a));
      expected = b;
      continue;
    }
    if (seen == expected) detail::fail_at(lineno, "more edge lines than the header declares");
    if (a < 0 || a >= builder->order() || b < 0 || b >= builder->order())
      detail::fail_at(lineno, "edge endpoint out of range");
    if (a == b) detail::fail_at(lineno, "self-loop at vertex " + std::to_string(a));
    if (!builder->try_add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
      detail::fail_at(lineno, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    ++seen;
  }
  if (!builder) throw InputError("line " + std::to_string(lineno) + ": missing header");
  if (seen != expected)
    throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(expected) +
                     " edges, found " + std::to_string(seen));
  return std::move(*builder).build();
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

struct Highlight {
  std::string label;
  std::vector<Vertex> vertices;
};

/// Fill colors handed out to highlight sets in order; wraps around.
inline constexpr std::string_view kDotPalette[] = {"#e41a1c", "#377eb8", "#4daf4a",
                                                   "#984ea3", "#ff7f00", "#a65628"};

/// Deterministic DOT rendering. A vertex in several highlight sets takes the
/// color of the first one listed.
inline std::string emit_dot(const Graph& g, const std::vector<Highlight>& highlights = {}) {
  constexpr std::size_t kColors = std::size(kDotPalette);
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < highlights.size(); ++i) {
    detail::check_ids(g, highlights[i].vertices);
    for (Vertex v : highlights[i].vertices)
      if (color[v] < 0) color[v] = static_cast<int>(i);
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < highlights.size(); ++i)
    os << "  // " << highlights[i].label << ": " << kDotPalette[i % kColors] << "\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (color[v] >= 0) {
      os << " [style=filled, fillcolor=\"" << kDotPalette[color[v] % kColors] << "\", group=\""
         << highlights[color[v]].label << "\"]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pathecc
