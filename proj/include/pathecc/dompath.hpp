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

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pathecc/graph.hpp"
#include "pathecc/witness.hpp"

namespace pathecc {

/// Three vertex pairs whose six vertices induce exactly the three pair edges.
struct ThreeP2 {
  std::array<std::pair<Vertex, Vertex>, 3> pairs;

  friend bool operator==(const ThreeP2&, const ThreeP2&) = default;
};

struct DomPath {
  VertexPath path;
};

using DomCertificate = std::variant<DomPath, ThreeP2>;

enum class StepTag { Dominating, Extended, Rewired, Witness };

inline const char* to_string(StepTag t) {
  switch (t) {
    case StepTag::Dominating: return "DOMINATING";
    case StepTag::Extended: return "EXTENDED";
    case StepTag::Rewired: return "REWIRED";
    case StepTag::Witness: return "WITNESS";
  }
  return "?";
}

/// For DOMINATING `path` is the input; for WITNESS `witness` is set.
struct StepResult {
  StepTag tag = StepTag::Dominating;
  VertexPath path;
  std::optional<ThreeP2> witness;
};

inline Report check_three_p2(const Graph& g, const ThreeP2& w) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (const auto& [a, b] : w.pairs) {
    vs.push_back(a);
    vs.push_back(b);
    es.push_back({a, b});
  }
  return check_induced(g, vs, es);
}

inline Report check_dominating(const Graph& g, const VertexPath& p) {
  if (!p.valid_in(g)) return Report::fail("invalid path");
  auto d = detail::bfs(g, p.vertices(), 1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (d[v] == detail::kNoDist) return Report::fail("vertex " + std::to_string(v) + " not dominated");
  return Report::pass();
}

namespace detail {

inline Vertex outside_neighbor(const Graph& g, Vertex v, const std::vector<int>& pos) {
  for (Vertex w : g.neighbors(v))
    if (pos[w] < 0) return w;
  return -1;
}

}  // namespace detail

/// One improvement step towards a dominating path. Paths are read with
/// u = front, v = back, u' = p[1], v' = p[|p|-2].
inline StepResult dom_step(const Graph& g, const VertexPath& p) {
  require_path(g, p);
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  const auto& pv = p.vertices();
  auto dist = detail::bfs(g, pv, 2);
  Vertex x = -1;
  for (Vertex z = 0; z < g.order() && x < 0; ++z)
    if (dist[z] == detail::kNoDist || dist[z] == 2) x = z;
  if (x < 0) return {StepTag::Dominating, p, std::nullopt};
  // A vertex beyond distance 2 implies one at exactly 2 in a connected graph.
  x = -1;
  for (Vertex z = 0; z < g.order() && x < 0; ++z)
    if (dist[z] == 2) x = z;

  const std::size_t len = p.size();
  const auto pos = detail::positions(g.order(), pv);
  const Vertex u = p.front();
  const Vertex v = p.back();
  if (Vertex z = detail::outside_neighbor(g, u, pos); z >= 0) {
    std::vector<Vertex> out{z};
    out.insert(out.end(), pv.begin(), pv.end());
    return {StepTag::Extended, VertexPath(std::move(out)), std::nullopt};
  }
  if (Vertex z = detail::outside_neighbor(g, v, pos); z >= 0) {
    std::vector<Vertex> out = pv;
    out.push_back(z);
    return {StepTag::Extended, VertexPath(std::move(out)), std::nullopt};
  }

  Vertex y = -1;
  for (Vertex t : g.neighbors(x))
    if (dist[t] == 1) {
      y = t;
      break;
    }
  std::size_t iw = len;
  for (Vertex t : g.neighbors(y))
    if (pos[t] >= 0) iw = std::min(iw, static_cast<std::size_t>(pos[t]));
  if (len < 3) throw InternalError("dom_step: path too short after endpoint checks");
  const Vertex up = pv[1];
  const Vertex vp = pv[len - 2];
  if (g.adjacent(y, up)) {
    std::vector<Vertex> out{x, y};
    out.insert(out.end(), pv.begin() + 1, pv.end());
    return {StepTag::Extended, VertexPath(std::move(out)), std::nullopt};
  }
  if (g.adjacent(y, vp)) {
    std::vector<Vertex> out(pv.begin(), pv.end() - 1);
    out.push_back(y);
    out.push_back(x);
    return {StepTag::Extended, VertexPath(std::move(out)), std::nullopt};
  }

  if (len < 5 || iw < 2 || iw + 2 >= len) throw InternalError("dom_step: u', w, v' not distinct");
  const Vertex w = pv[iw];
  // P1 reversed: w-1 .. u'; P2 reversed: v' .. w+1.
  std::vector<Vertex> p1r(pv.rbegin() + static_cast<std::ptrdiff_t>(len - iw), pv.rend() - 1);
  std::vector<Vertex> p2r(pv.rbegin() + 1, pv.rend() - static_cast<std::ptrdiff_t>(iw + 1));
  auto rebuild = [&](std::vector<Vertex> head, std::initializer_list<Vertex> joint) {
    head.insert(head.end(), p1r.begin(), p1r.end());
    head.insert(head.end(), joint);
    head.insert(head.end(), p2r.begin(), p2r.end());
    return VertexPath(std::move(head));
  };
  if (g.adjacent(up, v)) return {StepTag::Extended, rebuild({x, y, w}, {v}), std::nullopt};
  if (g.adjacent(u, vp)) return {StepTag::Extended, rebuild({x, y, w}, {u}), std::nullopt};
  // Using both u and v here drops x so the step grows the path by one.
  if (g.adjacent(u, v)) return {StepTag::Extended, rebuild({y, w}, {u, v}), std::nullopt};

  for (Vertex a : {x, y})
    for (Vertex b : {u, v, up, vp})
      if (g.adjacent(a, b)) throw InternalError("dom_step: x or y adjacent to an end of the path");
  if (!g.adjacent(up, vp)) {
    ThreeP2 t{{std::pair{u, up}, std::pair{v, vp}, std::pair{x, y}}};
    if (auto r = check_three_p2(g, t); !r) throw InternalError("dom_step witness: " + r.violation);
    return {StepTag::Witness, p, t};
  }
  return {StepTag::Rewired, rebuild({x, y, w}, {}), std::nullopt};
}

struct DomStats {
  std::size_t steps = 0;
  std::size_t extended = 0;
  std::size_t rewired = 0;
};

using DomTraceSink = std::function<void(std::size_t step, const StepResult&)>;

/// Iterates dom_step from `start` (default: the single vertex 0) until the
/// path dominates G or a 3P_2 is exhibited. Outputs are re-checked.
inline DomCertificate dominating_path(const Graph& g, std::optional<VertexPath> start = std::nullopt,
                                      DomStats* stats = nullptr, const DomTraceSink& trace = {}) {
  if (g.order() < 1) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  VertexPath p = start ? *start : VertexPath{0};
  require_path(g, p);
  DomStats local;
  DomStats& st = stats ? *stats : local;
  st = {};
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::size_t covered = detail::covered_count(g, p.vertices(), 1);
  while (true) {
    StepResult r = dom_step(g, p);
    if (trace) trace(st.steps, r);
    if (r.tag == StepTag::Dominating) {
      if (auto c = check_dominating(g, p); !c) throw InternalError("dominating_path: " + c.violation);
      return DomPath{std::move(p)};
    }
    if (r.tag == StepTag::Witness) return *r.witness;
    ++st.steps;
    if (st.steps > n * n) throw InternalError("dominating_path exceeded n^2 steps");
    if (!r.path.valid_in(g)) throw InternalError("dom_step produced an invalid path");
    const std::size_t next_cov = detail::covered_count(g, r.path.vertices(), 1);
    if (r.tag == StepTag::Extended) {
      if (r.path.size() != p.size() + 1) throw InternalError("EXTENDED step did not grow the path by one");
      ++st.extended;
    } else {
      if (r.path.size() != p.size() || next_cov <= covered)
        throw InternalError("REWIRED step did not grow coverage at equal length");
      ++st.rewired;
    }
    p = std::move(r.path);
    covered = next_cov;
  }
}

}  // namespace pathecc
