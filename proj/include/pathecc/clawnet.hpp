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

// Hamiltonian paths in connected {claw, net}-free graphs.
//
// Two phases, both O(n(n+m)):
//  1. Grow an induced dominating path. A vertex z at distance 2 is reached
//     through some y whose path neighbors, absent a claw or net, are one
//     endpoint or an end edge; the path is extended or its end replaced by
//     y, z, and the dominated set strictly grows.
//  2. Thread the remaining vertices into it. Absent a claw, every outside
//     vertex sees two consecutive path vertices or only path endpoints. The
//     ones hung on edge i >= 1 (least such i) form a clique; the ones at the
//     front have independence number <= 2 and are covered by two paths.
//
// Both phases report failure (nullopt) instead of trusting the input class;
// callers keep whatever certificate they already hold.

#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "pathecc/graph.hpp"
#include "pathecc/witness.hpp"

namespace pathecc {

namespace detail {

inline bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  return VertexPath(p).valid_in(g) && static_cast<bool>(check_induced_path(g, p));
}

inline std::optional<std::vector<Vertex>> grow_step(const Graph& g, const std::vector<Vertex>& p,
                                                    const std::vector<Distance>& dist, Vertex z, Vertex y) {
  const std::size_t m = p.size();
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < m; ++i)
    if (g.adjacent(y, p[i])) at.push_back(i);
  auto with = [&](std::initializer_list<Vertex> head, std::size_t from, std::size_t to,
                  std::initializer_list<Vertex> tail) {
    std::vector<Vertex> out(head);
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(from), p.begin() + static_cast<std::ptrdiff_t>(to));
    out.insert(out.end(), tail);
    return out;
  };
  using Idx = std::vector<std::size_t>;
  if (at == Idx{0}) return with({y}, 0, m, {});
  if (at == Idx{m - 1}) return with({}, 0, m, {y});
  if (m >= 3 && at == Idx{0, 1}) return with({z, y}, 1, m, {});
  if (m >= 3 && at == Idx{m - 2, m - 1}) return with({}, 0, m - 1, {y, z});
  if (m == 2 && at == Idx{0, 1}) {
    // Vertices seen only by one end and by neither y nor z.
    auto lonely = [&](Vertex keep, Vertex other) {
      std::vector<Vertex> out;
      for (Vertex w : g.neighbors(keep))
        if (w != other && w != y && dist[w] == 1 && !g.adjacent(w, other) && !g.adjacent(w, y) && !g.adjacent(w, z))
          out.push_back(w);
      return out;
    };
    auto l1 = lonely(p[0], p[1]);
    auto l2 = lonely(p[1], p[0]);
    if (l1.empty()) return std::vector<Vertex>{z, y, p[1]};
    if (l2.empty()) return std::vector<Vertex>{z, y, p[0]};
    for (Vertex w2 : l2)
      if (g.adjacent(l1.front(), w2)) return std::vector<Vertex>{z, y, p[0], l1.front(), w2};
  }
  return std::nullopt;
}

}  // namespace detail

/// An induced path dominating g, or nullopt if the growth rule gets stuck
/// (which needs an induced claw or net).
inline std::optional<VertexPath> induced_dominating_path(const Graph& g) {
  if (g.order() < 1 || !is_connected(g)) throw PreconditionError("graph must be connected and nonempty");
  std::vector<Vertex> p{0};
  std::size_t covered = detail::covered_count(g, p, 1);
  for (Vertex round = 0; round <= g.order(); ++round) {
    auto dist = detail::bfs(g, p, 2);
    Vertex z = -1;
    for (Vertex v = 0; v < g.order() && z < 0; ++v)
      if (dist[v] == 2) z = v;
    if (z < 0) return VertexPath(std::move(p));
    Vertex y = -1;
    for (Vertex t : g.neighbors(z))
      if (dist[t] == 1) {
        y = t;
        break;
      }
    auto next = detail::grow_step(g, p, dist, z, y);
    if (!next || !detail::is_induced_path(g, *next)) return std::nullopt;
    const std::size_t c = detail::covered_count(g, *next, 1);
    if (c <= covered) return std::nullopt;
    p = std::move(*next);
    covered = c;
  }
  return std::nullopt;
}

namespace detail {

/// Covers `vs` with as few paths as greedy endpoint merging finds, keeping the
/// invariant that no two paths have adjacent endpoints.
inline std::vector<std::deque<Vertex>> greedy_path_cover(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::deque<Vertex>> paths;
  for (Vertex s : vs) {
    std::deque<Vertex> cur{s};
    bool merged = true;
    while (merged) {
      merged = false;
      for (std::size_t i = 0; i < paths.size() && !merged; ++i) {
        auto& q = paths[i];
        if (g.adjacent(cur.back(), q.front())) {
          cur.insert(cur.end(), q.begin(), q.end());
        } else if (g.adjacent(cur.back(), q.back())) {
          cur.insert(cur.end(), q.rbegin(), q.rend());
        } else if (g.adjacent(cur.front(), q.back())) {
          cur.insert(cur.begin(), q.begin(), q.end());
        } else if (g.adjacent(cur.front(), q.front())) {
          cur.insert(cur.begin(), q.rbegin(), q.rend());
        } else {
          continue;
        }
        paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(i));
        merged = true;
      }
    }
    paths.push_back(std::move(cur));
  }
  return paths;
}

}  // namespace detail

/// Threads every vertex into an induced dominating path p. Returns nullopt
/// if some structural step fails (only possible with an induced claw).
inline std::optional<VertexPath> thread_hamiltonian(const Graph& g, const VertexPath& p) {
  const Vertex n = g.order();
  const std::size_t m = p.size();
  const auto pos = detail::positions(n, p.vertices());
  std::vector<std::vector<Vertex>> anchored(m);
  std::vector<Vertex> front;  // sees p[0] only
  std::vector<Vertex> tail;   // sees only endpoints, including p[m-1]
  for (Vertex z = 0; z < n; ++z) {
    if (pos[z] >= 0) continue;
    std::vector<std::size_t> at;
    for (Vertex w : g.neighbors(z))
      if (pos[w] >= 0) at.push_back(static_cast<std::size_t>(pos[w]));
    std::sort(at.begin(), at.end());
    if (at.empty()) return std::nullopt;
    auto consecutive = std::adjacent_find(at.begin(), at.end(), [](std::size_t a, std::size_t b) { return b == a + 1; });
    if (consecutive != at.end()) {
      anchored[*consecutive].push_back(z);
    } else if (at.back() == m - 1 && (at.size() == 1 || (at.size() == 2 && at.front() == 0))) {
      tail.push_back(z);
    } else if (at.size() == 1 && at.front() == 0) {
      front.push_back(z);
    } else {
      return std::nullopt;
    }
  }
  if (m == 1) std::swap(front, tail);

  std::vector<Vertex> head = front;
  if (m >= 2) head.insert(head.end(), anchored[0].begin(), anchored[0].end());
  auto cover = detail::greedy_path_cover(g, head);
  if (cover.size() > 2) return std::nullopt;
  std::deque<Vertex> before;
  std::deque<Vertex> after;
  if (m == 1) {
    if (!cover.empty()) before = cover[0];
    if (cover.size() == 2) after = cover[1];
  } else {
    const auto on_edge = detail::membership(n, anchored[0]);
    if (cover.size() == 1) {
      before = cover[0];
    } else if (cover.size() == 2) {
      int yi = -1;
      for (int i = 0; i < 2 && yi < 0; ++i) {
        if (on_edge[cover[i].back()]) yi = i;
        else if (on_edge[cover[i].front()]) {
          std::reverse(cover[i].begin(), cover[i].end());
          yi = i;
        }
      }
      if (yi < 0) return std::nullopt;
      after = cover[yi];
      before = cover[1 - yi];
    }
  }

  std::vector<Vertex> out(before.begin(), before.end());
  out.push_back(p[0]);
  out.insert(out.end(), after.begin(), after.end());
  for (std::size_t i = 1; i < m; ++i) {
    if (i >= 2) out.insert(out.end(), anchored[i - 1].begin(), anchored[i - 1].end());
    out.push_back(p[i]);
  }
  out.insert(out.end(), tail.begin(), tail.end());
  VertexPath h(std::move(out));
  if (h.size() != static_cast<std::size_t>(n) || !h.valid_in(g)) return std::nullopt;
  return h;
}

/// Hamiltonian path of a connected graph, found by the two phases above;
/// nullopt means a phase failed, which requires an induced claw or net.
inline std::optional<VertexPath> claw_net_free_hamiltonian_path(const Graph& g) {
  auto p = induced_dominating_path(g);
  if (!p) return std::nullopt;
  return thread_hamiltonian(g, *p);
}

}  // namespace pathecc
