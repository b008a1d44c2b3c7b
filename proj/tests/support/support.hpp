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


// Independent reference code for the tests: nothing here calls the library's
// BFS, so checks built on it are not self-confirming.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "pathecc/pathecc.hpp"

namespace pathecc::testing {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline Graph make_graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph from_pairs(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

/// Adjacency matrix straight from the edge list.
inline std::vector<std::vector<char>> matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// All-pairs distances by Floyd-Warshall; kInf when unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  auto a = matrix(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
  return d;
}

inline std::vector<int> set_distance(const std::vector<std::vector<int>>& fw, const std::vector<Vertex>& s) {
  std::vector<int> out(fw.size(), kInf);
  for (std::size_t v = 0; v < fw.size(); ++v)
    for (Vertex x : s) out[v] = std::min(out[v], fw[v][static_cast<std::size_t>(x)]);
  return out;
}

/// Eccentricity of a vertex set from the all-pairs table (kInf if some
/// vertex is unreachable).
inline int eccentricity(const std::vector<std::vector<int>>& fw, const std::vector<Vertex>& s) {
  auto d = set_distance(fw, s);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

/// `p` is a simple path in g.
inline bool is_walk_simple(const Graph& g, const std::vector<Vertex>& p) {
  std::set<Vertex> seen(p.begin(), p.end());
  if (seen.size() != p.size()) return false;
  auto a = matrix(g);
  for (Vertex v : p)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!a[p[i - 1]][p[i]]) return false;
  return true;
}

/// The lists are pairwise disjoint induced paths with no edges between them.
inline bool is_induced_linear_forest(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  auto a = matrix(g);
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (std::size_t i = 0; i < parts[c].size(); ++i) {
      Vertex v = parts[c][i];
      if (v < 0 || v >= g.order() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(c);
      index[v] = static_cast<int>(i);
    }
  for (const Edge& e : g.edges()) {
    if (owner[e.u] < 0 || owner[e.v] < 0) continue;
    if (owner[e.u] != owner[e.v] || std::abs(index[e.u] - index[e.v]) != 1) return false;
  }
  for (const auto& p : parts)
    for (std::size_t i = 1; i < p.size(); ++i)
      if (!a[p[i - 1]][p[i]]) return false;
  return true;
}

/// Eccentricity of a vertex set by a plain queue BFS over the edge list;
/// kInf if some vertex is unreachable.
inline int queue_eccentricity(const Graph& g, const std::vector<Vertex>& s) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> d(n, kInf);
  std::vector<Vertex> q;
  for (Vertex v : s) {
    if (d[v] == 0) continue;
    d[v] = 0;
    q.push_back(v);
  }
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : adj[q[h]])
      if (d[w] == kInf) {
        d[w] = d[q[h]] + 1;
        q.push_back(w);
      }
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

inline bool is_hamiltonian_path(const Graph& g, const std::vector<Vertex>& p) {
  return static_cast<Vertex>(p.size()) == g.order() && is_walk_simple(g, p);
}

/// The vertices `vs` induce exactly the edges `es`.
inline bool induces_exactly(const Graph& g, const std::vector<Vertex>& vs, std::vector<std::pair<Vertex, Vertex>> es) {
  std::set<std::pair<Vertex, Vertex>> want;
  for (auto [u, v] : es) want.insert({std::min(u, v), std::max(u, v)});
  auto a = matrix(g);
  std::set<Vertex> uniq(vs.begin(), vs.end());
  if (uniq.size() != vs.size()) return false;
  std::size_t found = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Vertex u = std::min(vs[i], vs[j]);
      Vertex v = std::max(vs[i], vs[j]);
      bool edge = a[u][v];
      if (edge != static_cast<bool>(want.count({u, v}))) return false;
      found += edge;
    }
  return found == want.size();
}

inline Graph random_connected(Vertex n, double p, std::uint64_t seed) {
  return gen_random(GenSpec{GnpConnected{n, p}, seed});
}

/// No pattern occurs as an induced subgraph; patterns larger than g are
/// skipped rather than sent to the capped search.
inline bool free_of(const Graph& g, std::initializer_list<FamilySpec> pats) {
  for (const auto& f : pats) {
    Graph h = build_family(f);
    if (h.order() <= g.order() && contains_induced(g, h)) return false;
  }
  return true;
}

inline Graph three_p2() { return build_family(FamilySpec::three_pk(2)); }

}  // namespace pathecc::testing
