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

// Exhaustive reference procedures. Everything here is exponential and gated
// by a cap; exceeding a cap throws CapExceeded rather than degrading.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "pathecc/graph.hpp"
#include "pathecc/witness.hpp"

namespace pathecc {

struct OracleCaps {
  Vertex path_eccentricity = 12;
  Vertex induced_pattern = 12;
  Vertex star_c1p = 9;
  Vertex stm_closed_neighborhood = 13;
};

namespace detail {

inline void require_cap(Vertex n, Vertex cap, const char* what) {
  if (n > cap || n > 63)
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

inline std::vector<std::vector<Distance>> all_pairs_bfs(const Graph& g) {
  std::vector<std::vector<Distance>> d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs(g, std::span<const Vertex>(&v, 1)));
  return d;
}

}  // namespace detail

struct PathEccentricityResult {
  Distance eccentricity = 0;
  VertexPath path;
};

/// Exact path eccentricity by depth-first enumeration of every simple path.
/// Paths are visited in lexicographic order of their vertex sequences, so the
/// reported path is the lexicographically least optimal one. The search stops
/// early only once eccentricity 0 is reached.
inline PathEccentricityResult brute_path_eccentricity(const Graph& g, const OracleCaps& caps = {}) {
  const Vertex n = g.order();
  detail::require_cap(n, caps.path_eccentricity, "brute_path_eccentricity");
  if (n == 0) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  const auto apsp = detail::all_pairs_bfs(g);

  PathEccentricityResult best{n, {}};
  std::vector<Vertex> path;
  std::vector<std::vector<Distance>> near(static_cast<std::size_t>(n) + 1,
                                          std::vector<Distance>(static_cast<std::size_t>(n), n));
  bool done = false;

  auto visit = [&](auto&& self, std::uint64_t used, int depth) -> void {
    const auto& cur = near[depth];
    Distance ecc = *std::max_element(cur.begin(), cur.end());
    if (ecc < best.eccentricity) {
      best = {ecc, VertexPath(path)};
      if (ecc == 0) {
        done = true;
        return;
      }
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (used >> w & 1U) continue;
      auto& next = near[depth + 1];
      for (Vertex v = 0; v < n; ++v) next[v] = std::min(cur[v], apsp[w][v]);
      path.push_back(w);
      self(self, used | (std::uint64_t{1} << w), depth + 1);
      path.pop_back();
      if (done) return;
    }
  };

  for (Vertex s = 0; s < n && !done; ++s) {
    path.assign(1, s);
    near[1] = apsp[s];
    visit(visit, std::uint64_t{1} << s, 1);
  }
  return best;
}

/// Hamiltonian-path decision by subset dynamic programming; independent of
/// the path enumeration above.
inline bool has_hamiltonian_path_dp(const Graph& g) {
  const Vertex n = g.order();
  if (n > 24) throw CapExceeded("has_hamiltonian_path_dp: order exceeds 24");
  if (n <= 1) return true;
  const std::uint32_t full = (1U << n) - 1;
  // reach[mask] = set of end vertices of a path covering exactly mask
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) reach[1U << v] = 1U << v;
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1U << w;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      Vertex v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = nbr[v] & ~mask;
      while (ext) {
        Vertex w = std::countr_zero(ext);
        ext &= ext - 1;
        reach[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return reach[full] != 0;
}

/// A longest path (lexicographically least among longest), by enumeration.
inline VertexPath brute_longest_path(const Graph& g, Vertex cap = 12) {
  const Vertex n = g.order();
  detail::require_cap(n, cap, "brute_longest_path");
  if (n == 0) throw PreconditionError("empty graph");
  std::vector<Vertex> path;
  std::vector<Vertex> best;
  auto visit = [&](auto&& self, std::uint64_t used) -> bool {
    if (path.size() > best.size()) best = path;
    if (best.size() == static_cast<std::size_t>(n)) return true;
    for (Vertex w : g.neighbors(path.back())) {
      if (used >> w & 1U) continue;
      path.push_back(w);
      bool stop = self(self, used | (std::uint64_t{1} << w));
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    if (visit(visit, std::uint64_t{1} << s)) break;
  }
  return VertexPath(best);
}

namespace detail {

class BitRows {
 public:
  explicit BitRows(const Graph& g) : n_(g.order()), words_((static_cast<std::size_t>(n_) + 63) / 64) {
    bits_.assign(words_ * static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) row(v)[w / 64] |= std::uint64_t{1} << (w % 64);
  }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(Vertex v) const { return bits_.data() + words_ * static_cast<std::size_t>(v); }
  std::uint64_t* row(Vertex v) { return bits_.data() + words_ * static_cast<std::size_t>(v); }

 private:
  Vertex n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// Induced-subgraph search. Pattern vertices are placed in order of
/// decreasing degree (ties by id), host candidates tried in ascending id.
/// Returns embedding[p] = host vertex for pattern vertex p.
inline std::optional<std::vector<Vertex>> find_induced(const Graph& host, const Graph& pattern,
                                                       const OracleCaps& caps = {}) {
  const Vertex k = pattern.order();
  if (k > caps.induced_pattern)
    throw CapExceeded("find_induced: pattern order " + std::to_string(k) + " exceeds cap " +
                      std::to_string(caps.induced_pattern));
  if (k == 0) return std::vector<Vertex>{};
  if (k > host.order()) return std::nullopt;

  std::vector<Vertex> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });

  const detail::BitRows rows(host);
  const std::size_t words = rows.words();
  const Vertex n = host.order();
  std::vector<std::uint64_t> used(words, 0);
  std::vector<std::uint64_t> cand(words * static_cast<std::size_t>(k), 0);
  std::vector<Vertex> image(k, -1);

  auto fill = [&](int depth) {
    std::uint64_t* c = cand.data() + words * static_cast<std::size_t>(depth);
    for (std::size_t i = 0; i < words; ++i) c[i] = ~used[i];
    if (n % 64) c[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    const Vertex p = order[depth];
    for (int d = 0; d < depth; ++d) {
      const Vertex q = order[d];
      const std::uint64_t* r = rows.row(image[q]);
      if (pattern.adjacent(p, q))
        for (std::size_t i = 0; i < words; ++i) c[i] &= r[i];
      else
        for (std::size_t i = 0; i < words; ++i) c[i] &= ~r[i];
    }
  };

  auto place = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    fill(depth);
    std::uint64_t* c = cand.data() + words * static_cast<std::size_t>(depth);
    for (std::size_t i = 0; i < words; ++i) {
      while (c[i]) {
        const Vertex h = static_cast<Vertex>(i * 64 + std::countr_zero(c[i]));
        c[i] &= c[i] - 1;
        image[order[depth]] = h;
        used[h / 64] |= std::uint64_t{1} << (h % 64);
        if (self(self, depth + 1)) return true;
        used[h / 64] &= ~(std::uint64_t{1} << (h % 64));
      }
    }
    image[order[depth]] = -1;
    return false;
  };

  if (!place(place, 0)) return std::nullopt;
  return image;
}

inline bool contains_induced(const Graph& host, const Graph& pattern, const OracleCaps& caps = {}) {
  return find_induced(host, pattern, caps).has_value();
}

/// First vertex ordering (in lexicographic permutation order) under which
/// every vertex has its open or its closed neighborhood consecutive.
inline std::optional<std::vector<Vertex>> brute_star_c1p(const Graph& g, const OracleCaps& caps = {}) {
  const Vertex n = g.order();
  detail::require_cap(n, caps.star_c1p, "brute_star_c1p");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Vertex> pos(n);
  auto consecutive = [&](Vertex v, bool closed) {
    Vertex lo = n;
    Vertex hi = -1;
    Vertex count = 0;
    auto take = [&](Vertex w) {
      lo = std::min(lo, pos[w]);
      hi = std::max(hi, pos[w]);
      ++count;
    };
    for (Vertex w : g.neighbors(v)) take(w);
    if (closed) take(v);
    return count == 0 || hi - lo + 1 == count;
  };
  do {
    for (Vertex i = 0; i < n; ++i) pos[order[i]] = i;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) ok = consecutive(v, false) || consecutive(v, true);
    if (ok) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

/// First k-asteroidal triple in lexicographic order: an independent triple
/// where, for each member v, the other two lie in one component of G minus
/// the radius-k ball around v. nullopt means G is k-AT-free.
inline std::optional<std::array<Vertex, 3>> find_k_asteroidal_triple(const Graph& g, Distance k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const Vertex n = g.order();
  const auto apsp = detail::all_pairs_bfs(g);
  // comp[v][w]: component id of w in G - ball(v, k), or -1 inside the ball
  std::vector<std::vector<Vertex>> comp(n, std::vector<Vertex>(n, -1));
  for (Vertex v = 0; v < n; ++v) {
    auto& c = comp[v];
    auto outside = [&](Vertex w) { return apsp[v][w] == detail::kNoDist || apsp[v][w] > k; };
    Vertex next_id = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (!outside(s) || c[s] >= 0) continue;
      std::vector<Vertex> stack{s};
      c[s] = next_id;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
          if (outside(y) && c[y] < 0) {
            c[y] = next_id;
            stack.push_back(y);
          }
      }
      ++next_id;
    }
  }
  auto together = [&](Vertex v, Vertex a, Vertex b) { return comp[v][a] >= 0 && comp[v][a] == comp[v][b]; };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (together(a, b, c) && together(b, a, c) && together(c, a, b)) return std::array<Vertex, 3>{a, b, c};
      }
    }
  return std::nullopt;
}

inline bool is_k_at_free(const Graph& g, Distance k) { return !find_k_asteroidal_triple(g, k); }

namespace detail {

inline void require_stm_preconditions(const Graph& g, const std::array<Vertex, 3>& terminals,
                                      std::span<const Vertex> core) {
  check_ids(g, terminals);
  check_ids(g, core);
  if (core.empty()) throw PreconditionError("empty connector set");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (terminals[i] == terminals[j]) throw PreconditionError("terminals not distinct");
      if (g.adjacent(terminals[i], terminals[j])) throw PreconditionError("terminals not independent");
    }
  std::unordered_set<Vertex> in_core(core.begin(), core.end());
  for (Vertex t : terminals) {
    if (in_core.count(t)) throw PreconditionError("terminal lies in connector set");
    auto nb = g.neighbors(t);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in_core.count(w) != 0; }))
      throw PreconditionError("terminal " + std::to_string(t) + " has no neighbor in connector set");
  }
  LocalView view(g, core);
  if (!view.connected_without(-1)) throw PreconditionError("connector set is not connected");
}

}  // namespace detail

/// Minimum-cardinality W within `core` such that G[W + terminals] is an S, T
/// or M graph with extremities exactly `terminals`. Subsets are tried by size,
/// then lexicographically.
inline StmWitness brute_stm_search(const Graph& g, const std::array<Vertex, 3>& terminals,
                                   std::span<const Vertex> core, const OracleCaps& caps = {}) {
  detail::require_stm_preconditions(g, terminals, core);
  std::vector<Vertex> c(core.begin(), core.end());
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  std::unordered_set<Vertex> closed(c.begin(), c.end());
  for (Vertex v : c)
    for (Vertex w : g.neighbors(v)) closed.insert(w);
  if (static_cast<Vertex>(closed.size()) > caps.stm_closed_neighborhood)
    throw CapExceeded("brute_stm_search: |N[C]| = " + std::to_string(closed.size()) + " exceeds cap " +
                      std::to_string(caps.stm_closed_neighborhood));

  const int m = static_cast<int>(c.size());
  for (int size = 1; size <= m; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Vertex> h(terminals.begin(), terminals.end());
      for (int i : idx) h.push_back(c[i]);
      if (auto w = recognize_stm(g, h, terminals)) {
        if (auto r = classify_stm(g, *w); !r) throw InternalError("brute_stm_search: " + r.violation);
        return *w;
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw PreconditionError("no S/T/M structure found on the given terminals");
}

}  // namespace pathecc
