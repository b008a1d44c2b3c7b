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

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathecc/clawnet.hpp"
#include "pathecc/graph.hpp"
#include "pathecc/oracles.hpp"
#include "pathecc/witness.hpp"

namespace pathecc {

struct PathCert {
  VertexPath path;
  int k = 1;
  Distance eccentricity = 0;
};

struct WitnessCert {
  SolverWitness witness;
};

using Certificate = std::variant<PathCert, WitnessCert>;

/// Two induced k-vertex arms hanging off the ends of a shrunk path. p_u runs
/// u_prime .. u (u = path front), p_v runs v_prime .. v (v = path back).
struct ArmBundle {
  Vertex u_prime = -1;
  Vertex v_prime = -1;
  VertexPath p_u;
  VertexPath p_v;
};

struct ShrinkResult {
  VertexPath path;
  std::optional<ArmBundle> arms;  ///< nullopt: the path shrank to one vertex

  bool singleton() const noexcept { return !arms.has_value(); }
};

/// Extension that covers strictly more. `rule` is 's' (singleton), 'a', 'b'
/// or 'c'.
struct NewPath {
  VertexPath path;
  char rule = 's';
};

/// P_x, P_u, P_v: pairwise disjoint with no edges between them.
struct ThreePk {
  std::array<VertexPath, 3> parts;
};

using ExtendOutcome = std::variant<NewPath, ThreePk>;

struct TraceEvent {
  int iteration = 0;
  std::size_t path_len = 0;
  std::size_t covered = 0;
  std::string action;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SolveStats {
  int outer_iterations = 0;
  std::size_t peak_path_length = 0;
};

struct SolveOptions {
  /// Start from one end of a double-BFS diameter estimate instead of vertex 0.
  bool double_bfs_start = false;
  /// For k = 1, before returning an M_1 witness, try the {claw, net}-free
  /// Hamiltonian path construction; an M_1 core need not contain a claw or net.
  bool k1_completion = true;
  /// Grow the final path greedily at both ends (least-id outside neighbor).
  bool extend_endpoints = true;
  TraceSink trace;
};

namespace detail {

inline std::span<const Vertex> drop_front(const std::vector<Vertex>& p) { return {p.data() + 1, p.size() - 1}; }
inline std::span<const Vertex> drop_back(const std::vector<Vertex>& p) { return {p.data(), p.size() - 1}; }

/// Arm from the endpoint `end` of p (rest = p without end).
inline VertexPath build_arm(const Graph& g, Vertex end, std::span<const Vertex> rest, int k) {
  auto d_rest = bfs(g, rest, k - 1);
  const Vertex src[] = {end};
  auto d_end = bfs(g, src, k - 1);
  for (Vertex z = 0; z < g.order(); ++z) {
    if (d_end[z] == k - 1 && d_rest[z] == kNoDist) return VertexPath(descend(g, d_end, z));
  }
  throw InternalError("shrink: no private vertex for endpoint " + std::to_string(end));
}

inline void require_solver_input(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (g.order() < 1) throw PreconditionError("empty graph");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

}  // namespace detail

/// Checks the documented ArmBundle invariants against path p.
inline Report validate_arm_bundle(const Graph& g, const VertexPath& p, const ArmBundle& a, int k) {
  const auto uk = static_cast<std::size_t>(k);
  if (p.size() < 2) return Report::fail("path too short for arms");
  if (a.p_u.size() != uk || a.p_v.size() != uk) return Report::fail("arm has wrong length");
  if (a.p_u.back() != p.front() || a.p_v.back() != p.back()) return Report::fail("arm does not end at path endpoint");
  if (a.p_u.front() != a.u_prime || a.p_v.front() != a.v_prime) return Report::fail("arm does not start at u_prime/v_prime");
  const auto& pv = p.vertices();
  for (int side = 0; side < 2; ++side) {
    const auto& arm = side == 0 ? a.p_u : a.p_v;
    const Vertex end = side == 0 ? p.front() : p.back();
    const Vertex start = arm.front();
    if (auto r = check_induced_path(g, arm.vertices()); !r) return Report::fail("arm not induced: " + r.violation);
    const Vertex src[] = {start};
    auto d = detail::bfs(g, src);
    if (d[end] != k - 1) return Report::fail("u_prime not at distance k-1 from its endpoint");
    auto rest = side == 0 ? detail::drop_front(pv) : detail::drop_back(pv);
    for (Vertex q : rest)
      if (d[q] != detail::kNoDist && d[q] < k) return Report::fail("u_prime closer than k to rest of path");
    auto on_path = detail::membership(g.order(), pv);
    for (std::size_t i = 0; i + 1 < arm.size(); ++i) {
      if (on_path[arm[i]]) return Report::fail("arm meets path");
      for (Vertex w : g.neighbors(arm[i]))
        if (on_path[w] && !(w == end && i + 2 == arm.size())) return Report::fail("arm has an edge to the path away from its endpoint");
    }
  }
  auto in_u = detail::membership(g.order(), a.p_u.vertices());
  for (Vertex v : a.p_v)
    if (in_u[v]) return Report::fail("arms intersect");
  return Report::pass();
}

/// Removes endpoints (front first) while the (k-1)-covered set is unchanged,
/// then builds the two arms unless one vertex is left.
inline ShrinkResult shrink(const Graph& g, const VertexPath& p, int k) {
  require_path(g, p);
  if (k < 1) throw PreconditionError("k must be at least 1");
  std::vector<Vertex> cur = p.vertices();
  const std::size_t target = detail::covered_count(g, cur, k - 1);
  if (target == static_cast<std::size_t>(g.order())) throw PreconditionError("path already covers the graph");
  while (cur.size() > 1) {
    if (detail::covered_count(g, detail::drop_front(cur), k - 1) == target) {
      cur.erase(cur.begin());
    } else if (detail::covered_count(g, detail::drop_back(cur), k - 1) == target) {
      cur.pop_back();
    } else {
      break;
    }
  }
  ShrinkResult out{VertexPath(cur), std::nullopt};
  if (cur.size() == 1) return out;
  ArmBundle a;
  a.p_u = detail::build_arm(g, cur.front(), detail::drop_front(cur), k);
  a.p_v = detail::build_arm(g, cur.back(), detail::drop_back(cur), k);
  a.u_prime = a.p_u.front();
  a.v_prime = a.p_v.front();
  if (auto r = validate_arm_bundle(g, out.path, a, k); !r) throw InternalError("shrink: " + r.violation);
  out.arms = std::move(a);
  return out;
}

/// P_x = x .. y: the first k vertices of the least-id shortest path from the
/// least-id vertex x at distance exactly k from p.
inline VertexPath far_arm(const Graph& g, const VertexPath& p, int k) {
  require_path(g, p);
  if (k < 1) throw PreconditionError("k must be at least 1");
  auto d = detail::bfs(g, p.vertices(), k);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (d[x] != k) continue;
    auto line = detail::descend(g, d, x);
    line.pop_back();
    return VertexPath(std::move(line));
  }
  throw PreconditionError("no vertex at distance k from the path");
}

namespace detail {

inline void append(std::vector<Vertex>& out, const VertexPath& p, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) out.push_back(p[i]);
}

inline void append_reversed(std::vector<Vertex>& out, const VertexPath& p) {
  out.insert(out.end(), p.vertices().rbegin(), p.vertices().rend());
}

/// Splice x .. px[i] then arm[j] .. endpoint, then the path away from it.
inline VertexPath splice(const VertexPath& px, std::size_t i, const VertexPath& arm, std::size_t j,
                         const VertexPath& p, bool from_front) {
  std::vector<Vertex> out;
  append(out, px, 0, i + 1);
  append(out, arm, j, arm.size() - 1);
  if (from_front) append(out, p, 0, p.size());
  else append_reversed(out, p);
  return VertexPath(std::move(out));
}

inline int least_neighbor_on(const Graph& g, Vertex z, const std::vector<int>& pos) {
  for (Vertex w : g.neighbors(z))
    if (pos[w] >= 0) return pos[w];
  return -1;
}

}  // namespace detail

/// Either a longer path covering P plus x, or the three disjoint induced
/// P_k's that block every extension.
inline ExtendOutcome extend_or_3pk(const Graph& g, const VertexPath& p, const std::optional<ArmBundle>& arms,
                                   const VertexPath& px, int k) {
  require_path(g, p);
  require_path(g, px);
  if (!arms) {
    if (p.size() != 1) throw PreconditionError("singleton case needs a one-vertex path");
    std::vector<Vertex> out = px.vertices();
    out.push_back(p.front());
    return NewPath{VertexPath(std::move(out)), 's'};
  }
  if (auto r = validate_arm_bundle(g, p, *arms, k); !r) throw PreconditionError("malformed arms: " + r.violation);
  const auto& pu = arms->p_u;
  const auto& pv = arms->p_v;
  const Vertex n = g.order();
  const auto pos_u = detail::positions(n, pu.vertices());
  const auto pos_v = detail::positions(n, pv.vertices());

  for (std::size_t i = 0; i < px.size(); ++i) {
    const Vertex z = px[i];
    if (pos_u[z] >= 0) return NewPath{detail::splice(px, i, pu, pos_u[z] + 1, p, true), 'a'};
    if (pos_v[z] >= 0) return NewPath{detail::splice(px, i, pv, pos_v[z] + 1, p, false), 'a'};
  }
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (int j = detail::least_neighbor_on(g, px[i], pos_u); j >= 0)
      return NewPath{detail::splice(px, i, pu, j, p, true), 'b'};
    if (int j = detail::least_neighbor_on(g, px[i], pos_v); j >= 0)
      return NewPath{detail::splice(px, i, pv, j, p, false), 'b'};
  }
  for (std::size_t j = 0; j < pu.size(); ++j) {
    const int jv = detail::least_neighbor_on(g, pu[j], pos_v);
    if (jv < 0) continue;
    const auto pos_p = detail::positions(n, p.vertices());
    const int iw = detail::least_neighbor_on(g, px.back(), pos_p);
    if (iw <= 0 || iw + 1 >= static_cast<int>(p.size()))
      throw InternalError("extend case (c): y attaches to a path endpoint");
    std::vector<Vertex> out = px.vertices();
    detail::append(out, p, static_cast<std::size_t>(iw), p.size());
    for (int t = static_cast<int>(pv.size()) - 2; t >= jv; --t) out.push_back(pv[t]);
    detail::append(out, pu, j, pu.size());
    detail::append(out, p, 1, static_cast<std::size_t>(iw));
    return NewPath{VertexPath(std::move(out)), 'c'};
  }
  if (p.size() < 3) throw InternalError("3P_k found with a path of fewer than three vertices");
  return ThreePk{{px, pu, pv}};
}

namespace detail {

/// BFS inside the vertices flagged by `allowed`.
inline std::vector<Distance> bfs_within(const Graph& g, std::span<const Vertex> sources,
                                        const std::vector<char>& allowed) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), kNoDist);
  std::vector<Vertex> queue;
  for (Vertex s : sources)
    if (dist[s] == kNoDist) {
      dist[s] = 0;
      queue.push_back(s);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (allowed[w] && dist[w] == kNoDist) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace detail

/// An S, T or M structure on exactly the terminals, using a minimum-size
/// connector W inside `core`. W is the union of three least-id shortest
/// paths from a median vertex z of core to the terminals' attachments.
/// Linear time.
inline StmWitness stm_construct(const Graph& g, const std::array<Vertex, 3>& terminals, std::span<const Vertex> core) {
  detail::require_stm_preconditions(g, terminals, core);
  const auto allowed = detail::membership(g.order(), core);
  std::array<std::vector<Distance>, 3> d;
  for (int i = 0; i < 3; ++i) {
    std::vector<Vertex> src;
    for (Vertex w : g.neighbors(terminals[i]))
      if (allowed[w]) src.push_back(w);
    d[i] = detail::bfs_within(g, src, allowed);
  }
  std::vector<Vertex> c(core.begin(), core.end());
  std::sort(c.begin(), c.end());
  Vertex z = -1;
  Distance best = 0;
  for (Vertex v : c) {
    const Distance s = d[0][v] + d[1][v] + d[2][v];
    if (z < 0 || s < best) {
      z = v;
      best = s;
    }
  }
  std::vector<Vertex> h(terminals.begin(), terminals.end());
  std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < 3; ++i)
    for (Vertex v : detail::descend(g, d[i], z))
      if (!taken[v]) {
        taken[v] = 1;
        h.push_back(v);
      }
  auto w = recognize_stm(g, h, terminals);
  if (!w) throw InternalError("stm_construct: connector does not form an S/T/M structure");
  if (auto r = classify_stm(g, *w); !r) throw InternalError("stm_construct: " + r.violation);
  return *w;
}

namespace detail {

inline SolverWitness assemble_witness(const Graph& g, const VertexPath& p, const ArmBundle& arms,
                                      const VertexPath& px, int k) {
  const Vertex u = p.front();
  const Vertex v = p.back();
  const Vertex y = px.back();
  std::vector<Vertex> host = p.vertices();
  host.push_back(y);
  auto sub = induced(g, host);
  std::array<Vertex, 3> terms{*sub.local(u), *sub.local(v), *sub.local(y)};
  std::vector<Vertex> core;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) core.push_back(*sub.local(p[i]));
  StmWitness local = stm_construct(sub.graph, terms, core);

  auto up = [&](Vertex lv) { return sub.original[lv]; };
  StmWitness w = local;
  for (auto& e : w.extremities) e = up(e);
  if (w.branch >= 0) w.branch = up(w.branch);
  for (auto& t : w.triangle)
    if (t >= 0) t = up(t);
  for (auto& a : w.arms)
    for (auto& x : a) x = up(x);
  for (auto& x : w.core_path) x = up(x);
  if (w.center >= 0) w.center = up(w.center);

  std::array<std::vector<Vertex>, 3> ext;
  for (int i = 0; i < 3; ++i) {
    const Vertex e = w.extremities[i];
    const VertexPath& arm = e == u ? arms.p_u : e == v ? arms.p_v : px;
    ext[i] = arm.reversed().vertices();
  }
  try {
    return make_solver_witness(g, std::move(w), std::move(ext), k);
  } catch (const PreconditionError& err) {
    throw InternalError(std::string("solver witness failed validation: ") + err.what());
  }
}

/// Appends outside neighbors to either end until both ends are stuck.
inline VertexPath extend_ends(const Graph& g, const VertexPath& p) {
  std::deque<Vertex> out(p.begin(), p.end());
  auto on = membership(g.order(), p.vertices());
  auto grow = [&](bool back) {
    for (bool moved = true; moved;) {
      moved = false;
      for (Vertex w : g.neighbors(back ? out.back() : out.front()))
        if (!on[w]) {
          on[w] = 1;
          if (back) out.push_back(w);
          else out.push_front(w);
          moved = true;
          break;
        }
    }
  };
  grow(true);
  grow(false);
  return VertexPath(std::vector<Vertex>(out.begin(), out.end()));
}

inline Vertex double_bfs_start(const Graph& g) {
  auto far = [&](Vertex s) {
    const Vertex src[] = {s};
    auto d = bfs(g, src);
    return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
  };
  return far(far(0));
}

}  // namespace detail

/// A path of eccentricity < k, or an S_k, T_k or M_k witness that none
/// exists. Every returned certificate has been independently re-checked.
inline Certificate solve(const Graph& g, int k, const SolveOptions& opts = {}, SolveStats* stats = nullptr) {
  detail::require_solver_input(g, k);
  const Vertex n = g.order();
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  st = {};
  VertexPath p{opts.double_bfs_start ? detail::double_bfs_start(g) : 0};
  std::size_t prev_covered = 0;
  auto emit = [&](std::size_t covered, std::string action) {
    if (opts.trace) opts.trace({st.outer_iterations, p.size(), covered, std::move(action)});
  };
  while (true) {
    st.peak_path_length = std::max(st.peak_path_length, p.size());
    const std::size_t covered = detail::covered_count(g, p.vertices(), k - 1);
    if (st.outer_iterations > 0 && covered <= prev_covered)
      throw InternalError("solver made no progress in iteration " + std::to_string(st.outer_iterations));
    if (covered == static_cast<std::size_t>(n)) {
      if (opts.extend_endpoints) {
        p = detail::extend_ends(g, p);
        st.peak_path_length = std::max(st.peak_path_length, p.size());
      }
      const Distance ecc = path_eccentricity_of(g, p);
      if (ecc >= k) throw InternalError("solver path has eccentricity " + std::to_string(ecc));
      emit(covered, "done");
      return PathCert{p, k, ecc};
    }
    ++st.outer_iterations;
    if (st.outer_iterations > n) throw InternalError("solver exceeded n outer iterations");
    prev_covered = covered;

    ShrinkResult s = shrink(g, p, k);
    VertexPath px = far_arm(g, s.path, k);
    ExtendOutcome out = extend_or_3pk(g, s.path, s.arms, px, k);
    if (auto* np = std::get_if<NewPath>(&out)) {
      if (!np->path.valid_in(g)) throw InternalError("extension produced an invalid path");
      p = std::move(np->path);
      emit(covered, std::string("extend_") + np->rule);
      continue;
    }
    SolverWitness w = detail::assemble_witness(g, s.path, *s.arms, px, k);
    if (auto r = validate_solver_witness(g, w, k); !r) throw InternalError("solver witness: " + r.violation);
    if (k == 1 && w.cls == SolverClass::MK && opts.k1_completion) {
      if (auto h = claw_net_free_hamiltonian_path(g)) {
        if (path_eccentricity_of(g, *h) != 0) throw InternalError("completion path is not Hamiltonian");
        p = std::move(*h);
        st.peak_path_length = std::max(st.peak_path_length, p.size());
        emit(static_cast<std::size_t>(n), "k1_completion");
        return PathCert{p, k, 0};
      }
    }
    p = s.path;
    emit(covered, "witness");
    return WitnessCert{std::move(w)};
  }
}

}  // namespace pathecc
