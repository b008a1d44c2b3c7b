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

// Witness structures for path-eccentricity obstructions and their checkers.
//
// Three shapes matter here, each with exactly three "extremities":
//   S  a subdivided claw: branch vertex plus three arms ending at extremities
//   T  a triangle with a pendant path (>= 1 edge) on every corner
//   M  an induced path (the core) plus a center vertex that has at least two
//      neighbors on the core and none at its endpoints; the extremities are
//      the two core endpoints and the center
// A solver witness additionally extends every extremity by an induced path
// on k vertices. All validation is direct adjacency checking, never search.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pathecc/graph.hpp"

namespace pathecc {

struct Report {
  bool ok = true;
  std::string violation;

  static Report pass() { return {}; }
  static Report fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

inline std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

inline std::string edge_str(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return std::to_string(u) + "-" + std::to_string(v);
}

inline void append_path_edges(std::vector<Edge>& out, std::span<const Vertex> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) out.push_back({seq[i - 1], seq[i]});
}

}  // namespace detail

/// Checks that G[vs] has exactly the expected edge set.
inline Report check_induced(const Graph& g, std::span<const Vertex> vs, std::span<const Edge> expected) {
  std::unordered_set<Vertex> members;
  members.reserve(vs.size() * 2);
  for (Vertex v : vs) {
    if (!g.contains(v)) return Report::fail("vertex id out of range: " + std::to_string(v));
    if (!members.insert(v).second) return Report::fail("vertices not distinct: " + std::to_string(v));
  }
  std::unordered_set<std::uint64_t> want;
  want.reserve(expected.size() * 2);
  for (const Edge& e : expected) {
    if (!members.count(e.u) || !members.count(e.v))
      return Report::fail("expected edge " + detail::edge_str(e.u, e.v) + " leaves the vertex set");
    if (!g.adjacent(e.u, e.v)) return Report::fail("missing edge " + detail::edge_str(e.u, e.v));
    want.insert(detail::edge_key(e.u, e.v));
  }
  for (Vertex v : vs)
    for (Vertex w : g.neighbors(v))
      if (v < w && members.count(w) && !want.count(detail::edge_key(v, w)))
        return Report::fail("unexpected edge " + detail::edge_str(v, w));
  return Report::pass();
}

inline Report check_induced_path(const Graph& g, std::span<const Vertex> seq) {
  std::vector<Edge> e;
  detail::append_path_edges(e, seq);
  return check_induced(g, seq, e);
}

enum class StmClass { S, T, M };

inline const char* to_string(StmClass c) {
  switch (c) {
    case StmClass::S: return "S";
    case StmClass::T: return "T";
    case StmClass::M: return "M";
  }
  return "?";
}

/// Self-describing S/T/M annotation.
///
/// S: `branch`, `arms[i]` runs from the branch's neighbor out to extremities[i].
/// T: `triangle[i]` carries `arms[i]`, which runs out to extremities[i].
/// M: `core_path` runs extremities[0]..extremities[1]; `center` == extremities[2].
struct StmWitness {
  StmClass cls = StmClass::S;
  std::array<Vertex, 3> extremities{};
  Vertex branch = -1;
  std::array<Vertex, 3> triangle{-1, -1, -1};
  std::array<std::vector<Vertex>, 3> arms;
  std::vector<Vertex> core_path;
  Vertex center = -1;

  static StmWitness make_s(Vertex branch, std::array<std::vector<Vertex>, 3> arms) {
    StmWitness w;
    w.cls = StmClass::S;
    w.branch = branch;
    w.arms = std::move(arms);
    for (int i = 0; i < 3; ++i) w.extremities[i] = w.arms[i].empty() ? -1 : w.arms[i].back();
    return w;
  }

  static StmWitness make_t(std::array<Vertex, 3> triangle, std::array<std::vector<Vertex>, 3> arms) {
    StmWitness w;
    w.cls = StmClass::T;
    w.triangle = triangle;
    w.arms = std::move(arms);
    for (int i = 0; i < 3; ++i) w.extremities[i] = w.arms[i].empty() ? -1 : w.arms[i].back();
    return w;
  }

  static StmWitness make_m(std::vector<Vertex> core, Vertex center) {
    StmWitness w;
    w.cls = StmClass::M;
    w.core_path = std::move(core);
    w.center = center;
    w.extremities = {w.core_path.empty() ? -1 : w.core_path.front(),
                     w.core_path.empty() ? -1 : w.core_path.back(), center};
    return w;
  }

  std::vector<Vertex> vertex_set() const {
    std::vector<Vertex> out;
    switch (cls) {
      case StmClass::S:
        out.push_back(branch);
        break;
      case StmClass::T:
        out.assign(triangle.begin(), triangle.end());
        break;
      case StmClass::M:
        out = core_path;
        out.push_back(center);
        return out;
    }
    for (const auto& a : arms) out.insert(out.end(), a.begin(), a.end());
    return out;
  }

  /// The edge set G[vertex_set()] must have. For M the center's edges are
  /// read from the host, since any core attachment pattern is legal.
  std::vector<Edge> expected_edges(const Graph& g) const {
    std::vector<Edge> out;
    if (cls == StmClass::M) {
      detail::append_path_edges(out, core_path);
      for (Vertex q : core_path)
        if (g.adjacent(center, q)) out.push_back({center, q});
      return out;
    }
    if (cls == StmClass::T) {
      out.push_back({triangle[0], triangle[1]});
      out.push_back({triangle[0], triangle[2]});
      out.push_back({triangle[1], triangle[2]});
    }
    for (int i = 0; i < 3; ++i) {
      if (arms[i].empty()) continue;
      out.push_back({cls == StmClass::S ? branch : triangle[i], arms[i].front()});
      detail::append_path_edges(out, arms[i]);
    }
    return out;
  }

  friend bool operator==(const StmWitness&, const StmWitness&) = default;
};

/// ok iff the annotation is a correct S/T/M structure in `g` (induced, with
/// exactly the annotated extremities). Otherwise names the first failed clause.
inline Report classify_stm(const Graph& g, const StmWitness& w) {
  const auto vs = w.vertex_set();
  for (Vertex v : vs)
    if (!g.contains(v)) return Report::fail("vertex id out of range: " + std::to_string(v));

  if (w.cls == StmClass::M) {
    const auto& core = w.core_path;
    if (core.size() < 2) return Report::fail("core path too short");
    if (w.extremities != std::array<Vertex, 3>{core.front(), core.back(), w.center})
      return Report::fail("extremities do not match annotation");
    if (std::find(core.begin(), core.end(), w.center) != core.end())
      return Report::fail("vertices not distinct: center lies on core");
    if (g.adjacent(w.center, core.front()) || g.adjacent(w.center, core.back()))
      return Report::fail("center adjacent to endpoint");
    int attachments = 0;
    for (Vertex q : core) attachments += g.adjacent(w.center, q) ? 1 : 0;
    if (attachments < 2) return Report::fail("center has fewer than two neighbors on core");
  } else {
    for (int i = 0; i < 3; ++i) {
      if (w.arms[i].empty()) return Report::fail("empty arm");
      if (w.extremities[i] != w.arms[i].back()) return Report::fail("extremities do not match annotation");
    }
  }

  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (w.extremities[i] == w.extremities[j]) return Report::fail("extremities not distinct");
      if (g.adjacent(w.extremities[i], w.extremities[j])) return Report::fail("extremities adjacent");
    }

  return check_induced(g, vs, w.expected_edges(g));
}

namespace detail {

/// Local view of G[H] for small vertex sets.
struct LocalView {
  std::vector<Vertex> verts;
  std::unordered_map<Vertex, int> index;
  std::vector<std::vector<int>> adj;
  std::size_t edges = 0;

  LocalView(const Graph& g, std::span<const Vertex> h) : verts(h.begin(), h.end()) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) index[verts[i]] = i;
    adj.resize(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
      for (Vertex w : g.neighbors(verts[i]))
        if (auto it = index.find(w); it != index.end()) adj[i].push_back(it->second);
    for (const auto& a : adj) edges += a.size();
    edges /= 2;
  }

  int size() const { return static_cast<int>(verts.size()); }

  bool connected_without(int skip) const {
    int start = -1;
    int total = 0;
    for (int i = 0; i < size(); ++i)
      if (i != skip) {
        ++total;
        if (start < 0) start = i;
      }
    if (total == 0) return true;
    std::vector<char> seen(verts.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int w : adj[v])
        if (w != skip && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    return count == total;
  }

  /// Walk from `from` (entered from `prev`) through degree-2 vertices until a
  /// vertex of degree != 2 (or `stop`) is reached. Degrees exclude `skip`.
  std::vector<Vertex> walk(int prev, int from, int skip = -1) const {
    std::vector<Vertex> out{verts[from]};
    int cur = from;
    while (true) {
      int next = -1;
      int deg = 0;
      for (int w : adj[cur]) {
        if (w == skip) continue;
        ++deg;
        if (w != prev) next = w;
      }
      if (deg != 2) break;
      prev = cur;
      cur = next;
      out.push_back(verts[cur]);
    }
    return out;
  }
};

}  // namespace detail

/// Decides whether G[h] is an S, T or M graph whose extremities are exactly
/// `terminals`, and if so returns the annotation (arms ordered by extremity
/// id; an M core is oriented from its smaller endpoint).
inline std::optional<StmWitness> recognize_stm(const Graph& g, std::span<const Vertex> h,
                                               const std::array<Vertex, 3>& terminals) {
  detail::LocalView view(g, h);
  const int n = view.size();
  if (n < 4) return std::nullopt;
  std::array<int, 3> term{};
  for (int i = 0; i < 3; ++i) {
    auto it = view.index.find(terminals[i]);
    if (it == view.index.end()) return std::nullopt;
    term[i] = it->second;
  }
  if (term[0] == term[1] || term[0] == term[2] || term[1] == term[2]) return std::nullopt;
  if (!view.connected_without(-1)) return std::nullopt;

  std::vector<int> deg(n);
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(view.adj[i].size());
  auto is_term = [&](int i) { return i == term[0] || i == term[1] || i == term[2]; };
  auto leaves_are_terminals = [&] {
    for (int i = 0; i < n; ++i)
      if ((deg[i] == 1) != is_term(i)) return false;
    return true;
  };
  auto count_deg = [&](int d) { return std::count(deg.begin(), deg.end(), d); };
  auto ordered_arms = [&](std::array<std::pair<Vertex, std::vector<Vertex>>, 3> arms) {
    std::sort(arms.begin(), arms.end(),
              [](const auto& a, const auto& b) { return a.second.back() < b.second.back(); });
    return arms;
  };

  const auto m = static_cast<std::size_t>(n);
  if (view.edges == m - 1 && leaves_are_terminals() && count_deg(3) == 1 &&
      count_deg(1) + count_deg(2) + 1 == n) {
    int b = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    std::array<std::pair<Vertex, std::vector<Vertex>>, 3> arms;
    for (int i = 0; i < 3; ++i) arms[i] = {view.verts[b], view.walk(b, view.adj[b][i])};
    arms = ordered_arms(std::move(arms));
    return StmWitness::make_s(view.verts[b], {arms[0].second, arms[1].second, arms[2].second});
  }

  if (view.edges == m && leaves_are_terminals() && count_deg(3) == 3 &&
      count_deg(1) + count_deg(2) + 3 == n) {
    std::vector<int> tri;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 3) tri.push_back(i);
    auto adj = [&](int a, int b) {
      return std::find(view.adj[a].begin(), view.adj[a].end(), b) != view.adj[a].end();
    };
    if (adj(tri[0], tri[1]) && adj(tri[0], tri[2]) && adj(tri[1], tri[2])) {
      std::array<std::pair<Vertex, std::vector<Vertex>>, 3> arms;
      for (int i = 0; i < 3; ++i) {
        int out = -1;
        for (int w : view.adj[tri[i]])
          if (w != tri[(i + 1) % 3] && w != tri[(i + 2) % 3]) out = w;
        arms[i] = {view.verts[tri[i]], view.walk(tri[i], out)};
      }
      arms = ordered_arms(std::move(arms));
      return StmWitness::make_t({arms[0].first, arms[1].first, arms[2].first},
                                {arms[0].second, arms[1].second, arms[2].second});
    }
  }

  std::array<int, 3> by_id = term;
  std::sort(by_id.begin(), by_id.end());
  for (int c : by_id) {
    int a = -1;
    int b = -1;
    for (int t : by_id)
      if (t != c) (a < 0 ? a : b) = t;
    if (deg[c] < 2) continue;
    if (std::find(view.adj[c].begin(), view.adj[c].end(), a) != view.adj[c].end()) continue;
    if (std::find(view.adj[c].begin(), view.adj[c].end(), b) != view.adj[c].end()) continue;
    if (view.edges - static_cast<std::size_t>(deg[c]) != m - 2) continue;
    bool shape = true;
    for (int i = 0; i < n && shape; ++i) {
      if (i == c) continue;
      int d = deg[i] - (std::find(view.adj[c].begin(), view.adj[c].end(), i) != view.adj[c].end());
      shape = (i == a || i == b) ? d == 1 : d == 2;
    }
    if (!shape || !view.connected_without(c)) continue;
    int first = view.adj[a][0] == c ? view.adj[a][1] : view.adj[a][0];
    std::vector<Vertex> core{view.verts[a]};
    auto rest = view.walk(a, first, c);
    core.insert(core.end(), rest.begin(), rest.end());
    return StmWitness::make_m(std::move(core), view.verts[c]);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Solver witnesses

enum class SolverClass { SK, TK, MK };

inline const char* to_string(SolverClass c) {
  switch (c) {
    case SolverClass::SK: return "S_k";
    case SolverClass::TK: return "T_k";
    case SolverClass::MK: return "M_k";
  }
  return "?";
}

enum class NearTag { SkMinusLeaf, TkMinusLeaf };

inline const char* to_string(NearTag t) {
  return t == NearTag::SkMinusLeaf ? "SK_MINUS_LEAF" : "TK_MINUS_LEAF";
}

/// Subdivided claw (hub = center) or triangle (hub = triangle) with three
/// legs of lengths k, k, k-1 in some order.
struct NearEmbedding {
  NearTag tag = NearTag::SkMinusLeaf;
  Vertex center = -1;
  std::array<Vertex, 3> triangle{-1, -1, -1};
  std::array<std::vector<Vertex>, 3> legs;

  std::vector<Vertex> vertex_set() const {
    std::vector<Vertex> out;
    if (tag == NearTag::SkMinusLeaf) out.push_back(center);
    else out.assign(triangle.begin(), triangle.end());
    for (const auto& l : legs) out.insert(out.end(), l.begin(), l.end());
    return out;
  }

  std::vector<Edge> expected_edges() const {
    std::vector<Edge> out;
    if (tag == NearTag::TkMinusLeaf) {
      out.push_back({triangle[0], triangle[1]});
      out.push_back({triangle[0], triangle[2]});
      out.push_back({triangle[1], triangle[2]});
    }
    for (int i = 0; i < 3; ++i) {
      if (legs[i].empty()) continue;
      out.push_back({tag == NearTag::SkMinusLeaf ? center : triangle[i], legs[i].front()});
      detail::append_path_edges(out, legs[i]);
    }
    return out;
  }

  friend bool operator==(const NearEmbedding&, const NearEmbedding&) = default;
};

struct EmbeddedCertificates {
  std::array<std::vector<Vertex>, 3> three_pk;
  std::vector<Vertex> long_path;
  std::vector<Vertex> short_path;
  NearEmbedding near;

  friend bool operator==(const EmbeddedCertificates&, const EmbeddedCertificates&) = default;
};

/// An S/T/M core whose three extremities are each extended by an induced
/// k-vertex path (extensions[i] starts at core.extremities[i] and runs
/// outward). Self-describing: validation never searches.
struct SolverWitness {
  SolverClass cls = SolverClass::MK;
  int k = 1;
  StmWitness core;
  std::array<std::vector<Vertex>, 3> extensions;
  EmbeddedCertificates embedded;

  std::vector<Vertex> vertex_set() const {
    auto out = core.vertex_set();
    for (const auto& e : extensions)
      if (e.size() > 1) out.insert(out.end(), e.begin() + 1, e.end());
    return out;
  }

  friend bool operator==(const SolverWitness&, const SolverWitness&) = default;
};

inline SolverClass solver_class_for(StmClass c) {
  switch (c) {
    case StmClass::S: return SolverClass::SK;
    case StmClass::T: return SolverClass::TK;
    case StmClass::M: return SolverClass::MK;
  }
  return SolverClass::MK;
}

namespace detail {

/// For S/T cores: arm i from the hub outward, continued by its extension.
inline std::vector<Vertex> full_arm(const SolverWitness& w, int i) {
  std::vector<Vertex> out = w.core.arms[i];
  const auto& ext = w.extensions[i];
  if (ext.size() > 1) out.insert(out.end(), ext.begin() + 1, ext.end());
  return out;
}

/// For M cores: extension 0 reversed, the core, then extension 1.
inline std::vector<Vertex> extended_core(const SolverWitness& w) {
  std::vector<Vertex> out(w.extensions[0].rbegin(), w.extensions[0].rend());
  out.insert(out.end(), w.core.core_path.begin() + 1, w.core.core_path.end());
  const auto& ext = w.extensions[1];
  out.insert(out.end(), ext.begin() + 1, ext.end());
  return out;
}

template <class It>
std::vector<Vertex> take(It first, std::size_t n) {
  return std::vector<Vertex>(first, first + static_cast<std::ptrdiff_t>(n));
}

inline Report check_hub_embedding(const Graph& g, bool triangle_hub, Vertex center,
                                  const std::array<Vertex, 3>& tri,
                                  const std::array<std::vector<Vertex>, 3>& legs) {
  NearEmbedding e;
  e.tag = triangle_hub ? NearTag::TkMinusLeaf : NearTag::SkMinusLeaf;
  e.center = center;
  e.triangle = tri;
  e.legs = legs;
  return check_induced(g, e.vertex_set(), e.expected_edges());
}

}  // namespace detail

/// Structure-only check: core, extensions, and the induced shape of the
/// whole witness. Embedded certificates are not examined.
inline Report validate_witness_structure(const Graph& g, const SolverWitness& w, int k) {
  if (k < 1) return Report::fail("k must be at least 1");
  if (w.k != k) return Report::fail("k mismatch");
  if (w.cls != solver_class_for(w.core.cls)) return Report::fail("class does not match core");
  if (auto r = classify_stm(g, w.core); !r) return Report::fail("core: " + r.violation);

  for (int i = 0; i < 3; ++i) {
    const auto& ext = w.extensions[i];
    if (ext.size() != static_cast<std::size_t>(k)) return Report::fail("extension has wrong length");
    if (ext.front() != w.core.extremities[i]) return Report::fail("extension does not start at extremity");
    for (Vertex v : ext)
      if (!g.contains(v)) return Report::fail("vertex id out of range: " + std::to_string(v));
  }

  std::unordered_set<Vertex> seen;
  for (Vertex v : w.core.vertex_set()) seen.insert(v);
  for (const auto& ext : w.extensions)
    for (std::size_t j = 1; j < ext.size(); ++j)
      if (!seen.insert(ext[j]).second) return Report::fail("arm not disjoint");

  auto expected = w.core.expected_edges(g);
  for (const auto& ext : w.extensions) detail::append_path_edges(expected, ext);
  if (auto r = check_induced(g, w.vertex_set(), expected); !r) return r;

  if (w.cls != SolverClass::MK) {
    std::array<std::vector<Vertex>, 3> legs;
    for (int i = 0; i < 3; ++i) {
      auto arm = detail::full_arm(w, i);
      if (arm.size() < static_cast<std::size_t>(k)) return Report::fail("arm shorter than k");
      legs[i] = detail::take(arm.begin(), static_cast<std::size_t>(k));
    }
    bool tri = w.cls == SolverClass::TK;
    if (!detail::check_hub_embedding(g, tri, w.core.branch, w.core.triangle, legs))
      return Report::fail(tri ? "no induced T_k" : "no induced S_k");
  }
  return Report::pass();
}

namespace detail {

inline void require_structure(const Graph& g, const SolverWitness& w, int k) {
  if (auto r = validate_witness_structure(g, w, k); !r)
    throw PreconditionError("unvalidated witness: " + r.violation);
}

}  // namespace detail

/// Three pairwise disjoint, mutually non-adjacent induced P_k's.
inline std::array<std::vector<Vertex>, 3> extract_3pk(const Graph& g, const SolverWitness& w, int k) {
  detail::require_structure(g, w, k);
  const auto uk = static_cast<std::size_t>(k);
  std::array<std::vector<Vertex>, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (w.cls == SolverClass::MK) {
      out[i] = w.extensions[i];
    } else {
      auto arm = detail::full_arm(w, i);
      out[i] = detail::take(arm.end() - static_cast<std::ptrdiff_t>(uk), uk);
    }
  }
  return out;
}

/// An induced P_{2k+1} and an induced P_{k-1} (empty when k = 1) with no
/// edges between them.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> extract_p2k1_pk1(const Graph& g,
                                                                          const SolverWitness& w,
                                                                          int k) {
  detail::require_structure(g, w, k);
  const auto uk = static_cast<std::size_t>(k);
  std::vector<Vertex> lng;
  std::vector<Vertex> shrt;
  if (w.cls == SolverClass::MK) {
    auto line = detail::extended_core(w);
    lng = detail::take(line.begin(), 2 * uk + 1);
    shrt.assign(w.extensions[2].begin() + 1, w.extensions[2].end());
    return {lng, shrt};
  }
  auto a0 = detail::full_arm(w, 0);
  auto a1 = detail::full_arm(w, 1);
  auto a2 = detail::full_arm(w, 2);
  lng.assign(a0.rend() - static_cast<std::ptrdiff_t>(uk), a0.rend());
  if (w.cls == SolverClass::SK) {
    lng.push_back(w.core.branch);
    lng.insert(lng.end(), a1.begin(), a1.begin() + static_cast<std::ptrdiff_t>(uk));
    shrt = detail::take(a2.begin() + 1, uk - 1);
  } else {
    lng.push_back(w.core.triangle[0]);
    lng.push_back(w.core.triangle[1]);
    lng.insert(lng.end(), a1.begin(), a1.begin() + static_cast<std::ptrdiff_t>(uk - 1));
    shrt = detail::take(a2.begin(), uk - 1);
  }
  return {lng, shrt};
}

/// S_k minus a leaf or T_k minus a leaf.
///
/// For M_k witnesses with center c: let q[j1], q[jm] be the first and last
/// core neighbors of c. Consecutive (jm = j1 + 1) gives the triangle
/// {q[j1], q[jm], c}; otherwise c is a spider center with legs through q[j1]
/// leftward and q[jm] rightward. Extremality of j1, jm keeps the outward legs
/// free of other neighbors of c. The result is re-checked by the caller.
inline NearEmbedding extract_near_sk_tk(const Graph& g, const SolverWitness& w, int k) {
  detail::require_structure(g, w, k);
  const auto uk = static_cast<std::size_t>(k);
  NearEmbedding e;
  if (w.cls != SolverClass::MK) {
    for (int i = 0; i < 3; ++i) {
      auto arm = detail::full_arm(w, i);
      e.legs[i] = detail::take(arm.begin(), i == 2 ? uk - 1 : uk);
    }
    if (w.cls == SolverClass::SK) {
      e.tag = NearTag::SkMinusLeaf;
      e.center = w.core.branch;
    } else {
      e.tag = NearTag::TkMinusLeaf;
      e.triangle = w.core.triangle;
    }
    return e;
  }

  const auto& core = w.core.core_path;
  const Vertex c = w.core.center;
  std::size_t j1 = core.size();
  std::size_t jm = 0;
  for (std::size_t j = 0; j < core.size(); ++j) {
    if (!g.adjacent(c, core[j])) continue;
    j1 = std::min(j1, j);
    jm = std::max(jm, j);
  }
  const auto line = detail::extended_core(w);
  const std::size_t off = uk - 1;
  auto leftward = [&](std::size_t from) {
    std::vector<Vertex> leg;
    for (std::size_t i = 0; i < uk; ++i) leg.push_back(line[from - i]);
    return leg;
  };
  auto rightward = [&](std::size_t from) { return detail::take(line.begin() + static_cast<std::ptrdiff_t>(from), uk); };
  std::vector<Vertex> own(w.extensions[2].begin() + 1, w.extensions[2].end());

  if (jm == j1 + 1) {
    e.tag = NearTag::TkMinusLeaf;
    e.triangle = {core[j1], core[jm], c};
    e.legs = {leftward(off + j1 - 1), rightward(off + jm + 1), std::move(own)};
  } else {
    e.tag = NearTag::SkMinusLeaf;
    e.center = c;
    e.legs = {leftward(off + j1), rightward(off + jm), std::move(own)};
  }
  return e;
}

namespace detail {

inline Report check_subset(std::span<const Vertex> part, const std::unordered_set<Vertex>& whole) {
  for (Vertex v : part)
    if (!whole.count(v)) return Report::fail("embedded certificate leaves witness: " + std::to_string(v));
  return Report::pass();
}

inline Report check_embedded(const Graph& g, const SolverWitness& w, int k) {
  const auto uk = static_cast<std::size_t>(k);
  const auto& em = w.embedded;
  auto vs = w.vertex_set();
  std::unordered_set<Vertex> whole(vs.begin(), vs.end());

  std::vector<Vertex> all;
  std::vector<Edge> edges;
  for (const auto& p : em.three_pk) {
    if (p.size() != uk) return Report::fail("three_pk: path has wrong length");
    all.insert(all.end(), p.begin(), p.end());
    append_path_edges(edges, p);
  }
  if (auto r = check_subset(all, whole); !r) return r;
  if (auto r = check_induced(g, all, edges); !r) return Report::fail("three_pk: " + r.violation);

  if (em.long_path.size() != 2 * uk + 1 || em.short_path.size() != uk - 1)
    return Report::fail("p2k1_pk1: path has wrong length");
  all = em.long_path;
  all.insert(all.end(), em.short_path.begin(), em.short_path.end());
  edges.clear();
  append_path_edges(edges, em.long_path);
  append_path_edges(edges, em.short_path);
  if (auto r = check_subset(all, whole); !r) return r;
  if (auto r = check_induced(g, all, edges); !r) return Report::fail("p2k1_pk1: " + r.violation);

  std::array<std::size_t, 3> lens{};
  for (int i = 0; i < 3; ++i) lens[i] = em.near.legs[i].size();
  std::sort(lens.begin(), lens.end());
  if (lens != std::array<std::size_t, 3>{uk - 1, uk, uk}) return Report::fail("near: legs have wrong lengths");
  all = em.near.vertex_set();
  if (auto r = check_subset(all, whole); !r) return r;
  if (auto r = check_induced(g, all, em.near.expected_edges()); !r) return Report::fail("near: " + r.violation);
  return Report::pass();
}

}  // namespace detail

/// Full check: structure plus every embedded certificate.
inline Report validate_solver_witness(const Graph& g, const SolverWitness& w, int k) {
  if (auto r = validate_witness_structure(g, w, k); !r) return r;
  return detail::check_embedded(g, w, k);
}

/// Assembles a witness from a core and its extensions, deriving the class and
/// the embedded certificates. Throws PreconditionError if the pieces do not
/// form a valid witness.
inline SolverWitness make_solver_witness(const Graph& g, StmWitness core,
                                         std::array<std::vector<Vertex>, 3> extensions, int k) {
  SolverWitness w;
  w.cls = solver_class_for(core.cls);
  w.k = k;
  w.core = std::move(core);
  w.extensions = std::move(extensions);
  w.embedded.three_pk = extract_3pk(g, w, k);
  std::tie(w.embedded.long_path, w.embedded.short_path) = extract_p2k1_pk1(g, w, k);
  w.embedded.near = extract_near_sk_tk(g, w, k);
  if (auto r = detail::check_embedded(g, w, k); !r)
    throw PreconditionError("embedded certificate check failed: " + r.violation);
  return w;
}

}  // namespace pathecc
