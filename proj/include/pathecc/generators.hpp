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

#include <memory>
#include <numeric>
#include <variant>
#include <vector>

#include "pathecc/families.hpp"
#include "pathecc/graph.hpp"
#include "pathecc/oracles.hpp"
#include "pathecc/random.hpp"
#include "pathecc/witness.hpp"

namespace pathecc {

struct GenSpec;

/// G(n, p) conditioned on connectivity: a few fresh draws, then the last
/// draw is united with a random recursive spanning tree.
struct GnpConnected {
  Vertex n = 1;
  double p = 0.5;
};

/// Plain G(n, p); may be disconnected.
struct Gnp {
  Vertex n = 0;
  double p = 0.5;
};

/// Rejection sampling of `base` until no forbidden family member occurs as
/// an induced subgraph.
struct PatternFree {
  std::shared_ptr<const GenSpec> base;
  std::vector<FamilySpec> forbidden;
  int max_rejections = 1000;
};

/// Random connected split graph (clique + independent set), randomly relabeled.
struct Split {
  Vertex n = 1;
  double density = 0.5;
};

/// An M_k member: core path of `core_length` vertices, a center attached to
/// `center_degree` interior core vertices, each extremity extended by P_k.
struct MkInstance {
  int k = 1;
  int core_length = 4;
  int center_degree = 2;
};

/// Connected unit interval graph: consecutive left ends differ by at most
/// max_gap (<= 1), randomly relabeled. Claw-free, net-free and AT-free.
struct UnitInterval {
  Vertex n = 1;
  double max_gap = 0.5;
};

/// Two cliques with random edges between them, randomly relabeled.
/// Complement is bipartite, hence 3P_2-free.
struct CoBipartite {
  Vertex n = 1;
  double density = 0.5;
};

struct GenSpec {
  std::variant<GnpConnected, Gnp, PatternFree, Split, MkInstance, UnitInterval, CoBipartite> shape;
  std::uint64_t seed = 0;
};

class RejectionExhausted : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline Graph relabel(Vertex n, const std::vector<Edge>& edges, CounterRng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

inline void require(bool ok, const char* what) {
  if (!ok) throw InputError(std::string("invalid generator spec: ") + what);
}

inline Graph gen_gnp(Vertex n, double p, CounterRng& rng) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph gen_one(const GnpConnected& s, std::uint64_t seed) {
  require(s.n >= 1 && s.p >= 0.0 && s.p <= 1.0, "gnp_connected needs n >= 1, 0 <= p <= 1");
  constexpr int kRetries = 8;
  Graph last;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    CounterRng rng(CounterRng::derive(seed, attempt));
    last = gen_gnp(s.n, s.p, rng);
    if (is_connected(last)) return last;
  }
  CounterRng rng(CounterRng::derive(seed, kRetries));
  GraphBuilder b(s.n);
  for (const Edge& e : last.edges()) b.add_edge(e.u, e.v);
  std::vector<Vertex> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  for (Vertex i = 1; i < s.n; ++i) b.try_add_edge(perm[i], perm[rng.below(static_cast<std::uint64_t>(i))]);
  return std::move(b).build();
}

inline Graph gen_one(const Gnp& s, std::uint64_t seed) {
  require(s.n >= 0 && s.p >= 0.0 && s.p <= 1.0, "gnp needs n >= 0, 0 <= p <= 1");
  CounterRng rng(seed);
  return gen_gnp(s.n, s.p, rng);
}

inline Graph gen_one(const Split& s, std::uint64_t seed) {
  require(s.n >= 1 && s.density >= 0.0 && s.density <= 1.0, "split needs n >= 1, 0 <= density <= 1");
  CounterRng rng(seed);
  const auto q = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(s.n)));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v) edges.push_back({u, v});
  for (Vertex i = q; i < s.n; ++i) {
    bool any = false;
    for (Vertex c = 0; c < q; ++c)
      if (rng.bernoulli(s.density)) {
        edges.push_back({c, i});
        any = true;
      }
    if (!any) edges.push_back({static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(q))), i});
  }
  return relabel(s.n, edges, rng);
}

inline Graph gen_one(const UnitInterval& s, std::uint64_t seed) {
  require(s.n >= 1 && s.max_gap >= 0.0 && s.max_gap <= 1.0, "unit_interval needs n >= 1, 0 <= max_gap <= 1");
  CounterRng rng(seed);
  std::vector<double> x(s.n, 0.0);
  for (Vertex i = 1; i < s.n; ++i) x[i] = x[i - 1] + rng.uniform() * s.max_gap;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s.n; ++u)
    for (Vertex v = u + 1; v < s.n && x[v] - x[u] <= 1.0; ++v) edges.push_back({u, v});
  return relabel(s.n, edges, rng);
}

inline Graph gen_one(const CoBipartite& s, std::uint64_t seed) {
  require(s.n >= 1 && s.density >= 0.0 && s.density <= 1.0, "co_bipartite needs n >= 1, 0 <= density <= 1");
  CounterRng rng(seed);
  const Vertex half = s.n / 2;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s.n; ++u)
    for (Vertex v = u + 1; v < s.n; ++v)
      if ((u < half) == (v < half) || rng.bernoulli(s.density)) edges.push_back({u, v});
  if (half > 0 && half < s.n &&
      std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return (e.u < half) != (e.v < half); }))
    edges.push_back({static_cast<Vertex>(rng.below(half)), static_cast<Vertex>(half + rng.below(s.n - half))});
  return relabel(s.n, edges, rng);
}

}  // namespace detail

struct MkSample {
  Graph graph;
  SolverWitness witness;
};

/// Canonical layout: core 0..L-1, center L, then the outward extension
/// vertices of core[0], core[L-1] and the center, k-1 each.
inline MkSample gen_mk_instance(const MkInstance& s, std::uint64_t seed) {
  detail::require(s.k >= 1 && s.core_length >= 4 && s.center_degree >= 2 &&
                      s.center_degree <= s.core_length - 2,
                  "mk_instance needs k >= 1, core_length >= 4, 2 <= center_degree <= core_length - 2");
  CounterRng rng(seed);
  const Vertex len = s.core_length;
  const Vertex center = len;
  GraphBuilder b(len + 1 + 3 * (s.k - 1));
  std::vector<Vertex> core(len);
  std::iota(core.begin(), core.end(), 0);
  for (Vertex i = 1; i < len; ++i) b.add_edge(i - 1, i);
  std::vector<Vertex> interior(core.begin() + 1, core.end() - 1);
  rng.shuffle(interior);
  for (int i = 0; i < s.center_degree; ++i) b.add_edge(center, interior[i]);

  std::array<Vertex, 3> roots{0, len - 1, center};
  std::array<std::vector<Vertex>, 3> ext;
  Vertex next = len + 1;
  for (int i = 0; i < 3; ++i) {
    ext[i].push_back(roots[i]);
    for (int j = 1; j < s.k; ++j) {
      b.add_edge(ext[i].back(), next);
      ext[i].push_back(next++);
    }
  }
  Graph g = std::move(b).build();
  auto w = make_solver_witness(g, StmWitness::make_m(core, center), std::move(ext), s.k);
  return {std::move(g), std::move(w)};
}

inline Graph gen_random(const GenSpec& spec);

namespace detail {

inline Graph gen_one(const MkInstance& s, std::uint64_t seed) { return gen_mk_instance(s, seed).graph; }

inline Graph gen_one(const PatternFree& s, std::uint64_t seed) {
  require(s.base != nullptr, "pattern_free needs a base spec");
  require(s.max_rejections >= 1, "pattern_free needs max_rejections >= 1");
  std::vector<Graph> forbidden;
  for (const auto& f : s.forbidden) forbidden.push_back(build_family(f));
  for (int attempt = 0; attempt < s.max_rejections; ++attempt) {
    GenSpec inner = *s.base;
    inner.seed = CounterRng::derive(seed, static_cast<std::uint64_t>(attempt));
    Graph g = gen_random(inner);
    bool clean = std::none_of(forbidden.begin(), forbidden.end(),
                              [&](const Graph& f) { return contains_induced(g, f); });
    if (clean) return g;
  }
  throw RejectionExhausted("pattern_free: rejection budget of " + std::to_string(s.max_rejections) +
                           " exhausted");
}

}  // namespace detail

/// Deterministic in (spec, seed).
inline Graph gen_random(const GenSpec& spec) {
  return std::visit([&](const auto& s) { return detail::gen_one(s, spec.seed); }, spec.shape);
}

/// Convenience for building nested pattern-free specs.
inline GenSpec pattern_free(GenSpec base, std::vector<FamilySpec> forbidden, int max_rejections,
                            std::uint64_t seed) {
  PatternFree pf;
  pf.base = std::make_shared<const GenSpec>(std::move(base));
  pf.forbidden = std::move(forbidden);
  pf.max_rejections = max_rejections;
  return GenSpec{pf, seed};
}

}  // namespace pathecc
