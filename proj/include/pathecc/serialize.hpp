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

#include <json.hpp>

#include <string>
#include <vector>

#include "pathecc/dompath.hpp"
#include "pathecc/families.hpp"
#include "pathecc/generators.hpp"
#include "pathecc/solver.hpp"
#include "pathecc/witness.hpp"

namespace pathecc {

using json = nlohmann::json;

namespace detail {

template <class F>
auto guard_json(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

inline json arms_json(const std::array<std::vector<Vertex>, 3>& a) { return json::array({a[0], a[1], a[2]}); }

inline std::array<std::vector<Vertex>, 3> arms_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("expected three vertex lists");
  return {j[0].get<std::vector<Vertex>>(), j[1].get<std::vector<Vertex>>(), j[2].get<std::vector<Vertex>>()};
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace detail

inline json to_json(const StmWitness& w) {
  json j{{"class", to_string(w.cls)}, {"core_path", w.core_path}, {"arms", detail::arms_json(w.arms)}};
  switch (w.cls) {
    case StmClass::S: j["branch"] = w.branch; break;
    case StmClass::T: j["triangle"] = w.triangle; break;
    case StmClass::M: j["center"] = w.center; break;
  }
  return j;
}

inline StmWitness stm_from_json(const json& j) {
  return detail::guard_json([&] {
    const auto cls = j.at("class").get<std::string>();
    if (cls == "S") return StmWitness::make_s(j.at("branch").get<Vertex>(), detail::arms_from(j.at("arms")));
    if (cls == "T")
      return StmWitness::make_t(j.at("triangle").get<std::array<Vertex, 3>>(), detail::arms_from(j.at("arms")));
    if (cls == "M") return StmWitness::make_m(j.at("core_path").get<std::vector<Vertex>>(), j.at("center").get<Vertex>());
    throw InputError("unknown core class \"" + cls + "\"");
  });
}

inline json to_json(const SolverWitness& w) {
  json near_vs{{"legs", detail::arms_json(w.embedded.near.legs)}};
  if (w.embedded.near.tag == NearTag::SkMinusLeaf) near_vs["center"] = w.embedded.near.center;
  else near_vs["triangle"] = w.embedded.near.triangle;
  return json{{"kind", "witness"},
              {"class", to_string(w.cls)},
              {"k", w.k},
              {"extremities", w.core.extremities},
              {"core", to_json(w.core)},
              {"extensions", detail::arms_json(w.extensions)},
              {"embedded",
               {{"three_pk", detail::arms_json(w.embedded.three_pk)},
                {"p2k1_pk1", json::array({w.embedded.long_path, w.embedded.short_path})},
                {"near", {{"tag", to_string(w.embedded.near.tag)}, {"vertices", near_vs}}}}}};
}

inline SolverWitness witness_from_json(const json& j) {
  return detail::guard_json([&] {
    SolverWitness w;
    const auto cls = j.at("class").get<std::string>();
    if (cls == "S_k") w.cls = SolverClass::SK;
    else if (cls == "T_k") w.cls = SolverClass::TK;
    else if (cls == "M_k") w.cls = SolverClass::MK;
    else throw InputError("unknown witness class \"" + cls + "\"");
    w.k = j.at("k").get<int>();
    w.core = stm_from_json(j.at("core"));
    if (j.contains("extremities") && j.at("extremities").get<std::array<Vertex, 3>>() != w.core.extremities)
      throw InputError("extremities disagree with core annotation");
    w.extensions = detail::arms_from(j.at("extensions"));
    const json& em = j.at("embedded");
    w.embedded.three_pk = detail::arms_from(em.at("three_pk"));
    const json& ls = em.at("p2k1_pk1");
    if (!ls.is_array() || ls.size() != 2) throw InputError("p2k1_pk1 needs two lists");
    w.embedded.long_path = ls[0].get<std::vector<Vertex>>();
    w.embedded.short_path = ls[1].get<std::vector<Vertex>>();
    const json& nr = em.at("near");
    const auto tag = nr.at("tag").get<std::string>();
    const json& nv = nr.at("vertices");
    if (tag == "SK_MINUS_LEAF") {
      w.embedded.near.tag = NearTag::SkMinusLeaf;
      w.embedded.near.center = nv.at("center").get<Vertex>();
    } else if (tag == "TK_MINUS_LEAF") {
      w.embedded.near.tag = NearTag::TkMinusLeaf;
      w.embedded.near.triangle = nv.at("triangle").get<std::array<Vertex, 3>>();
    } else {
      throw InputError("unknown near tag \"" + tag + "\"");
    }
    w.embedded.near.legs = detail::arms_from(nv.at("legs"));
    return w;
  });
}

inline json to_json(const Certificate& c) {
  if (const auto* p = std::get_if<PathCert>(&c))
    return json{{"kind", "path"}, {"k", p->k}, {"path", p->path.vertices()}, {"eccentricity", p->eccentricity}};
  return to_json(std::get<WitnessCert>(c).witness);
}

inline json to_json(const DomCertificate& c) {
  if (const auto* p = std::get_if<DomPath>(&c)) return json{{"kind", "dom_path"}, {"path", p->path.vertices()}};
  json pairs = json::array();
  for (const auto& [a, b] : std::get<ThreeP2>(c).pairs) pairs.push_back({a, b});
  return json{{"kind", "three_p2"}, {"pairs", pairs}};
}

inline json to_json(const TraceEvent& e) {
  return json{{"iteration", e.iteration}, {"path_len", e.path_len}, {"covered", e.covered}, {"action", e.action}};
}

inline json to_json(std::size_t step, const StepResult& r) {
  json j{{"step", step}, {"tag", to_string(r.tag)}, {"path_len", r.path.size()}};
  if (r.witness) j["pairs"] = to_json(DomCertificate{*r.witness})["pairs"];
  return j;
}

// Generator specs. Kinds are lower-case snake names of the variants.

inline json to_json(const GenSpec& s);

namespace detail {

inline json shape_json(const GnpConnected& s) { return {{"kind", "gnp_connected"}, {"n", s.n}, {"p", s.p}}; }
inline json shape_json(const Gnp& s) { return {{"kind", "gnp"}, {"n", s.n}, {"p", s.p}}; }
inline json shape_json(const Split& s) { return {{"kind", "split"}, {"n", s.n}, {"density", s.density}}; }
inline json shape_json(const UnitInterval& s) {
  return {{"kind", "unit_interval"}, {"n", s.n}, {"max_gap", s.max_gap}};
}
inline json shape_json(const CoBipartite& s) { return {{"kind", "co_bipartite"}, {"n", s.n}, {"density", s.density}}; }
inline json shape_json(const MkInstance& s) {
  return {{"kind", "mk_instance"}, {"k", s.k}, {"core_length", s.core_length}, {"center_degree", s.center_degree}};
}
inline json shape_json(const PatternFree& s) {
  json forb = json::array();
  for (const auto& f : s.forbidden) forb.push_back(to_string(f));
  return {{"kind", "pattern_free"},
          {"base", s.base ? to_json(*s.base) : json()},
          {"forbidden", forb},
          {"max_rejections", s.max_rejections}};
}

}  // namespace detail

inline json to_json(const GenSpec& s) {
  json j = std::visit([](const auto& shape) { return detail::shape_json(shape); }, s.shape);
  j["seed"] = s.seed;
  return j;
}

inline GenSpec genspec_from_json(const json& j) {
  return detail::guard_json([&]() -> GenSpec {
    if (!j.is_object()) throw InputError("generator spec must be a JSON object");
    GenSpec s;
    s.seed = j.value("seed", std::uint64_t{0});
    const auto kind = detail::lower(j.at("kind").get<std::string>());
    if (kind == "gnp_connected") {
      s.shape = GnpConnected{j.at("n").get<Vertex>(), j.at("p").get<double>()};
    } else if (kind == "gnp") {
      s.shape = Gnp{j.at("n").get<Vertex>(), j.at("p").get<double>()};
    } else if (kind == "split") {
      s.shape = Split{j.at("n").get<Vertex>(), j.value("density", 0.5)};
    } else if (kind == "unit_interval") {
      s.shape = UnitInterval{j.at("n").get<Vertex>(), j.value("max_gap", 0.5)};
    } else if (kind == "co_bipartite") {
      s.shape = CoBipartite{j.at("n").get<Vertex>(), j.value("density", 0.5)};
    } else if (kind == "mk_instance") {
      s.shape = MkInstance{j.at("k").get<int>(), j.at("core_length").get<int>(), j.at("center_degree").get<int>()};
    } else if (kind == "pattern_free") {
      PatternFree pf;
      pf.base = std::make_shared<const GenSpec>(genspec_from_json(j.at("base")));
      for (const auto& f : j.at("forbidden")) pf.forbidden.push_back(parse_family(f.get<std::string>()));
      pf.max_rejections = j.value("max_rejections", 1000);
      s.shape = std::move(pf);
    } else {
      throw InputError("unknown generator kind \"" + kind + "\"");
    }
    return s;
  });
}

struct ManifestEntry {
  GenSpec spec;
  std::vector<std::uint64_t> seeds;
};

/// Corpus manifest: [{"spec": {...}, "seeds": [..]}, ...].
inline std::vector<ManifestEntry> manifest_from_json(const json& j) {
  return detail::guard_json([&] {
    if (!j.is_array()) throw InputError("manifest must be a JSON array");
    std::vector<ManifestEntry> out;
    for (const auto& e : j) out.push_back({genspec_from_json(e.at("spec")), e.at("seeds").get<std::vector<std::uint64_t>>()});
    return out;
  });
}

inline json to_json(const std::vector<ManifestEntry>& m) {
  json out = json::array();
  for (const auto& e : m) out.push_back({{"spec", to_json(e.spec)}, {"seeds", e.seeds}});
  return out;
}

/// Re-validates any certificate JSON against g. Malformed JSON throws
/// InputError; a well-formed but wrong certificate yields a failed Report.
inline Report check_certificate(const Graph& g, const json& cert) {
  const auto kind = detail::guard_json([&] { return cert.at("kind").get<std::string>(); });
  if (kind == "path") {
    auto [k, path, ecc] = detail::guard_json([&] {
      return std::tuple{cert.at("k").get<int>(), VertexPath(cert.at("path").get<std::vector<Vertex>>()),
                        cert.at("eccentricity").get<Distance>()};
    });
    if (!path.valid_in(g)) return Report::fail("invalid path");
    auto d = bfs_from_set(g, path.vertices()).max();
    if (!d) return Report::fail("graph is disconnected");
    if (*d != ecc) return Report::fail("eccentricity mismatch: claimed " + std::to_string(ecc) + ", actual " + std::to_string(*d));
    if (ecc >= k) return Report::fail("eccentricity " + std::to_string(ecc) + " is not below k = " + std::to_string(k));
    return Report::pass();
  }
  if (kind == "witness") {
    SolverWitness w = witness_from_json(cert);
    return validate_solver_witness(g, w, w.k);
  }
  if (kind == "dom_path") {
    VertexPath p(detail::guard_json([&] { return cert.at("path").get<std::vector<Vertex>>(); }));
    return check_dominating(g, p);
  }
  if (kind == "three_p2") {
    ThreeP2 t;
    detail::guard_json([&] {
      const json& ps = cert.at("pairs");
      if (!ps.is_array() || ps.size() != 3) throw InputError("three_p2 needs three pairs");
      for (int i = 0; i < 3; ++i) {
        auto pr = ps[i].get<std::array<Vertex, 2>>();
        t.pairs[i] = {pr[0], pr[1]};
      }
      return 0;
    });
    return check_three_p2(g, t);
  }
  throw InputError("unknown certificate kind \"" + kind + "\"");
}

}  // namespace pathecc
