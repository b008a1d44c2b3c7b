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


#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace pathecc;
using namespace pathecc::testing;

namespace {

// u=0 u'=1 w=2 v'=3 v=4 y=5 x=6.
Graph witness_instance(bool with_chord) {
  GraphBuilder b(7);
  for (auto [p, q] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}, {6, 5}}) b.add_edge(p, q);
  if (with_chord) b.add_edge(1, 3);
  return std::move(b).build();
}

bool independently_dominating(const Graph& g, const VertexPath& p) {
  return is_walk_simple(g, p.vertices()) && eccentricity(floyd_warshall(g), p.vertices()) <= 1;
}

bool independently_three_p2(const Graph& g, const ThreeP2& t) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (auto [a, b] : t.pairs) {
    vs.push_back(a);
    vs.push_back(b);
    es.push_back({a, b});
  }
  return induces_exactly(g, vs, es);
}

void require_valid(const Graph& g, const DomCertificate& c) {
  if (const auto* d = std::get_if<DomPath>(&c)) REQUIRE(independently_dominating(g, d->path));
  else REQUIRE(independently_three_p2(g, std::get<ThreeP2>(c)));
}

}  // namespace

TEST_CASE("dom_step examples", "[dompath]") {
  auto claw = build_family(FamilySpec::claw());
  auto d = dom_step(claw, VertexPath{1, 0, 2});
  CHECK(d.tag == StepTag::Dominating);
  CHECK(d.path == VertexPath{1, 0, 2});

  auto g = witness_instance(false);
  auto w = dom_step(g, VertexPath{0, 1, 2, 3, 4});
  REQUIRE(w.tag == StepTag::Witness);
  REQUIRE(w.witness);
  CHECK(w.witness->pairs[0] == std::pair<Vertex, Vertex>{0, 1});
  CHECK(w.witness->pairs[1] == std::pair<Vertex, Vertex>{4, 3});
  CHECK(w.witness->pairs[2] == std::pair<Vertex, Vertex>{6, 5});
  CHECK(independently_three_p2(g, *w.witness));

  auto h = witness_instance(true);
  auto r = dom_step(h, VertexPath{0, 1, 2, 3, 4});
  REQUIRE(r.tag == StepTag::Rewired);
  CHECK(r.path == VertexPath{6, 5, 2, 1, 3});
  CHECK(covered_set(h, r.path, 1).size() > covered_set(h, VertexPath{0, 1, 2, 3, 4}, 1).size());
  CHECK(independently_dominating(h, r.path));
}

TEST_CASE("dom_step extension cases", "[dompath]") {
  // Endpoint with an outside neighbor.
  auto p4 = build_family(FamilySpec::path(4));
  auto e = dom_step(p4, VertexPath{1});
  REQUIRE(e.tag == StepTag::Extended);
  CHECK(e.path == VertexPath{0, 1});

  // y adjacent to u': path 0-1-2-3, y=4 on 1, x=5 on 4; 0 has no other neighbor.
  auto g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
  auto a = dom_step(g, VertexPath{0, 1, 2, 3});
  REQUIRE(a.tag == StepTag::Extended);
  CHECK(a.path == VertexPath{5, 4, 1, 2, 3});

  // u'v edge: P = 0..4 with chord 1-4, y=5 on w=2, x=6.
  auto c = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 5}, {5, 6}});
  auto s = dom_step(c, VertexPath{0, 1, 2, 3, 4});
  REQUIRE(s.tag == StepTag::Extended);
  CHECK(s.path.size() == 6);
  CHECK(is_walk_simple(c, s.path.vertices()));

  // uv edge (a cycle): the step drops x and still grows by one.
  auto u = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {2, 5}, {5, 6}});
  auto t = dom_step(u, VertexPath{0, 1, 2, 3, 4});
  REQUIRE(t.tag == StepTag::Extended);
  CHECK(t.path == VertexPath{5, 2, 1, 0, 4, 3});
}

TEST_CASE("dominating_path examples", "[dompath]") {
  auto net = build_family(FamilySpec::net());
  auto c = dominating_path(net);
  REQUIRE(std::holds_alternative<DomPath>(c));
  CHECK(independently_dominating(net, std::get<DomPath>(c).path));
  // From a longest path: leaf, three triangle vertices, leaf.
  auto lp = dominating_path(net, brute_longest_path(net));
  REQUIRE(std::holds_alternative<DomPath>(lp));
  CHECK(std::get<DomPath>(lp).path.size() == 5);
  CHECK(independently_dominating(net, std::get<DomPath>(lp).path));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = gen_random(GenSpec{Split{20, 0.4}, seed});
    auto r = dominating_path(g);
    REQUIRE(std::holds_alternative<DomPath>(r));
    CHECK(independently_dominating(g, std::get<DomPath>(r).path));
  }

  auto w = dominating_path(witness_instance(false), VertexPath{0, 1, 2, 3, 4});
  REQUIRE(std::holds_alternative<ThreeP2>(w));
  CHECK(independently_three_p2(witness_instance(false), std::get<ThreeP2>(w)));

  CHECK_THROWS_AS(dominating_path(three_p2()), PreconditionError);
  CHECK_THROWS_AS(dominating_path(net, VertexPath{3, 4}), PreconditionError);
}

TEST_CASE("step results satisfy their tag invariants", "[dompath][property]") {
  CounterRng rng(8);
  for (int t = 0; t < 2000; ++t) {
    const auto n = static_cast<Vertex>(2 + rng.below(30));
    auto g = random_connected(n, 0.04 + 0.2 * rng.uniform(), rng.next());
    VertexPath prev{0};
    DomStats st;
    auto c = dominating_path(g, std::nullopt, &st, [&](std::size_t, const StepResult& r) {
      if (r.tag == StepTag::Extended) {
        REQUIRE(r.path.size() == prev.size() + 1);
        REQUIRE(is_walk_simple(g, r.path.vertices()));
      } else if (r.tag == StepTag::Rewired) {
        REQUIRE(r.path.size() == prev.size());
        REQUIRE(covered_set(g, r.path, 1).size() > covered_set(g, prev, 1).size());
      }
      if (r.tag == StepTag::Extended || r.tag == StepTag::Rewired) prev = r.path;
    });
    require_valid(g, c);
    REQUIRE(st.steps <= static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    REQUIRE(st.steps == st.extended + st.rewired);
  }
}

TEST_CASE("3P2-free graphs: never a witness, longest paths stay longest", "[dompath][property]") {
  auto spec = pattern_free(GenSpec{GnpConnected{9, 0.3}, 0}, {FamilySpec::three_pk(2)}, 2000, 0);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    spec.seed = seed;
    auto g = gen_random(spec);
    auto lp = brute_longest_path(g);
    auto c = dominating_path(g, lp);
    REQUIRE(std::holds_alternative<DomPath>(c));
    REQUIRE(std::get<DomPath>(c).path.size() == lp.size());
    REQUIRE(independently_dominating(g, std::get<DomPath>(c).path));
    REQUIRE(std::holds_alternative<DomPath>(dominating_path(g)));
  }
}

TEST_CASE("DomCertificate JSON and check_certificate", "[dompath][io]") {
  auto g = witness_instance(false);
  auto j = to_json(dominating_path(g, VertexPath{0, 1, 2, 3, 4}));
  CHECK(j.at("kind") == "three_p2");
  CHECK(check_certificate(g, j));
  j["pairs"][0] = json::array({0, 2});
  CHECK_FALSE(check_certificate(g, j));

  auto net = build_family(FamilySpec::net());
  auto d = to_json(dominating_path(net));
  CHECK(d.at("kind") == "dom_path");
  CHECK(check_certificate(net, d));
  d["path"] = json::array({0, 1});
  CHECK_FALSE(check_certificate(net, d));
  CHECK(to_string(StepTag::Rewired) == std::string("REWIRED"));
}
