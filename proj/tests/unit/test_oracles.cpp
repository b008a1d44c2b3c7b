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

#include <functional>
#include <numeric>

#include "support.hpp"

using namespace pathecc;
using namespace pathecc::testing;

TEST_CASE("brute_path_eccentricity examples", "[oracles]") {
  auto c6 = build_family(FamilySpec::cycle(6));
  auto r = brute_path_eccentricity(c6);
  CHECK(r.eccentricity == 0);
  CHECK(r.path == VertexPath{0, 1, 2, 3, 4, 5});
  CHECK(brute_path_eccentricity(build_family(FamilySpec::sk(2))).eccentricity == 2);
  CHECK(brute_path_eccentricity(build_family(FamilySpec::tk(2))).eccentricity == 2);
  auto net = build_family(FamilySpec::net());
  auto rn = brute_path_eccentricity(net);
  CHECK(rn.eccentricity == 1);
  CHECK(eccentricity(floyd_warshall(net), rn.path.vertices()) == 1);
}

TEST_CASE("brute_path_eccentricity enforces its cap and connectivity", "[oracles]") {
  CHECK_THROWS_AS(brute_path_eccentricity(build_family(FamilySpec::path(13))), CapExceeded);
  OracleCaps caps;
  caps.path_eccentricity = 13;
  CHECK(brute_path_eccentricity(build_family(FamilySpec::path(13)), caps).eccentricity == 0);
  CHECK_THROWS_AS(brute_path_eccentricity(three_p2()), PreconditionError);
}

TEST_CASE("find_induced examples", "[oracles]") {
  auto s2 = build_family(FamilySpec::sk(2));
  auto claw = build_family(FamilySpec::claw());
  auto e = find_induced(s2, claw);
  REQUIRE(e);
  CHECK((*e)[0] == 0);
  CHECK_FALSE(find_induced(build_family(FamilySpec::net()), claw));
  auto t2 = build_family(FamilySpec::tk(2));
  auto f = find_induced(t2, three_p2());
  REQUIRE(f);
  CHECK(induces_exactly(t2, *f, {{(*f)[0], (*f)[1]}, {(*f)[2], (*f)[3]}, {(*f)[4], (*f)[5]}}));
  CHECK_THROWS_AS(find_induced(t2, build_family(FamilySpec::path(13))), CapExceeded);
}

TEST_CASE("find_induced agrees with brute-force subset enumeration", "[oracles][property]") {
  CounterRng rng(3);
  const std::vector<Graph> pats{build_family(FamilySpec::claw()), build_family(FamilySpec::path(4)),
                                build_family(FamilySpec::cycle(4)), build_family(FamilySpec::path(3))};
  for (int t = 0; t < 300; ++t) {
    auto g = gen_random(GenSpec{Gnp{7, rng.uniform()}, rng.next()});
    for (const auto& pat : pats) {
      auto pe = pat.edges();
      bool want = false;
      const Vertex pn = pat.order();
      std::vector<Vertex> img(static_cast<std::size_t>(pn));
      // All injective maps by odometer over 7^pn assignments.
      std::function<void(Vertex)> rec = [&](Vertex i) {
        if (want) return;
        if (i == pn) {
          std::vector<std::pair<Vertex, Vertex>> es;
          for (auto ed : pe) es.push_back({img[ed.u], img[ed.v]});
          want = induces_exactly(g, img, es);
          return;
        }
        for (Vertex v = 0; v < g.order(); ++v) {
          img[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
      REQUIRE(find_induced(g, pat).has_value() == want);
    }
  }
}

TEST_CASE("brute_star_c1p examples", "[oracles]") {
  auto p4 = brute_star_c1p(build_family(FamilySpec::path(4)));
  REQUIRE(p4);
  CHECK(*p4 == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(brute_star_c1p(build_family(FamilySpec::sk(2))));
  CHECK_FALSE(brute_star_c1p(build_family(FamilySpec::net())));
  CHECK_THROWS_AS(brute_star_c1p(build_family(FamilySpec::path(10))), CapExceeded);
}

TEST_CASE("k-AT examples", "[oracles]") {
  CHECK(is_k_at_free(build_family(FamilySpec::claw()), 1));
  auto c6 = find_k_asteroidal_triple(build_family(FamilySpec::cycle(6)), 1);
  REQUIRE(c6);
  CHECK(*c6 == std::array<Vertex, 3>{0, 2, 4});
  auto s2 = find_k_asteroidal_triple(build_family(FamilySpec::sk(2)), 1);
  REQUIRE(s2);
  CHECK(*s2 == std::array<Vertex, 3>{2, 4, 6});
}

TEST_CASE("k-AT-freeness is monotone in k", "[oracles][property]") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto g = random_connected(9, 0.25, seed);
    for (Distance k = 1; k < 4; ++k)
      if (is_k_at_free(g, k)) REQUIRE(is_k_at_free(g, k + 1));
  }
}

TEST_CASE("brute_stm_search examples", "[oracles]") {
  // u=0, p1..p3 = 1..3, v=4, y=5.
  std::vector<Vertex> c{1, 2, 3};
  auto s = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  auto ws = brute_stm_search(s, {0, 4, 5}, c);
  CHECK(ws.cls == StmClass::S);
  CHECK(ws.branch == 2);

  auto m = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 5}});
  auto wm = brute_stm_search(m, {0, 4, 5}, c);
  CHECK(wm.cls == StmClass::M);
  CHECK(wm.center == 5);

  // u=0, p1=1, p2=2, v=3, y=4.
  auto e = make_graph(5, {{1, 2}, {0, 1}, {2, 3}, {4, 1}, {4, 2}});
  std::vector<Vertex> c2{1, 2};
  auto we = brute_stm_search(e, {0, 3, 4}, c2);
  CHECK(we.cls == StmClass::M);
  CHECK(we.center == 4);
  CHECK(we.core_path == std::vector<Vertex>{0, 1, 2, 3});

  std::vector<Vertex> bad{1};
  CHECK_THROWS_AS(brute_stm_search(s, {0, 4, 5}, bad), PreconditionError);
}

TEST_CASE("Hamiltonicity of the path oracle matches bitmask DP", "[oracles][property]") {
  CounterRng rng(11);
  for (int t = 0; t < 600; ++t) {
    const auto n = static_cast<Vertex>(1 + rng.below(10));
    auto g = random_connected(n, rng.uniform() * 0.6, rng.next());
    REQUIRE((brute_path_eccentricity(g).eccentricity == 0) == has_hamiltonian_path_dp(g));
  }
}

TEST_CASE("brute_path_eccentricity is optimal against exhaustive independent search", "[oracles][property]") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = random_connected(7, 0.3, seed);
    auto fw = floyd_warshall(g);
    int best = kInf;
    std::vector<Vertex> perm(7);
    // Every simple path is a prefix of some permutation.
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t len = 1; len <= perm.size(); ++len) {
        if (len > 1 && !g.adjacent(perm[len - 2], perm[len - 1])) break;
        best = std::min(best, eccentricity(fw, std::vector<Vertex>(perm.begin(), perm.begin() + len)));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto r = brute_path_eccentricity(g);
    REQUIRE(r.eccentricity == best);
    REQUIRE(eccentricity(fw, r.path.vertices()) == best);
  }
}

TEST_CASE("brute_stm_search outputs classify", "[oracles][property]") {
  CounterRng rng(5);
  int tried = 0;
  for (int t = 0; t < 3000 && tried < 300; ++t) {
    auto g = random_connected(9, 0.3, rng.next());
    std::array<Vertex, 3> term{0, 1, 2};
    if (g.adjacent(0, 1) || g.adjacent(0, 2) || g.adjacent(1, 2)) continue;
    std::vector<Vertex> c{3, 4, 5, 6, 7, 8};
    try {
      auto w = brute_stm_search(g, term, c);
      ++tried;
      REQUIRE(classify_stm(g, w));
      REQUIRE(w.extremities[0] + w.extremities[1] + w.extremities[2] == 3);
    } catch (const PreconditionError&) {
    }
  }
  CHECK(tried >= 100);
}

TEST_CASE("generators are deterministic and honor their contracts", "[oracles][generators]") {
  GenSpec a{GnpConnected{8, 0.3}, 1};
  CHECK(gen_random(a) == gen_random(a));
  CHECK(is_connected(gen_random(a)));
  for (std::uint64_t s = 0; s < 100; ++s) CHECK(is_connected(gen_random(GenSpec{GnpConnected{30, 0.01}, s})));

  auto pf = pattern_free(GenSpec{GnpConnected{9, 0.35}, 0}, {FamilySpec::sk(2), FamilySpec::tk(2)}, 1000, 4);
  for (std::uint64_t s = 0; s < 30; ++s) {
    pf.seed = s;
    auto g = gen_random(pf);
    CHECK(free_of(g, {FamilySpec::sk(2), FamilySpec::tk(2)}));
  }

  auto mk = gen_mk_instance(MkInstance{2, 6, 2}, 3);
  CHECK(validate_solver_witness(mk.graph, mk.witness, 2));
  CHECK(gen_random(GenSpec{MkInstance{2, 6, 2}, 3}) == mk.graph);

  for (std::uint64_t s = 0; s < 30; ++s) {
    auto sp = gen_random(GenSpec{Split{12, 0.5}, s});
    CHECK(is_connected(sp));
    CHECK(free_of(sp, {FamilySpec::cycle(4), FamilySpec::cycle(5), FamilySpec::disjoint_union({FamilySpec::path(2), FamilySpec::path(2)})}));
    auto ui = gen_random(GenSpec{UnitInterval{15, 0.5}, s});
    CHECK(is_connected(ui));
    CHECK(free_of(ui, {FamilySpec::claw(), FamilySpec::net(), FamilySpec::cycle(4)}));
    auto cb = gen_random(GenSpec{CoBipartite{12, 0.3}, s});
    CHECK(is_connected(cb));
    CHECK(free_of(cb, {FamilySpec::three_pk(2)}));
  }
}

TEST_CASE("pattern_free reports an exhausted rejection budget", "[oracles][generators]") {
  auto spec = pattern_free(GenSpec{GnpConnected{8, 0.9}, 0}, {FamilySpec::complete(3)}, 5, 1);
  CHECK_THROWS_AS(gen_random(spec), RejectionExhausted);
}

TEST_CASE("CounterRng is reproducible and uniform enough", "[oracles][generators]") {
  CounterRng a(42);
  CounterRng b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(a.counter() == 100);
  CounterRng c(1);
  std::array<int, 6> hist{};
  for (int i = 0; i < 60000; ++i) ++hist[c.below(6)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
  CHECK(CounterRng::derive(1, 2) != CounterRng::derive(1, 3));
  CHECK(CounterRng::derive(1, 2) == CounterRng::derive(1, 2));
}

TEST_CASE("GenSpec and manifest JSON round-trip", "[oracles][io]") {
  auto pf = pattern_free(GenSpec{Split{10, 0.4}, 0}, {FamilySpec::sk(2)}, 50, 9);
  auto j = to_json(pf);
  CHECK(j.at("kind") == "pattern_free");
  CHECK(to_json(genspec_from_json(j)) == j);
  for (const char* text : {R"({"kind":"gnp_connected","n":8,"p":0.3,"seed":1})", R"({"kind":"gnp","n":8,"p":0.3})",
                           R"({"kind":"split","n":8})", R"({"kind":"unit_interval","n":8,"max_gap":0.7})",
                           R"({"kind":"co_bipartite","n":8,"density":0.2})",
                           R"({"kind":"mk_instance","k":2,"core_length":6,"center_degree":2})"}) {
    INFO(text);
    auto s = genspec_from_json(json::parse(text));
    CHECK(to_json(genspec_from_json(to_json(s))) == to_json(s));
  }
  auto m = manifest_from_json(json::parse(R"([{"spec":{"kind":"split","n":5},"seeds":[1,2,3]}])"));
  REQUIRE(m.size() == 1);
  CHECK(m[0].seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(manifest_from_json(to_json(m)).size() == 1);
  CHECK_THROWS_AS(genspec_from_json(json::parse(R"({"kind":"nope"})")), InputError);
  CHECK_THROWS_AS(genspec_from_json(json::parse(R"({"kind":"split"})")), InputError);
}
