#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pbw/cycle_trail.hpp"
#include "pbw/diagram.hpp"
#include "pbw/enumerate.hpp"
#include "pbw/pbd_io.hpp"
#include "test_util.hpp"

using namespace pbw;
using namespace pbw::test;

TEST_CASE("make_diagram basics and errors") {
  auto id3 = Diagram::identity(3);
  CHECK(id3 == make_diagram(3, {{1, 1}, {2, 2}, {3, 3}}, {}, {}));

  CHECK_THROWS_AS(make_diagram(2, {{1, 1}, {1, 2}}, {}, {}), PbwError);
  CHECK_THROWS_AS(make_diagram(2, {{1, 3}}, {}, {}), PbwError);
  CHECK_THROWS_AS(make_diagram(3, {}, {{2, 2}}, {}), PbwError);
}

TEST_CASE("fig2 params") {
  auto a = fig2_alpha();
  auto p = params(a);
  CHECK(p.t == Card(2));
  CHECK(p.h == Card(4));
  CHECK(p.hstar == Card(4));
  CHECK(p.s == Card(2));
  CHECK(p.sstar == Card(2));
  CHECK(p.defect == Card(10));
  CHECK(p.codef == Card(10));
  CHECK(p.fix == Card(1));
  CHECK(p.shift == Card(1));
  CHECK(p.supp == Card(11));

  auto vs = vertex_sets(a);
  CHECK(vs.dom == std::vector<unsigned>{2, 12});
  CHECK(vs.defect.size() == 10);
  CHECK(vs.fix == std::vector<unsigned>{2});
  CHECK(vs.shift == std::vector<unsigned>{12});

  CHECK(a.apply(2) == 2u);
  CHECK(!a.apply(4).has_value());
  CHECK_THROWS_AS(a.apply(13), PbwError);
}

TEST_CASE("fig3 compose reproduces the figure") {
  auto a = fig2_alpha();
  auto b = fig3_beta();
  auto pb = params(b);
  CHECK(pb.t == Card(3));
  CHECK(pb.h == Card(3));
  CHECK(pb.hstar == Card(3));
  CHECK(pb.s == Card(3));
  CHECK(pb.sstar == Card(3));

  auto prod = compose(a, b);
  CHECK(prod == fig3_product());
  CHECK(prod == compose_bruteforce(a, b));
}

TEST_CASE("identity and star basics") {
  auto id5 = Diagram::identity(5);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    auto d = random_diagram(5, rng);
    CHECK(compose(id5, d) == d);
    CHECK(compose(d, id5) == d);
    CHECK(star(star(d)) == d);
  }
  CHECK(star(id5) == id5);

  // star of fig2: mirror image
  auto s = star(fig2_alpha());
  auto expect = make_diagram(12, {{2, 2}, {11, 12}},
                             {{3, 6}, {4, 5}, {7, 10}, {8, 9}},
                             {{1, 3}, {5, 9}, {6, 8}, {10, 11}});
  CHECK(s == expect);
}

TEST_CASE("regular *-semigroup identities") {
  // exhaustive on PB_2, PB_3
  for (unsigned n : {2u, 3u}) {
    auto all = enumerate_all(n);
    for (auto const& a : all) {
      CHECK(compose(compose(a, star(a)), a) == a);
      CHECK(star(star(a)) == a);
    }
    for (auto const& a : all)
      for (auto const& b : all)
        CHECK(star(compose(a, b)) == compose(star(b), star(a)));
  }
  // random n <= 8
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    unsigned n = 2 + static_cast<unsigned>(rng() % 7);
    auto a = random_diagram(n, rng);
    auto b = random_diagram(n, rng);
    CHECK(compose(compose(a, star(a)), a) == a);
    CHECK(star(compose(a, b)) == compose(star(b), star(a)));
  }
}

TEST_CASE("compose agrees with brute-force component search") {
  auto all2 = enumerate_all(2);
  for (auto const& a : all2)
    for (auto const& b : all2) CHECK(compose(a, b) == compose_bruteforce(a, b));
  auto all3 = enumerate_all(3);
  for (auto const& a : all3)
    for (auto const& b : all3) CHECK(compose(a, b) == compose_bruteforce(a, b));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    unsigned n = 2 + static_cast<unsigned>(rng() % 7);
    auto a = random_diagram(n, rng);
    auto b = random_diagram(n, rng);
    CHECK(compose(a, b) == compose_bruteforce(a, b));
  }
}

TEST_CASE("hook-only diagram is idempotent") {
  auto d = make_diagram(2, {}, {{1, 2}}, {});
  CHECK(compose(d, d) == d);
  CHECK(is_idempotent(d));
}

TEST_CASE("size mismatch") {
  CHECK_THROWS_AS(compose(Diagram::identity(2), Diagram::identity(3)), PbwError);
}

TEST_CASE("enumerate_all counts match the matching formula") {
  CHECK(pb_size_formula(1) == 2);
  CHECK(pb_size_formula(2) == 10);
  CHECK(pb_size_formula(3) == 76);
  CHECK(pb_size_formula(4) == 764);
  CHECK(enumerate_all(1).size() == 2);
  CHECK(enumerate_all(2).size() == 10);
  CHECK(enumerate_all(3).size() == 76);
  CHECK(enumerate_all(4).size() == 764);
  CHECK(enumerate_all(5).size() == pb_size_formula(5));
  CHECK_THROWS_AS(enumerate_all(7), PbwError);

  // each diagram exactly once
  auto all = enumerate_all(4);
  std::set<std::string> encs;
  for (auto const& d : all) encs.insert(canonical_encode(d));
  CHECK(encs.size() == all.size());
}

TEST_CASE("idempotent count in PB_2") {
  unsigned count = 0;
  for (auto const& d : enumerate_all(2))
    if (is_idempotent(d)) ++count;
  CHECK(count == 7);
}

TEST_CASE("projections") {
  CHECK(is_projection(Diagram::identity(3)));
  auto hook = make_diagram(2, {}, {{1, 2}}, {{1, 2}});
  CHECK(is_projection(hook));
  auto t = make_diagram(2, {{1, 2}, {2, 1}}, {}, {});
  CHECK(!is_projection(t));
  CHECK(!is_idempotent(t));
}

TEST_CASE("canonical encode/decode round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    unsigned n = 1 + static_cast<unsigned>(rng() % 8);
    auto d = random_diagram(n, rng);
    CHECK(canonical_decode(canonical_encode(d)) == d);
  }
}

TEST_CASE("restrict and disjoint_union") {
  CHECK(restrict_to(Diagram::identity(5), {1, 2}) == Diagram::identity(2));

  auto a = fig2_alpha();
  // W = {1,3} alone is not closed under the edges of alpha: the lower hook
  // {3',6'} crosses, so restriction is undefined there
  CHECK_THROWS_AS(restrict_to(a, {1, 3}), PbwError);
  // the component-closed superset works and keeps the {1,3} hook
  auto r = restrict_to(a, {1, 3, 4, 5, 6, 8, 9});
  CHECK(r.has_upper_edge(1, 2));  // relabelled {1,3}
  CHECK(r == make_diagram(7, {}, {{1, 2}, {4, 7}, {5, 6}},
                          {{2, 5}, {3, 4}, {6, 7}}));

  // round trip: restrict to parts then reassemble
  auto d = make_diagram(6, {{1, 2}, {2, 1}}, {{3, 4}}, {{3, 4}});
  auto p1 = restrict_to(d, {1, 2});
  auto p2 = restrict_to(d, {3, 4});
  auto p3 = restrict_to(d, {5, 6});
  auto u = disjoint_union(6, {{p1, {1, 2}}, {p2, {3, 4}}, {p3, {5, 6}}});
  CHECK(u == d);
}

TEST_CASE("cycle-trail decomposition") {
  // 1 -> 2 -> 3 -> 1 cycle, 4 -> 5 trail
  auto a = make_diagram(5, {{1, 2}, {2, 3}, {3, 1}, {4, 5}}, {}, {});
  auto d = cycle_trail_decompose(a);
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.cycles[0] == std::vector<unsigned>{1, 2, 3});
  REQUIRE(d.trails.size() == 1);
  CHECK(d.trails[0] == std::vector<unsigned>{4, 5});
  CHECK(reassemble(5, d) == a);

  auto id = Diagram::identity(4);
  auto di = cycle_trail_decompose(id);
  CHECK(di.cycles.size() == 4);
  CHECK(di.trails.size() == 0);

  CHECK_THROWS_AS(cycle_trail_decompose(make_diagram(2, {}, {{1, 2}}, {})),
                  PbwError);

  // random round trip on I_8
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 200) {
    auto r = random_diagram(8, rng);
    if (!in_ix(r)) continue;
    ++done;
    CHECK(reassemble(8, cycle_trail_decompose(r)) == r);
  }
}

TEST_CASE("pbd finite round trip") {
  auto a = fig2_alpha();
  auto text = serialize_pbd(a);
  auto back = parse_pbd(text);
  REQUIRE(std::holds_alternative<Diagram>(back));
  CHECK(std::get<Diagram>(back) == a);
  CHECK(serialize_pbd(back) == text);

  auto obj = parse_pbd("pbd 1 finite n=3\n# comment\nT 1 1\nT 2 2\nT 3 3\n");
  CHECK(std::get<Diagram>(obj) == Diagram::identity(3));
  CHECK_THROWS_AS(parse_pbd("pbd 2 finite n=3\n"), PbwError);
  CHECK_THROWS_AS(parse_pbd("pbd 1 finite n=2\nT 1 1\nT 1 2\n"), PbwError);
}
