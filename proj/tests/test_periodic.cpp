#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbw/lazy.hpp"
#include "pbw/pbd_io.hpp"
#include "pbw/periodic.hpp"

using namespace pbw;

namespace {

// Fig. 4 of the source figures, translated to 0-based indices:
// alpha: transversal {0,0'}, hooks {2i-1,2i} on both rows (i >= 1).
PeriodicDescriptor fig4_alpha() {
  PeriodicDescriptor d(1, 2, {{upper(0), lower(0)}},
                       {Rule::hook(-1), Rule::hook(1)},
                       {Rule::hook(-1), Rule::hook(1)});
  validate_or_throw(d);
  return d;
}

// beta: hooks {2i,2i+1} on both rows (full diagram).
PeriodicDescriptor fig4_beta() {
  PeriodicDescriptor d(0, 2, {},
                       {Rule::hook(1), Rule::hook(-1)},
                       {Rule::hook(1), Rule::hook(-1)});
  validate_or_throw(d);
  return d;
}

// their product: upper singleton {0}, upper hooks {2i-1,2i}, lower hooks
// {2i,2i+1}; with m=0 the upper rule instance at 0 lands below the bound
// and leaves the singleton
PeriodicDescriptor fig4_product() {
  PeriodicDescriptor d(0, 2, {},
                       {Rule::hook(-1), Rule::hook(1)},
                       {Rule::hook(1), Rule::hook(-1)});
  validate_or_throw(d);
  return d;
}

}  // namespace

TEST_CASE("descriptor validation") {
  // shift is fine
  CHECK_NOTHROW(shift(1));

  // hook(+1) at every residue of period 1: i would pair with both i-1, i+1
  PeriodicDescriptor bad(0, 1, {}, {Rule::hook(1)}, {Rule::singleton()});
  auto rep = validate(bad);
  CHECK(!rep.ok);
  CHECK(rep.code == ErrorCode::AsymmetricRule);

  // p=2 hooks both directions: ok
  PeriodicDescriptor good(0, 2, {}, {Rule::hook(1), Rule::hook(-1)},
                          {Rule::singleton(), Rule::singleton()});
  CHECK(validate(good).ok);

  // overlapping prefix edges
  PeriodicDescriptor dup(2, 1,
                         {{upper(0), lower(0)}, {upper(0), lower(1)}},
                         {Rule::transversal(0)}, {Rule::transversal(0)});
  auto rep2 = validate(dup);
  CHECK(!rep2.ok);
  CHECK(rep2.code == ErrorCode::OverlappingEdges);

  // asymmetric transversal rules
  PeriodicDescriptor asym(0, 2, {},
                          {Rule::transversal(0), Rule::transversal(0)},
                          {Rule::transversal(0), Rule::singleton()});
  CHECK(!validate(asym).ok);
}

TEST_CASE("shift partner and params") {
  auto sh = shift(1);
  CHECK(sh.partner(upper(5)) == lower(6));
  CHECK(sh.partner(lower(0)) == std::nullopt);
  CHECK(sh.partner(lower(6)) == upper(5));

  auto p = params_periodic(sh);
  CHECK(p.t == kAleph0);
  CHECK(p.defect == Card(0));
  CHECK(p.codef == Card(1));
  CHECK(p.sstar == Card(1));
  CHECK(p.s == Card(0));
  CHECK(p.fix == Card(0));
  CHECK(p.shift == kAleph0);

  // star(shift) is the co-shift: i -> (i-1)', 0' unmatched on the upper row
  auto co = star_periodic(sh);
  CHECK(co.partner(upper(0)) == std::nullopt);
  CHECK(co.partner(upper(3)) == lower(2));
  auto q = params_periodic(co);
  CHECK(q.s == Card(1));
  CHECK(q.codef == Card(0));
}

TEST_CASE("identity and eps params") {
  auto id = periodic_identity();
  auto p = params_periodic(id);
  CHECK(p.t == kAleph0);
  CHECK(p.h == Card(0));
  CHECK(p.s == Card(0));
  CHECK(p.fix == kAleph0);
  CHECK(p.supp == Card(0));

  auto e = eps_at(3);
  auto q = params_periodic(e);
  CHECK(q.s == Card(1));
  CHECK(q.sstar == Card(1));
  CHECK(q.defect == Card(1));
  CHECK(q.supp == Card(1));
  CHECK(e.partner(upper(3)) == std::nullopt);
  CHECK(e.partner(upper(2)) == lower(2));
}

TEST_CASE("fig4 descriptors") {
  auto a = fig4_alpha();
  CHECK(a.partner(upper(1)) == upper(2));  // figure's {2,3} in 1-based terms
  CHECK(a.partner(upper(0)) == lower(0));
  auto pa = params_periodic(a);
  CHECK(pa.t == Card(1));
  CHECK(pa.h == kAleph0);
  CHECK(pa.hstar == kAleph0);
  CHECK(pa.s == Card(0));
  CHECK(pa.sstar == Card(0));

  auto b = fig4_beta();
  auto pb = params_periodic(b);
  CHECK(pb.t == Card(0));
  CHECK(pb.h == kAleph0);
  CHECK(pb.s == Card(0));
}

TEST_CASE("fig4 composition and detection") {
  auto a = fig4_alpha();
  auto b = fig4_beta();
  auto prod = compose_lazy(a, b);

  auto expect = fig4_product();
  CHECK(window_equal(prod, expect, 300));
  CHECK(prod.partner(upper(0)) == std::nullopt);

  auto det = detect_periodicity(prod, default_scan_bound(a, b));
  REQUIRE(det.has_value());
  CHECK(det->period() == 2);
  CHECK(det->prefix_bound() <= 2);
  CHECK(window_equal(*det, expect, 10 * default_scan_bound(a, b)));

  auto p = params_periodic(*det);
  CHECK(p.t == Card(0));
  CHECK(p.s == Card(1));
  CHECK(p.h == kAleph0);
  CHECK(p.hstar == kAleph0);
  CHECK(p.sstar == Card(0));
}

TEST_CASE("bicyclic witness: shift") {
  auto sh = LazyDiagram::from_descriptor(shift(1));
  auto co = star_lazy(sh);
  auto one = compose_lazy(sh, co);
  auto other = compose_lazy(co, sh);
  auto id = periodic_identity();
  CHECK(window_equal(one, id, 1000));
  CHECK(!window_equal(other, id, 1000));
  CHECK(other.partner(upper(0)) == std::nullopt);
  CHECK(other.partner(lower(0)) == std::nullopt);
  CHECK(other.partner(upper(1)) == lower(1));
}

TEST_CASE("alpha alpha* = 1 for defect-zero descriptors") {
  std::vector<PeriodicDescriptor> gr = {shift(1), shift(3), periodic_identity(),
                                        fig4_beta()};
  for (auto const& d : gr) {
    if (params_periodic(d).defect != Card(0)) continue;
    auto ld = LazyDiagram::from_descriptor(d);
    auto prod = compose_lazy(ld, star_lazy(ld));
    CHECK(window_equal(prod, periodic_identity(), 500));
  }
}

TEST_CASE("detect_periodicity corner cases") {
  auto id = periodic_identity();
  auto det = detect_periodicity(LazyDiagram::from_descriptor(id), 64);
  REQUIRE(det.has_value());
  CHECK(det->period() == 1);
  CHECK(det->prefix_bound() == 0);

  // partner defined only at perfect squares: not eventually periodic
  LazyDiagram squares(
      [](PVertex v) -> std::optional<PVertex> {
        std::int64_t i = v.index;
        std::int64_t r = static_cast<std::int64_t>(std::sqrt(double(i)));
        bool sq = r * r == i || (r + 1) * (r + 1) == i;
        if (!sq) return std::nullopt;
        return PVertex{1 - v.row, i};
      },
      "squares");
  CHECK(!detect_periodicity(squares, 256).has_value());
}

TEST_CASE("window_equal large") {
  CHECK(window_equal(shift(1), shift(1), 1000000));
  CHECK(!window_equal(shift(1), shift(2), 100));
}

TEST_CASE("block_hooks builder") {
  auto bh = block_hooks(2, {{0, 1, true, false}}, false);
  CHECK(bh.partner(upper(2)) == upper(3));
  CHECK(bh.partner(lower(2)) == std::nullopt);
  auto p = params_periodic(bh);
  CHECK(p.h == kAleph0);
  CHECK(p.sstar == kAleph0);
}

TEST_CASE("pbd periodic round trip") {
  for (auto const& d : {fig4_alpha(), fig4_beta(), shift(2), eps_at(1)}) {
    auto text = serialize_pbd(d);
    auto back = parse_pbd(text);
    REQUIRE(std::holds_alternative<PeriodicDescriptor>(back));
    auto const& d2 = std::get<PeriodicDescriptor>(back);
    CHECK(d2 == d);
    CHECK(serialize_pbd(d2) == text);
    CHECK(window_equal(d2, d, 200));
  }
  CHECK_THROWS_AS(parse_pbd("pbd 1 periodic m=0 p=1\nR upper 0 H 1\nR lower 0 S\n"),
                  PbwError);
}

TEST_CASE("descriptor composition round trips against the lazy oracle") {
  std::vector<PeriodicDescriptor> lib = {
      periodic_identity(), shift(1),  shift(2),    star_periodic(shift(1)),
      fig4_alpha(),        fig4_beta(), eps_at(0),  eps_at(2),
      block_hooks(2, {{0, 1, true, true}}, false),
      block_hooks(3, {{1, 2, true, true}}, true),
  };
  for (auto const& a : lib) {
    for (auto const& b : lib) {
      auto prod = compose_lazy(a, b);
      auto sb = default_scan_bound(a, b);
      auto det = detect_periodicity(prod, sb);
      if (det) {
        CHECK(window_equal(*det, prod, 10 * sb));
      }
    }
  }
}
