#include "tropsing/polyhedron.hpp"

#include "tropsing/lp.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tropsing;
using tst::poly;
using tst::pts;
using tst::rv;

TEST_CASE("from_support keeps genuine vertices and drops dominated points") {
  // (1,1) lies strictly below the segment (2,0)-(0,3) (at x=1 the segment
  // has y=3/2), so it is a vertex.
  auto g = poly(2, {{2, 0}, {0, 3}, {1, 1}});
  CHECK(g.vertices() == pts({{0, 3}, {1, 1}, {2, 0}}));

  CHECK(poly(2, {{1, 0}, {2, 0}}).vertices() == pts({{1, 0}}));
  CHECK(poly(2, {{0, 0}, {5, 7}}).vertices() == pts({{0, 0}}));
}

TEST_CASE("empty and unit polyhedra are first-class") {
  NewtonPolyhedron zero(2);
  CHECK(zero.empty());
  CHECK_FALSE(member(zero, rv({1, 1})));
  CHECK(directional_number(zero, rv({1, 1})).is_pos_inf());
  CHECK(support_value(zero, rv({-1, -1})).is_neg_inf());
  CHECK_FALSE(covol_finite(zero));

  auto unit = NewtonPolyhedron::unit(2);
  CHECK(unit.is_unit());
  CHECK(unit.contains_origin());
  CHECK(directional_number(unit, rv({3, 4})) == ExtRat(Rat(0)));
  CHECK(support_value(unit, rv({-2, -5})) == ExtRat(Rat(0)));
  CHECK(unit.facets().empty());
}

TEST_CASE("member decides exact convex+orthant membership") {
  auto g = poly(2, {{1, 0}, {0, 1}});
  CHECK(member(g, rv({Rat(1, 2), Rat(1, 2)})));
  CHECK_FALSE(member(g, rv({Rat(1, 4), Rat(1, 4)})));
  CHECK(member(g, rv({5, 7})));
  CHECK_FALSE(member(g, rv({Rat(99, 100), 0})));
  CHECK(member(g, rv({1, 0})));
}

TEST_CASE("reduce removes boundary non-vertices and is order independent") {
  CHECK(reduce(2, pts({{1, 0}, {0, 1}, {1, 1}})).vertices() == pts({{0, 1}, {1, 0}}));
  CHECK(reduce(2, pts({{2, 1}, {1, 2}})).vertices() == pts({{1, 2}, {2, 1}}));
  CHECK(reduce(2, {}).empty());
  // (1,2),(2,1) sit on the segment (3,0)-(0,3): removed.
  CHECK(reduce(2, pts({{3, 0}, {1, 2}, {2, 1}, {0, 3}})).vertices() ==
        pts({{0, 3}, {3, 0}}));

  tst::Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    int n = rng.uniform(2, 4);
    std::vector<RatVec> cloud;
    for (int i = 0; i < 8; ++i) cloud.push_back(rng.point(n));
    auto reference = reduce(n, cloud);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::shuffle(cloud.begin(), cloud.end(), rng.gen());
      CHECK(reduce(n, cloud) == reference);
    }
  }
}

TEST_CASE("tropical semiring operations on fixed instances") {
  auto a = poly(2, {{2, 0}});
  auto b = poly(2, {{0, 3}});
  CHECK(trop_add(a, b).vertices() == pts({{0, 3}, {2, 0}}));
  CHECK(trop_add(a, a) == a);  // idempotent
  CHECK(trop_add(poly(2, {{1, 1}}), NewtonPolyhedron::unit(2)) ==
        NewtonPolyhedron::unit(2));  // unit absorbs under max

  // Minkowski product: boundary midpoints of the sum segment disappear.
  auto p = poly(2, {{1, 0}, {0, 1}});
  auto q = poly(2, {{2, 0}, {0, 2}});
  CHECK(trop_mul(p, q).vertices() == pts({{0, 3}, {3, 0}}));
  CHECK(trop_mul(p, NewtonPolyhedron::unit(2)) == p);
  CHECK(trop_mul(p, NewtonPolyhedron(2)).empty());  // zero annihilates

  auto s = scale(poly(2, {{2, 0}, {0, 3}}), Rat(1, 2));
  CHECK(s.vertices() == pts({{0, Rat(3, 2)}, {1, 0}}));
  CHECK(scale(scale(p, Rat(5, 3)), Rat(3, 5)) == p);
  CHECK(scale(p, Rat(1)) == p);
}

TEST_CASE("facets: fixed instances") {
  auto g = poly(2, {{1, 0}, {0, 1}});
  REQUIRE(g.facets().size() == 1);
  CHECK(g.facets()[0].normal == rv({1, 1}));
  CHECK(g.facets()[0].offset == Rat(1));

  auto h = poly(2, {{2, 0}, {1, 1}, {0, 3}});
  REQUIRE(h.facets().size() == 2);
  CHECK(h.facets()[0].normal == rv({1, 1}));
  CHECK(h.facets()[0].offset == Rat(2));
  CHECK(h.facets()[1].normal == rv({2, 1}));
  CHECK(h.facets()[1].offset == Rat(3));

  // Rational data gets primitive integer normals.
  auto r = poly(2, {{Rat(1, 2), 0}, {0, Rat(1, 3)}});
  REQUIRE(r.facets().size() == 1);
  CHECK(r.facets()[0].normal == rv({2, 3}));
  CHECK(r.facets()[0].offset == Rat(1));
}

TEST_CASE("support_value on fixed instances") {
  auto g = poly(2, {{1, 0}, {0, 1}});
  CHECK(support_value(g, rv({-1, -2})) == ExtRat(Rat(-1)));
  CHECK(support_value(g, rv({0, 0})) == ExtRat(Rat(0)));
  CHECK_THROWS_AS(support_value(g, rv({1, -1})), DomainError);
}

TEST_CASE("directional_number on fixed instances") {
  auto g = poly(2, {{2, 0}, {0, 3}});
  CHECK(directional_number(g, rv({1, 1})) == ExtRat(Rat(2)));
  auto mono = poly(2, {{3, 4}});
  CHECK(directional_number(mono, rv({Rat(1, 2), 2})) == ExtRat(Rat(19, 2)));
  CHECK_THROWS_AS(directional_number(g, rv({0, 1})), DomainError);
}

TEST_CASE("covol_finite checks every axis for an intercept vertex") {
  CHECK(covol_finite(poly(2, {{2, 0}, {0, 3}})));
  CHECK_FALSE(covol_finite(poly(2, {{2, 1}, {1, 2}})));
  CHECK(covol_finite(NewtonPolyhedron::unit(3)));
  CHECK(axis_intercept(poly(2, {{2, 0}, {0, 3}}), 1) == Rat(3));
  CHECK_FALSE(axis_intercept(poly(2, {{2, 1}, {1, 2}}), 0).has_value());
}

// --- Properties -----------------------------------------------------------

TEST_CASE("semiring laws on random rational supports (n <= 4)") {
  tst::Rng rng(20240401);
  for (int round = 0; round < 60; ++round) {
    int n = rng.uniform(1, 4);
    auto a = rng.polyhedron(n, 4, false, false);
    auto b = rng.polyhedron(n, 4, false, false);
    auto c = rng.polyhedron(n, 4, false, false);
    auto unit = NewtonPolyhedron::unit(n);
    auto zero = NewtonPolyhedron(n);

    CHECK(trop_add(a, a) == a);
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_mul(a, b) == trop_mul(b, a));
    CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    CHECK(trop_mul(a, unit) == a);
    CHECK(trop_mul(a, zero).empty());
    CHECK(trop_add(a, zero) == a);
    CHECK(trop_mul(trop_add(a, b), c) == trop_add(trop_mul(a, c), trop_mul(b, c)));
  }
}

TEST_CASE("directional numbers are homogeneous, additive and multiplicative") {
  tst::Rng rng(20240402);
  for (int round = 0; round < 80; ++round) {
    int n = rng.uniform(1, 4);
    auto a = rng.polyhedron(n, 4, false, false);
    auto b = rng.polyhedron(n, 4, false, false);
    RatVec w = rng.weight(n).coords();
    Rat c = rng.positive_rat();

    ExtRat na = directional_number(a, w), nb = directional_number(b, w);
    CHECK(directional_number(trop_add(a, b), w) == min(na, nb));
    CHECK(directional_number(trop_mul(a, b), w) == na + nb);
    CHECK(directional_number(scale(a, c), w) == na * c);
  }
}

TEST_CASE("H/V consistency: membership equals facet inequalities") {
  tst::Rng rng(20240403);
  for (int round = 0; round < 25; ++round) {
    int n = rng.uniform(2, 4);
    auto g = rng.polyhedron(n, 5, false, false);
    const auto& facets = g.facets();
    for (int trial = 0; trial < 12; ++trial) {
      RatVec p = rng.point(n);
      bool by_h = true;
      for (const Facet& f : facets)
        if (f.normal.dot(p) < f.offset) { by_h = false; break; }
      CHECK(member(g, p) == by_h);
    }
  }
}

TEST_CASE("support function duality: vertex max equals LP over the H-form") {
  tst::Rng rng(20240404);
  for (int round = 0; round < 25; ++round) {
    int n = rng.uniform(2, 3);
    auto g = rng.polyhedron(n, 4, false, false);
    RatVec t = rng.nonpositive(n);
    lp::LinearProgram prog(n);
    for (const Facet& f : g.facets()) prog.add_ge(f.normal, f.offset);
    lp::Result r = prog.maximize(t);
    REQUIRE(r.optimal());
    CHECK(support_value(g, t) == ExtRat(r.value));
  }
}

TEST_CASE("support_value is positively homogeneous (log-homogeneity)") {
  tst::Rng rng(20240405);
  for (int round = 0; round < 40; ++round) {
    int n = rng.uniform(1, 4);
    auto g = rng.polyhedron(n, 4, false, false);
    RatVec t = rng.nonpositive(n);
    Rat c = rng.positive_rat();
    ExtRat lhs = support_value(g, RatVec(c * t));
    CHECK(lhs == support_value(g, t) * c);
  }
}

TEST_CASE("monotonicity: larger polyhedron has smaller directional numbers") {
  tst::Rng rng(20240406);
  for (int round = 0; round < 40; ++round) {
    int n = rng.uniform(1, 3);
    auto small = rng.polyhedron(n, 4, false, false);
    auto big = trop_add(small, rng.polyhedron(n, 3, false, false));
    // small is contained in big by construction.
    for (const RatVec& v : small.vertices()) CHECK(member(big, v));
    RatVec w = rng.weight(n).coords();
    CHECK(directional_number(big, w) <= directional_number(small, w));
  }
}
