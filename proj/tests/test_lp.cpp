#include "tropsing/lp.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tropsing;
using tst::rv;

TEST_CASE("simplex solves a textbook minimization") {
  // min x + y  s.t.  x + 2y >= 4, 3x + y >= 6
  lp::LinearProgram prog(2);
  prog.add_ge(rv({1, 2}), Rat(4));
  prog.add_ge(rv({3, 1}), Rat(6));
  lp::Result r = prog.minimize(rv({1, 1}));
  REQUIRE(r.optimal());
  CHECK(r.value == Rat(14, 5));  // optimum at (8/5, 6/5)
  CHECK(r.x(0) == Rat(8, 5));
  CHECK(r.x(1) == Rat(6, 5));
}

TEST_CASE("simplex detects infeasibility") {
  lp::LinearProgram prog(1);
  prog.add_le(rv({1}), Rat(1));
  prog.add_ge(rv({1}), Rat(2));
  CHECK(prog.minimize(rv({1})).status == lp::Status::infeasible);
  CHECK_FALSE(prog.feasible());
}

TEST_CASE("simplex detects unboundedness") {
  lp::LinearProgram prog(2);
  prog.add_ge(rv({1, 1}), Rat(1));
  CHECK(prog.minimize(rv({-1, 0})).status == lp::Status::unbounded);
}

TEST_CASE("simplex handles equalities and degenerate rows") {
  // min 2x + 3y  s.t.  x + y = 1, 2x + 2y = 2 (redundant), x - y >= 0
  lp::LinearProgram prog(2);
  prog.add_eq(rv({1, 1}), Rat(1));
  prog.add_eq(rv({2, 2}), Rat(2));
  prog.add_ge(rv({1, -1}), Rat(0));
  lp::Result r = prog.minimize(rv({2, 3}));
  REQUIRE(r.optimal());
  CHECK(r.value == Rat(2));  // objective 3 - x, optimum at (1, 0)
  CHECK(r.x == rv({1, 0}));
}

TEST_CASE("maximization is negated minimization") {
  // max t s.t. t <= 3/7
  lp::LinearProgram prog(1);
  prog.add_le(rv({1}), Rat(3, 7));
  lp::Result r = prog.maximize(rv({1}));
  REQUIRE(r.optimal());
  CHECK(r.value == Rat(3, 7));
}

TEST_CASE("random LPs: optimum satisfies all constraints and improves on grid points") {
  tst::Rng rng(20240817);
  for (int round = 0; round < 50; ++round) {
    const int n = rng.uniform(1, 3);
    lp::LinearProgram prog(n);
    std::vector<std::pair<RatVec, Rat>> ges;
    for (int i = 0; i < rng.uniform(1, 4); ++i) {
      RatVec row(n);
      for (int k = 0; k < n; ++k) row(k) = rng.positive_rat();
      Rat rhs = rng.positive_rat();
      prog.add_ge(row, rhs);
      ges.emplace_back(row, rhs);
    }
    RatVec cost(n);
    for (int k = 0; k < n; ++k) cost(k) = rng.positive_rat();
    lp::Result r = prog.minimize(cost);
    REQUIRE(r.optimal());
    for (auto& [row, rhs] : ges) CHECK(row.dot(r.x) >= rhs);
    // No feasible grid point beats the optimum.
    for (int trial = 0; trial < 20; ++trial) {
      RatVec cand = rng.point(n, 6, 2);
      bool ok = true;
      for (auto& [row, rhs] : ges) ok = ok && row.dot(cand) >= rhs;
      if (ok) CHECK(cost.dot(cand) >= r.value);
    }
  }
}
