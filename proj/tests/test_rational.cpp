#include "tropsing/rational.hpp"

#include <doctest.h>

using namespace tropsing;

TEST_CASE("parse_rational handles integers, fractions and decimals exactly") {
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("-3") == Rat(-3));
  CHECK(parse_rational("6/4") == Rat(3, 2));
  CHECK(parse_rational("-6/4") == Rat(-3, 2));
  CHECK(parse_rational("3.25") == Rat(13, 4));
  CHECK(parse_rational("-0.5") == Rat(-1, 2));
  CHECK(parse_rational(".5") == Rat(1, 2));
  CHECK(parse_rational("2.") == Rat(2));
  CHECK(parse_rational("0.1") == Rat(1, 10));  // exact, not binary float
}

TEST_CASE("parse_rational rejects malformed tokens") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1e-3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("rational round-trips through the wire form") {
  for (const char* s : {"0", "5", "-5", "3/7", "-22/7"}) {
    CHECK(rat_to_string(parse_rational(s)) == s);
  }
}

TEST_CASE("ExtRat ordering and arithmetic") {
  ExtRat inf = ExtRat::infinity(), ninf = ExtRat::neg_infinity();
  CHECK(ninf < ExtRat(Rat(0)));
  CHECK(ExtRat(Rat(0)) < inf);
  CHECK(min(inf, ExtRat(Rat(3))) == ExtRat(Rat(3)));
  CHECK((inf + ExtRat(Rat(5))).is_pos_inf());
  CHECK((inf * Rat(2)).is_pos_inf());
  CHECK((ExtRat(Rat(3, 2)) * Rat(2)) == ExtRat(Rat(3)));
  CHECK(inf.str() == "inf");
  CHECK(ExtRat(Rat(-7, 3)).str() == "-7/3");
  CHECK_THROWS(inf + ninf);
}

TEST_CASE("simplest_rational_above recovers the enclosed rational") {
  CHECK(simplest_rational_above(Rat(32, 100), Rat(34, 100)) == Rat(1, 3));
  CHECK(simplest_rational_above(Rat(29, 10), Rat(3)) == Rat(3));
  CHECK(simplest_rational_above(Rat(0), Rat(1, 2)) == Rat(1, 2));
  CHECK(simplest_rational_above(Rat(6, 5) - Rat(1, 1000000), Rat(6, 5)) == Rat(6, 5));
  // Bisection-style bracket around 22/7.
  Rat target(22, 7), lo = 3, hi = 4;
  for (int i = 0; i < 80; ++i) {
    Rat mid = (lo + hi) / 2;
    (target <= mid ? hi : lo) = mid;
  }
  CHECK(simplest_rational_above(lo, hi) == target);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(4) == 24);
}
