#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "utp/poly.hpp"
#include "utp/rational.hpp"

using utp::Poly;
using utp::Rational;

TEST_CASE("rational normalisation and arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(3, 2) + Rational(5, 2) == Rational(4));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational string round trip") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("poly canonical form strips trailing zeros") {
  Poly p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.coeffs().size() == 1);
  CHECK(Poly({Rational(0)}).is_zero());
  CHECK(Poly() == Poly({Rational(0), Rational(0)}));
}

TEST_CASE("poly evaluation") {
  // 2 - t + 3t^2 at t = 1/2 -> 2 - 1/2 + 3/4 = 9/4
  Poly p({Rational(2), Rational(-1), Rational(3)});
  CHECK(p.eval(Rational(1, 2)) == Rational(9, 4));
  CHECK(p.eval(Rational(0)) == Rational(2));
  CHECK(Poly().eval(Rational(5)) == Rational(0));
}

TEST_CASE("poly origin shift is exact composition") {
  // p(t) = t^2, p(t + 3/2) = 9/4 + 3t + t^2
  Poly p({Rational(0), Rational(0), Rational(1)});
  Poly q = p.shift_origin(Rational(3, 2));
  CHECK(q == Poly({Rational(9, 4), Rational(3), Rational(1)}));
  // shifting there and back is the identity
  CHECK(q.shift_origin(Rational(-3, 2)) == p);
  // pointwise agreement on several rationals
  for (int i = -4; i <= 4; ++i) {
    Rational t(i, 3);
    CHECK(q.eval(t) == p.eval(t + Rational(3, 2)));
  }
}
