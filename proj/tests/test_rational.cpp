#include <doctest.h>

#include <limits>
#include <random>
#include <sstream>

#include "csn/rational.hpp"

using csn::Rational;

TEST_CASE("rational normalises sign and common factors") {
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(3, -6).num() == -1);
  CHECK(Rational(3, -6).den() == 2);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  Rational acc;
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  CHECK(acc == Rational(1));
}

TEST_CASE("rational ordering and min/max") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(csn::min(Rational(3), Rational(5, 2)) == Rational(5, 2));
  CHECK(csn::max(Rational(3), Rational(5, 2)) == Rational(3));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(-7, 2).sign() == -1);
}

TEST_CASE("rational text forms") {
  CHECK(Rational(6).str() == "6");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse(""));
  std::ostringstream os;
  os << Rational(5, 3);
  CHECK(os.str() == "5/3");
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(6).decimal(6) == "6.000000");
  CHECK(Rational(1, 3).decimal(6) == "0.333333");
  CHECK(Rational(2, 3).decimal(6) == "0.666667");
  CHECK(Rational(-2, 3).decimal(6) == "-0.666667");
  CHECK(Rational(1, 8).decimal(2) == "0.13");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(5, 2).decimal(0) == "3");
}

TEST_CASE("rational overflow is detected rather than wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
  // Cross-cancellation keeps this representable.
  CHECK(big * Rational(1, 2) / Rational(1, 2) == big);
}

TEST_CASE("property: field axioms on random small rationals") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int t = 0; t < 500; ++t) {
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const Rational c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(std::gcd(a.num(), a.den()) == 1);
    CHECK(a.den() > 0);
  }
}
