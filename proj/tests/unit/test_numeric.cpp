#include <doctest.h>

#include "pmx/numeric.hpp"

using pmx::Rational;

TEST_CASE("parse_rational reads decimals, exponents and fractions exactly") {
  CHECK(pmx::parse_rational("12") == Rational(12));
  CHECK(pmx::parse_rational("-0.25") == Rational(-1, 4));
  CHECK(pmx::parse_rational("+.5") == Rational(1, 2));
  CHECK(pmx::parse_rational("3.") == Rational(3));
  CHECK(pmx::parse_rational("1.5e3") == Rational(1500));
  CHECK(pmx::parse_rational("25E-2") == Rational(1, 4));
  CHECK(pmx::parse_rational("15/4") == Rational(15, 4));
  CHECK(pmx::parse_rational(" 0.1 ") == Rational(1, 10));
  CHECK(pmx::parse_rational("0.1") != Rational(0.1));  // the double is not 1/10
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "-", ".", "1.2.3", "abc", "1e", "1/0", "0x10", "1,5", "nan"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(pmx::parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("format_decimal is exact and parses back") {
  CHECK(pmx::format_decimal(Rational(15, 4)) == "3.75");
  CHECK(pmx::format_decimal(Rational(-1, 8)) == "-0.125");
  CHECK(pmx::format_decimal(Rational(7)) == "7");
  CHECK(pmx::format_decimal(Rational(1, 3)) == "1/3");
  CHECK(pmx::format_decimal(Rational(1, 20)) == "0.05");
  for (Rational v : {Rational(15, 4), Rational(-1, 8), Rational(1, 3), Rational(123456789, 1000),
                     Rational(-22, 7), Rational(0)}) {
    CHECK(pmx::parse_rational(pmx::format_decimal(v)) == v);
    CHECK(pmx::parse_rational(pmx::format_fraction(v)) == v);
  }
}

TEST_CASE("float comparisons are inclusive within tolerance") {
  pmx::Tolerance tol{1e-9};
  CHECK(pmx::approx_ge(1.0, 1.0 + 5e-10, tol));
  CHECK_FALSE(pmx::approx_ge(1.0, 1.0 + 5e-9, tol));
  CHECK(pmx::approx_eq(0.1 + 0.2, 0.3, tol));
  CHECK(pmx::definitely_lt(1.0, 1.1, tol));
  CHECK_FALSE(pmx::definitely_lt(1.0, 1.0 + 1e-12, tol));
  CHECK(pmx::is_zero(1e-12, tol));
  CHECK_FALSE(pmx::approx_ge(Rational(1), Rational(1) + Rational(1, 1000000000000LL)));
}

TEST_CASE("format_number drops negative zero") {
  CHECK(pmx::format_number(-0.0) == "0");
  CHECK(pmx::format_number(3.75) == "3.75");
}
