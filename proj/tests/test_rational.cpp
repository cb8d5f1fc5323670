#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filiform/rational.hpp"

using filiform::Rational;

TEST_CASE("construction is canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(6, -4).numerator() == -3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  const Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(a - a == Rational(0));
  CHECK((a - a).is_zero());
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(7).is_integer());
  CHECK(!a.is_integer());
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(5, 3) > Rational(1));
}

TEST_CASE("string round trips") {
  CHECK(Rational::from_string("3/4") == Rational(3, 4));
  CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
  CHECK(Rational::from_string("17") == Rational(17));
  CHECK(Rational::from_string("0") == Rational(0));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK_THROWS_AS(Rational::from_string("a/4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
}

TEST_CASE("powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(0).pow(5) == Rational(0));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("exact nth roots") {
  CHECK(Rational(4).nth_root(2) == Rational(2));
  CHECK(Rational(8, 27).nth_root(3) == Rational(2, 3));
  CHECK(Rational(-8).nth_root(3) == Rational(-2));
  CHECK(Rational(1, 16).nth_root(4) == Rational(1, 2));
  CHECK(Rational(0).nth_root(2) == Rational(0));
  CHECK(Rational(5, 7).nth_root(1) == Rational(5, 7));
  CHECK(!Rational(2).nth_root(2).has_value());
  CHECK(!Rational(-4).nth_root(2).has_value());
  CHECK(!Rational(4, 9).nth_root(3).has_value());
  CHECK(!Rational(6).nth_root(3).has_value());
  CHECK_THROWS_AS(Rational(4).nth_root(0), std::domain_error);
}

TEST_CASE("binomials and factorials") {
  CHECK(filiform::binomial(5, 2) == Rational(10));
  CHECK(filiform::binomial(5, 0) == Rational(1));
  CHECK(filiform::binomial(3, 5) == Rational(0));
  CHECK(filiform::factorial(0) == Rational(1));
  CHECK(filiform::factorial(5) == Rational(120));
}

TEST_CASE("big values stay exact") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  Rational inv = Rational(1) / big;
  CHECK(big * inv == Rational(1));
  CHECK(big.pow(2).nth_root(2) == big);
}
