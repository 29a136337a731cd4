#include <doctest.h>

#include "rigidline/error.hpp"
#include "rigidline/rational.hpp"

using namespace rigidline;

TEST_CASE("parse integers, fractions and finite decimals exactly") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.1") == Rational(-1, 10));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2.") == Rational(2));
}

TEST_CASE("rejects anything that would need rounding") {
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1e5"), Error);
  CHECK_THROWS_AS(parse_rational("0.333..."), Error);
  CHECK_THROWS_AS(parse_rational("pi"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
  CHECK_THROWS_AS(parse_rational("--3"), Error);
}

TEST_CASE("canonical string form round-trips") {
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(parse_rational(to_string(Rational(22, 7))) == Rational(22, 7));
}

TEST_CASE("rational square roots") {
  Rational root;
  CHECK(rational_sqrt(Rational(25, 16), root));
  CHECK(root == Rational(5, 4));
  CHECK(rational_sqrt(Rational(0), root));
  CHECK(root == 0);
  CHECK(!rational_sqrt(Rational(2), root));
  CHECK(!rational_sqrt(Rational(-4), root));
  // (1+t^2)^2 for t = -1/2: the pythagorean projection norm
  Rational t(-1, 2);
  Rational norm_sq = (1 - t * t) * (1 - t * t) + 4 * t * t;
  CHECK(rational_sqrt(norm_sq, root));
  CHECK(root == Rational(5, 4));
}
