#include <doctest.h>

#include <random>
#include <unordered_set>

#include "powerindex/errors.hpp"
#include "powerindex/rational.hpp"

using powerindex::BigInt;
using powerindex::Rational;

TEST_SUITE("rational") {
  TEST_CASE("parse and render in lowest terms") {
    CHECK(Rational::parse("6/8").to_string() == "3/4");
    CHECK(Rational::parse("4/2").to_string() == "2");
    CHECK(Rational::parse("-3/9").to_string() == "-1/3");
    CHECK(Rational::parse("0").to_string() == "0");
    CHECK(Rational::parse("+5").to_string() == "5");
  }

  TEST_CASE("malformed text is rejected") {
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1//2", "1/-2", " 1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(Rational::parse(bad), powerindex::InvalidInput);
    }
    CHECK_THROWS_AS(Rational(1, 0), powerindex::InvalidInput);
  }

  TEST_CASE("round trip is stable") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 500; ++i) {
      const Rational r(num(rng), den(rng));
      CHECK(Rational::parse(r.to_string()) == r);
      CHECK(Rational::parse(r.to_string()).to_string() == r.to_string());
    }
  }

  TEST_CASE("arithmetic and ordering") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(b < a);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(2, 5).reciprocal() == Rational(5, 2));
    CHECK(Rational(4, 2).is_integer());
  }

  TEST_CASE("large values stay exact") {
    const BigInt big = powerindex::factorial(30);
    const Rational r(big, big + 1);
    CHECK(r.denominator() == big + 1);
    CHECK(Rational(1) - r == Rational(BigInt(1), big + 1));
  }

  TEST_CASE("combinatorial helpers") {
    CHECK(powerindex::factorial(0) == 1);
    CHECK(powerindex::factorial(5) == 120);
    CHECK(powerindex::binomial(5, 2) == 10);
    CHECK(powerindex::binomial(5, 6) == 0);
    CHECK(powerindex::binomial(5, -1) == 0);
    CHECK(powerindex::lcm(BigInt(4), BigInt(6)) == 12);
  }

  TEST_CASE("equal values hash equally") {
    std::unordered_set<Rational> seen{Rational(1, 2), Rational(2, 4), Rational(3, 6)};
    CHECK(seen.size() == 1);
  }
}
