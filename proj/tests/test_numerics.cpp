#include <doctest.h>

#include <random>

#include "bps/rational.hpp"

using bps::Int;
using bps::Rational;

TEST_CASE("ceil_div") {
  CHECK(bps::ceil_div(7, 2) == 4);
  CHECK(bps::ceil_div(6, 3) == 2);
  CHECK(bps::ceil_div(21318, 19) == 1122);
  CHECK(bps::ceil_div(0, 5) == 0);
  CHECK(bps::ceil_div(-7, 2) == -3);
  CHECK_THROWS_AS(bps::ceil_div(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(bps::ceil_div(1, -2), std::invalid_argument);
}

TEST_CASE("ceil_div sandwich property") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> da(-1000, 1000), db(1, 50);
  for (int i = 0; i < 2000; ++i) {
    Int a = da(rng), b = db(rng);
    Int q = bps::ceil_div(a, b);
    // q - 1 < a/b <= q
    CHECK(Rational(q - 1) < Rational(a, b));
    CHECK(Rational(a, b) <= Rational(q));
  }
}

TEST_CASE("floor_scale") {
  CHECK(bps::floor_scale(Rational(1, 2), 23) == 11);
  CHECK(bps::floor_scale(Rational(18, 19), 23) == 21);
  CHECK(bps::floor_scale(Rational(0, 1), 7) == 0);
  CHECK(bps::floor_scale(Rational(-1, 2), 3) == -2);
  CHECK_THROWS_AS(bps::floor_scale(Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("floor_scale sandwich property") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long long> dn(-500, 500), dd(1, 60), ds(1, 40);
  for (int i = 0; i < 2000; ++i) {
    Rational r(dn(rng), dd(rng));
    Int n = ds(rng);
    Int f = bps::floor_scale(r, n);
    CHECK(Rational(f, n) <= r);
    CHECK(r < Rational(f + 1, n));
  }
}

TEST_CASE("lcm_list") {
  CHECK(bps::lcm_list({2, 3, 11, 17, 19}) == 21318);
  CHECK(bps::lcm_list({2, 3, 11, 17, 25}) == 28050);
  CHECK(bps::lcm_list({2, 2, 2}) == 2);
  CHECK(bps::lcm_list({6, 10, 15}) == 30);
  CHECK_THROWS_AS(bps::lcm_list(std::vector<long long>{}), std::invalid_argument);
  CHECK_THROWS_AS(bps::lcm_list({2, 0}), std::invalid_argument);
}

TEST_CASE("lcm_list large values stay exact") {
  // 2^40 and 3^25 are coprime, lcm is the product
  Int a = Int(1) << 40;
  Int b = 1;
  for (int i = 0; i < 25; ++i) b *= 3;
  std::vector<Int> v{a, b};
  CHECK(bps::lcm_list(std::span<const Int>(v)) == a * b);
}

TEST_CASE("Rational normalization and ordering") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(10, 11).str() == "10/11");
  CHECK(Rational(4).str() == "4/1");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("Rational parse") {
  CHECK(Rational::parse("10/11") == Rational(10, 11));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK_THROWS_AS(Rational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("Rational arithmetic round-trips") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long long> dn(-40, 40), dd(1, 40);
  for (int i = 0; i < 3000; ++i) {
    Rational a(dn(rng), dd(rng)), b(dn(rng), dd(rng));
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
