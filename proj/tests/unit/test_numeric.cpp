#include "doctest.h"
#include "oracles.hpp"

#include "twistlab/numeric.hpp"

#include <cmath>

using namespace twistlab;

TEST_SUITE("numeric") {

TEST_CASE("floor and ceil round toward the right infinities") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor(Rational(-1, 3)) == -1);
  CHECK(ceil(Rational(-1, 3)) == 0);
  CHECK(ceil(Rational(5)) == 5);
}

TEST_CASE("extended gcd returns a Bezout pair") {
  auto g = oracle::rng();
  for (int i = 0; i < 200; ++i) {
    const BigInt a = oracle::uniform(g, -1000, 1000), b = oracle::uniform(g, -1000, 1000);
    const auto r = extended_gcd(a, b);
    CHECK(r.g >= 0);
    CHECK(a * r.x + b * r.y == r.g);
    CHECK(r.g == oracle::gcd64(a.convert_to<std::int64_t>(), b.convert_to<std::int64_t>()));
  }
}

TEST_CASE("decimal strings are exact") {
  CHECK(to_decimal_string(Rational(1, 8)) == "0.125");
  CHECK(to_decimal_string(Rational(-5, 2)) == "-2.5");
  CHECK(to_decimal_string(Rational(3)) == "3");
  CHECK(to_decimal_string(Rational(1, 3)) == "1/3");
  CHECK(to_decimal_string(Rational(-1, 20)) == "-0.05");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1e-9") == Rational(1, 1000000000));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1e"));
}

TEST_CASE("dyadic rounding is outward") {
  const Interval iv = round_outward({Rational(1, 3), Rational(2, 3)}, 4);
  CHECK(iv.lo <= Rational(1, 3));
  CHECK(iv.hi >= Rational(2, 3));
  CHECK(iv.lo == Rational(5, 16));
  CHECK(iv.hi == Rational(11, 16));
}

TEST_CASE("sqrt enclosure brackets the root") {
  for (int n : {2, 3, 5, 10, 117, 1000003}) {
    const Interval iv = sqrt_enclosure(Rational(n), 40);
    CHECK(iv.lo * iv.lo <= n);
    CHECK(iv.hi * iv.hi >= n);
    CHECK(iv.width() <= Rational(1, BigInt(1) << 40));
  }
  const Interval exact = sqrt_enclosure(Rational(9, 4), 10);
  CHECK(exact.is_point());
  CHECK(exact.lo == Rational(3, 2));
  CHECK_THROWS(sqrt_enclosure(Rational(-1), 4));
}

TEST_CASE("log enclosure contains a 50-digit reference value") {
  for (const Rational x : {Rational(2), Rational(1, 7), Rational(402), Rational(40403), Rational(3, 2),
                           Rational(BigInt(1) << 90)}) {
    const Interval iv = log_enclosure(x, 50);
    const oracle::Float50 ref = boost::multiprecision::log(oracle::Float50(x));
    CHECK(oracle::Float50(iv.lo) <= ref);
    CHECK(oracle::Float50(iv.hi) >= ref);
    CHECK(iv.width() <= Rational(1, BigInt(1) << 48));
  }
  const Interval zero = log_enclosure(Rational(1), 10);
  CHECK(zero.is_point());
  CHECK_THROWS(log_enclosure(Rational(0), 10));
}

TEST_CASE("interval arithmetic") {
  const Interval a{Rational(-1), Rational(2)}, b{Rational(3), Rational(4)};
  CHECK((a * b).lo == -4);
  CHECK((a * b).hi == 8);
  CHECK((a - b).lo == -5);
  CHECK((a - b).hi == -1);
  CHECK(abs(a).lo == 0);
  CHECK(abs(a).hi == 2);
  CHECK_THROWS(b / a);
  CHECK(bits_for(Rational(1, 1000)) == 10);
}

}
