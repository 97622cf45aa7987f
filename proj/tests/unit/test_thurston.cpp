#include "doctest.h"
#include "oracles.hpp"

#include "twistlab/errors.hpp"
#include "twistlab/thurston_rep.hpp"

using namespace twistlab;

namespace {

IntersectionMatrix N1() { return {{{1}}}; }

TwistWord ab_word(std::mt19937_64& g, int pairs, int max_exp) {
  std::vector<Syllable> s;
  for (int i = 0; i < pairs; ++i) {
    for (const char* letter : {"A", "B"}) {
      Exponent e = 0;
      while (e == 0) e = oracle::uniform(g, -max_exp, max_exp);
      s.push_back({letter, e});
    }
  }
  return TwistWord(std::move(s));
}

oracle::Mat integer_image(const TwistWord& w) {
  oracle::Mat m;
  for (const auto& s : w.syllables())
    m = oracle::mul(m, s.curve == "A" ? oracle::upper_power(s.exponent) : oracle::lower_power(s.exponent));
  return m;
}

}  // namespace

TEST_SUITE("thurston") {

TEST_CASE("Perron eigenvalue") {
  auto mu = [](IntersectionMatrix N) {
    AlgebraicReal r = perron_eigenvalue(N);
    r.refine_to(Rational(1, 1 << 20));
    return r.interval();
  };
  CHECK(mu(N1()).contains(1));
  CHECK(mu({{{1, 1}, {1, 1}}}).contains(4));
  CHECK(mu({{{2}}}).contains(4));
  const Interval golden = mu({{{1, 1}, {0, 1}}});  // (3 + sqrt 5) / 2
  CHECK(golden.lo < Rational(2618034, 1000000));
  CHECK(golden.hi > Rational(2618033, 1000000));
  CHECK_THROWS_AS(perron_eigenvalue({{{1, 0}, {0, 0}}}), Error);
  CHECK_THROWS_AS(perron_eigenvalue({{{1, 1}, {1}}}), Error);
  CHECK_THROWS_AS(perron_eigenvalue({{{-1}}}), Error);
}

TEST_CASE("representation") {
  const Poly s{0, 1};
  const RepMatrix ta = represent(TwistWord::parse("A"));
  CHECK(ta.a == Poly{1});
  CHECK(ta.b == s);
  CHECK(ta.c.is_zero());
  const RepMatrix tab = represent(TwistWord::parse("A B"));
  CHECK(tab.a == Poly{1, 0, -1});
  CHECK(tab.b == s);
  CHECK(tab.c == Poly{0, -1});
  CHECK(tab.d == Poly{1});
  CHECK(represent(TwistWord()) == RepMatrix::identity());
  CHECK_THROWS_AS(represent(TwistWord::parse("A C")), Error);
  CHECK(represent(TwistWord::parse("x^2 y^-1"), "x", "y") == represent(TwistWord::parse("A^2 B^-1")));
}

TEST_CASE("homomorphism, determinant one, inverses") {
  auto g = oracle::rng(3);
  for (int i = 0; i < 50; ++i) {
    const TwistWord u = ab_word(g, 2, 4), v = ab_word(g, 1, 4);
    CHECK(represent(u.concat(v)) == represent(u) * represent(v));
    CHECK(represent(u).det() == Poly{1});
    CHECK(represent(u.concat(u.inverse())) == RepMatrix::identity());
  }
}

TEST_CASE("at s = 1 the image is the integer matrix product") {
  auto g = oracle::rng(5);
  for (int i = 0; i < 100; ++i) {
    const TwistWord w = ab_word(g, static_cast<int>(oracle::uniform(g, 1, 4)), 5);
    const auto v = represent(w).evaluate(1);
    const oracle::Mat m = integer_image(w);
    CHECK(v == std::vector<BigInt>{m.a, m.b, m.c, m.d});
  }
}

TEST_CASE("classification") {
  {
    auto p = thurston_parameter(N1());
    CHECK(classify(represent(TwistWord::parse("A B^-1")), p.s) == TraceClass::Hyperbolic);
    CHECK(classify(represent(TwistWord::parse("A")), p.s) == TraceClass::Parabolic);
    CHECK(classify(represent(TwistWord::parse("A B")), p.s) == TraceClass::Elliptic);
  }
  {
    auto p = thurston_parameter({{{2}}});
    CHECK(classify(represent(TwistWord::parse("A B")), p.s) == TraceClass::Parabolic);
  }
}

TEST_CASE("stretch factors") {
  const Rational eps(1, 1000000000);
  const StretchFactor golden = stretch_factor(TwistWord::parse("A B^-1"), N1(), eps);
  CHECK(golden.lambda.lo >= Rational(2618033, 1000000));
  CHECK(golden.lambda.hi <= Rational(2618035, 1000000));
  CHECK(golden.lambda.width() <= eps);

  const StretchFactor big = stretch_factor(TwistWord::parse("A^3 B^-3"), N1(), eps);
  CHECK(big.trace.contains(11));
  const oracle::Float50 ref = (11 + boost::multiprecision::sqrt(oracle::Float50(117))) / 2;
  CHECK(oracle::Float50(big.lambda.lo) <= ref);
  CHECK(oracle::Float50(big.lambda.hi) >= ref);
  const oracle::Float50 logref = boost::multiprecision::log(ref);
  CHECK(oracle::Float50(big.log_lambda.lo) <= logref);
  CHECK(oracle::Float50(big.log_lambda.hi) >= logref);

  try {
    stretch_factor(TwistWord::parse("A B"), N1(), eps);
    FAIL("expected NotHyperbolic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHyperbolic);
  }
}

TEST_CASE("lambda of a random word matches a 50-digit oracle") {
  auto g = oracle::rng(9);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const TwistWord w = ab_word(g, static_cast<int>(oracle::uniform(g, 1, 3)), 4);
    const oracle::Mat m = integer_image(w);
    const BigInt tr = m.a + m.d;
    if (tr <= 2 && tr >= -2) continue;
    const StretchFactor sf = stretch_factor(w, N1(), Rational(1, 1000000000));
    const oracle::Float50 ref = oracle::dominant_eigenvalue(m);
    CHECK(oracle::Float50(sf.lambda.lo) <= ref);
    CHECK(oracle::Float50(sf.lambda.hi) >= ref);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("Penner shape") {
  const std::vector<CurveId> A{"a1", "a2"}, B{"b1", "b2"};
  CHECK(is_penner_word(TwistWord::parse("a1^2 b1^-1 a2^1 b2^-3"), A, B));
  CHECK_FALSE(is_penner_word(TwistWord::parse("a1^2 b1^1"), A, B));
  CHECK_FALSE(is_penner_word(TwistWord::parse("a1^2 b1^-1"), A, {"b1"}));
  CHECK_THROWS_AS(is_penner_word(TwistWord::parse("z^1"), A, B), Error);
}

}
