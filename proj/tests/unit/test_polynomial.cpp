#include "doctest.h"
#include "oracles.hpp"

#include "twistlab/polynomial.hpp"
#include "twistlab/thurston_rep.hpp"

using namespace twistlab;

TEST_SUITE("polynomial") {

TEST_CASE("arithmetic and printing") {
  const Poly p{-1, 0, 1};  // x^2 - 1
  const Poly q{1, 1};
  CHECK(p.degree() == 2);
  CHECK(exact_div(p, q) == Poly{-1, 1});
  CHECK_THROWS(exact_div(p, Poly{1, 2}));
  CHECK((q * q) == Poly{1, 2, 1});
  CHECK(p.substitute_square() == Poly{-1, 0, 0, 0, 1});
  CHECK(Poly{0, 0}.is_zero());
  CHECK(Poly{3, 0, 1}.derivative() == Poly{0, 2});
  CHECK(Poly{1, -1, 0, 3}.str("s") == "1 - s + 3*s^3");
}

TEST_CASE("gcd and square-free part") {
  const Poly a = Poly{-1, 1} * Poly{-1, 1} * Poly{2, 1};
  const Poly b = Poly{-1, 1} * Poly{3, 1};
  CHECK(gcd(a, b) == Poly{-1, 1});
  CHECK(square_free(a) == Poly{-1, 1} * Poly{2, 1});
  CHECK(content(Poly{4, 6, 8}) == 2);
  CHECK(primitive_part(Poly{-4, -6}) == Poly{2, 3});
}

TEST_CASE("Sturm counts") {
  // (x-1)(x-2)(x+3)
  const Poly p = Poly{-1, 1} * Poly{-2, 1} * Poly{3, 1};
  const SturmSequence s(p);
  CHECK(s.count(-10, 10) == 3);
  CHECK(s.count(0, 10) == 2);
  CHECK(s.count(Rational(3, 2), 2) == 1);
  CHECK(s.count(-2, 0) == 0);
  CHECK(SturmSequence(Poly{1, 0, 1}).count(-100, 100) == 0);
  CHECK(root_bound(p) > 3);
}

TEST_CASE("largest root") {
  AlgebraicReal r = AlgebraicReal::largest_root(Poly{-2, 0, 1});
  r.refine_to(Rational(1, 1000000));
  CHECK(r.interval().lo * r.interval().lo <= 2);
  CHECK(r.interval().hi * r.interval().hi >= 2);
  CHECK(r.interval().lo > 1);

  AlgebraicReal exact = AlgebraicReal::largest_root(Poly{-6, 11, -6, 1});
  exact.refine_to(Rational(1, 1000));
  CHECK(exact.interval().contains(3));
  CHECK(exact.sign_at(Poly{-3, 1}) == 0);
  CHECK(exact.sign_at(Poly{-2, 1}) > 0);
  CHECK_THROWS(AlgebraicReal::largest_root(Poly{1, 0, 1}));
}

TEST_CASE("sign of a polynomial at an algebraic number") {
  AlgebraicReal s = AlgebraicReal::largest_root(Poly{-5, 0, 1});  // sqrt 5
  CHECK(s.sign_at(Poly{-4, 0, 1}) > 0);
  CHECK(s.sign_at(Poly{-5, 0, 1}) == 0);
  CHECK(s.sign_at(Poly{-9, 4}) < 0);  // 4 sqrt5 - 9 < 0 (sqrt5 < 2.25)
  const Interval e = s.eval_enclosure(Poly{0, 0, 1}, Rational(1, 1 << 20));
  CHECK(e.contains(5));
}

TEST_CASE("characteristic polynomial against Faddeev-LeVerrier") {
  CHECK(characteristic_polynomial({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == Poly{-4, 10, -6, 1});
  auto g = oracle::rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(g, 1, 5));
    std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n));
    for (auto& row : A)
      for (auto& x : row) x = oracle::uniform(g, -6, 6);
    const Poly p = characteristic_polynomial(A);
    const auto ref = oracle::char_poly(A);
    REQUIRE(p.degree() == static_cast<int>(n));
    for (std::size_t k = 0; k <= n; ++k) CHECK(Rational(p.coeff(k)) == ref[k]);
  }
}

}
