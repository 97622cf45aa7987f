#pragma once

// Univariate integer polynomials and real algebraic numbers given by an
// isolating interval.

#include "twistlab/numeric.hpp"

#include <string>
#include <vector>

namespace twistlab {

/// Integer-coefficient polynomial, coefficients stored low degree first with
/// no trailing zeros (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long long> coeffs);
  explicit Poly(std::vector<BigInt> coeffs);
  static Poly constant(const BigInt& c);
  static Poly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  BigInt eval(const BigInt& x) const;
  /// Interval Horner evaluation; encloses the range over x.
  Interval eval(const Interval& x) const;

  Poly derivative() const;
  /// p(x^2)
  Poly substitute_square() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;

  bool operator==(const Poly&) const = default;

  /// e.g. "1 - s^2 + 3*s^3"
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const BigInt& k, const Poly& a);

BigInt content(const Poly& p);
/// p / content(p) with positive leading coefficient.
Poly primitive_part(const Poly& p);
/// Exact quotient a / b in Z[x]; throws std::domain_error if b does not
/// divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Remainder of |lc(b)|^(deg a - deg b + 1) * a by b (sign-preserving).
Poly pseudo_remainder(const Poly& a, const Poly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), primitive.
Poly square_free(const Poly& p);

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);
  /// Number of distinct roots in (a, b], a < b.
  int count(const Rational& a, const Rational& b) const;
  int variations(const Rational& x) const;

 private:
  std::vector<Poly> seq_;
};

/// Cauchy bound: every real root lies in (-R, R).
BigInt root_bound(const Poly& p);

/// A real root of an integer polynomial, kept as a square-free defining
/// polynomial plus an interval (lo, hi] containing exactly that root (or the
/// exact rational root when lo == hi).
class AlgebraicReal {
 public:
  /// Largest real root of p. Throws std::domain_error if p has none.
  static AlgebraicReal largest_root(const Poly& p);

  const Poly& poly() const { return poly_; }
  Interval interval() const { return {lo_, hi_}; }
  bool is_exact() const { return lo_ == hi_; }

  /// Halves the interval (or finds the root exactly).
  void bisect();
  void refine_to(const Rational& width);

  /// Exact sign of g at this number.
  int sign_at(const Poly& g);

  /// Enclosure of g at this number with width <= width (g nonconstant allowed).
  Interval eval_enclosure(const Poly& g, const Rational& width);

 private:
  AlgebraicReal(Poly p, Rational lo, Rational hi);
  Poly poly_;
  Rational lo_, hi_;
};

}  // namespace twistlab
