#pragma once

// Exact integer / rational arithmetic shared by every module, plus certified
// rational enclosures (square roots, natural logarithms).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace twistlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Division by an interval that does not contain zero.
Interval operator/(const Interval& a, const Interval& b);
Interval abs(const Interval& a);

/// Floor of num/den for den != 0.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  BigInt g, x, y;
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

/// Dyadic rationals k / 2^bits bracketing x from below / above.
Rational dyadic_floor(const Rational& x, unsigned bits);
Rational dyadic_ceil(const Rational& x, unsigned bits);
Interval round_outward(const Interval& iv, unsigned bits);

/// Exact decimal expansion when the denominator has only the prime factors 2
/// and 5 (always the case for dyadic endpoints); "p/q" otherwise.
std::string to_decimal_string(const Rational& x);

/// Parses "12", "-3/4", "1e-9", "0.125", "2.5e3". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Enclosure of sqrt(x) for x >= 0, width <= 2^-bits.
Interval sqrt_enclosure(const Rational& x, unsigned bits);
/// Enclosure of sqrt over an interval with nonnegative lower end.
Interval sqrt_enclosure(const Interval& x, unsigned bits);

/// Enclosure of ln(x) for x > 0, width <= 2^-bits (plus nothing else: the
/// atanh series tail is bounded explicitly).
Interval log_enclosure(const Rational& x, unsigned bits);
/// ln over an interval with positive lower end: [ln lo, ln hi] rounded outward.
Interval log_enclosure(const Interval& x, unsigned bits);

/// Bits needed so that 2^-bits <= eps (eps > 0).
unsigned bits_for(const Rational& eps);

double to_double(const Rational& x);

}  // namespace twistlab
