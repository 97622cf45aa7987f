#include "twistlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace twistlab {

namespace mp = boost::multiprecision;

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) {
    Rational p = a.lo * b.lo;
    return {p, p};
  }
  const Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval containing 0");
  return a * Interval{Rational(1) / b.hi, Rational(1) / b.lo};
}

Interval abs(const Interval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return {-a.hi, -a.lo};
  return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("floor_div by zero");
  BigInt q = num / den;
  if (q * den != num && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt floor(const Rational& x) { return floor_div(mp::numerator(x), mp::denominator(x)); }

BigInt ceil(const Rational& x) { return -floor_div(-mp::numerator(x), mp::denominator(x)); }

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Rational dyadic_floor(const Rational& x, unsigned bits) {
  BigInt scale = BigInt(1) << bits;
  return Rational(floor(x * scale), scale);
}

Rational dyadic_ceil(const Rational& x, unsigned bits) {
  BigInt scale = BigInt(1) << bits;
  return Rational(ceil(x * scale), scale);
}

Interval round_outward(const Interval& iv, unsigned bits) {
  return {dyadic_floor(iv.lo, bits), dyadic_ceil(iv.hi, bits)};
}

std::string to_decimal_string(const Rational& x) {
  BigInt num = mp::numerator(x);
  BigInt den = mp::denominator(x);
  unsigned twos = 0, fives = 0;
  BigInt rest = den;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  const unsigned digits = std::max(twos, fives);
  BigInt ten_pow = mp::pow(BigInt(10), digits);
  BigInt scaled = num * (ten_pow / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return negative ? "-" + s : s;
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational n = parse_rational(text.substr(0, slash));
    Rational d = parse_rational(text.substr(slash + 1));
    if (d == 0) fail();
    return n / d;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  BigInt mantissa = 0;
  int scale = 0;
  bool any_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      any_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') fail();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i == text.size()) fail();
    int exponent = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || exponent > 100000) fail();
      exponent = exponent * 10 + (text[i] - '0');
    }
    scale += exp_negative ? -exponent : exponent;
  }
  Rational value(mantissa);
  if (scale > 0) value *= mp::pow(BigInt(10), static_cast<unsigned>(scale));
  if (scale < 0) value /= mp::pow(BigInt(10), static_cast<unsigned>(-scale));
  return negative ? -value : value;
}

Interval sqrt_enclosure(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of a negative number");
  BigInt scale = BigInt(1) << bits;
  BigInt root = mp::sqrt(floor(x * scale * scale));
  Rational lo(root, scale);
  if (lo * lo == x) return {lo, lo};
  return {lo, Rational(root + 1, scale)};
}

Interval sqrt_enclosure(const Interval& x, unsigned bits) {
  return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

namespace {

// atanh(z) for 0 <= z <= 1/3, enclosed with the geometric tail bound.
Interval atanh_series(const Rational& z, unsigned terms) {
  const Rational z2 = z * z;
  Rational power = z;
  Rational sum = 0;
  for (unsigned j = 0; j < terms; ++j) {
    sum += power / (2 * j + 1);
    power *= z2;
  }
  Rational tail = power / ((2 * terms + 1) * (1 - z2));
  return {sum, sum + tail};
}

unsigned msb(const BigInt& v) { return static_cast<unsigned>(mp::msb(v)); }

}  // namespace

Interval log_enclosure(const Rational& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("log of a nonpositive number");
  if (x == 1) return {Rational(0), Rational(0)};
  if (x < 1) {
    Interval inv = log_enclosure(Rational(1) / x, bits);
    return {-inv.hi, -inv.lo};
  }
  const unsigned k = msb(floor(x));
  const Rational y = x / Rational(BigInt(1) << k);
  const Rational z = (y - 1) / (y + 1);
  // 3^-(2N+1) * (k + 2) * 2 <= 2^-(bits + 3)
  const unsigned extra = msb(BigInt(k + 2)) + 1;
  const unsigned terms = (bits + 5 + extra) / 3 + 2;
  Interval ln2 = atanh_series(Rational(1, 3), terms);
  ln2 = {2 * ln2.lo, 2 * ln2.hi};
  Interval ln_y = atanh_series(z, terms);
  ln_y = {2 * ln_y.lo, 2 * ln_y.hi};
  Interval result{Rational(k) * ln2.lo + ln_y.lo, Rational(k) * ln2.hi + ln_y.hi};
  return round_outward(result, bits + 2);
}

Interval log_enclosure(const Interval& x, unsigned bits) {
  return {log_enclosure(x.lo, bits).lo, log_enclosure(x.hi, bits).hi};
}

unsigned bits_for(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("precision must be positive");
  unsigned b = 0;
  while (Rational(1, BigInt(1) << b) > eps) ++b;
  return b;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace twistlab
