#include "twistlab/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistlab {

namespace mp = boost::multiprecision;

namespace {

int sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Divides by the positive content, keeping the sign of every coefficient.
Poly reduce_content(const Poly& p) {
  if (p.is_zero()) return p;
  const BigInt c = content(p);
  std::vector<BigInt> out = p.coeffs();
  for (auto& v : out) v /= c;
  return Poly(std::move(out));
}

// sign of p(n/d) for d > 0, via the homogenized integer value.
int sign_at_rational(const Poly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const BigInt n = mp::numerator(x);
  const BigInt d = mp::denominator(x);
  BigInt acc = 0;
  BigInt dpow = 1;
  // sum c_i n^i d^(deg-i), Horner in n with d powers
  acc = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= d;
    acc = acc * n + p.coeff(static_cast<std::size_t>(i)) * dpow;
  }
  return sign(acc);
}

}  // namespace

Poly::Poly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt Poly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval Poly::eval(const Interval& x) const {
  Interval acc{Rational(0), Rational(0)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * i;
  return Poly(std::move(out));
}

Poly Poly::substitute_square() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(2 * c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt mag = mp::abs(c_[i]);
    if (out.empty()) {
      if (c_[i] < 0) out += "-";
    } else {
      out += c_[i] < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(out));
}

Poly operator*(const BigInt& k, const Poly& a) { return Poly::constant(k) * a; }

BigInt content(const Poly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = mp::gcd(g, c);
  return mp::abs(g);
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Poly out = reduce_content(p);
  return out.leading() < 0 ? -out : out;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("inexact polynomial division");
  }
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigInt(0));
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + db];
    if (top % b.leading() != 0) throw std::domain_error("inexact polynomial division");
    const BigInt q = top / b.leading();
    quot[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(quot));
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo remainder by zero");
  if (a.degree() < b.degree()) return a;
  int delta = a.degree() - b.degree() + 1;
  const int k = delta;
  const BigInt& lb = b.leading();
  Poly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly t = Poly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree())) * b;
    r = lb * r - t;
    --delta;
  }
  if (delta > 0) r = mp::pow(lb, static_cast<unsigned>(delta)) * r;
  if (lb < 0 && k % 2 == 1) r = -r;
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

Poly square_free(const Poly& p) {
  if (p.degree() < 1) return primitive_part(p);
  Poly g = gcd(p, p.derivative());
  return primitive_part(exact_div(primitive_part(p), g));
}

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) return;
  seq_.push_back(reduce_content(p));
  Poly d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(reduce_content(d));
  while (true) {
    Poly r = -pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(reduce_content(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    const int s = sign_at_rational(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

BigInt root_bound(const Poly& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  const BigInt lead = mp::abs(p.leading());
  for (int i = 0; i < p.degree(); ++i)
    m = std::max(m, Rational(mp::abs(p.coeff(static_cast<std::size_t>(i))), lead));
  return ceil(m) + 1;
}

AlgebraicReal::AlgebraicReal(Poly p, Rational lo, Rational hi)
    : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicReal AlgebraicReal::largest_root(const Poly& p) {
  Poly q = square_free(p);
  if (q.degree() < 1) throw std::domain_error("polynomial has no roots");
  const SturmSequence sturm(q);
  const BigInt R = root_bound(q);
  Rational lo = -Rational(R), hi = Rational(R);
  if (sturm.count(lo, hi) == 0) throw std::domain_error("polynomial has no real roots");
  while (sturm.count(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (q.eval(hi) == 0) lo = hi;
  return AlgebraicReal(std::move(q), lo, hi);
}

void AlgebraicReal::bisect() {
  if (is_exact()) return;
  const Rational mid = (lo_ + hi_) / 2;
  const int sm = sign_at_rational(poly_, mid);
  const int sh = sign_at_rational(poly_, hi_);
  if (sm == 0) {
    lo_ = hi_ = mid;
  } else if (sh == 0) {
    lo_ = hi_;
  } else if (sm != sh) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void AlgebraicReal::refine_to(const Rational& width) {
  while (!is_exact() && hi_ - lo_ > width) bisect();
}

int AlgebraicReal::sign_at(const Poly& g) {
  if (g.is_zero()) return 0;
  if (is_exact()) return sign(g.eval(lo_));
  const Poly h = gcd(g, poly_);
  if (h.degree() >= 1 && SturmSequence(h).count(lo_, hi_) >= 1) return 0;
  const SturmSequence sg(square_free(g));
  while (!is_exact() && sg.count(lo_, hi_) > 0) bisect();
  return sign(g.eval(is_exact() ? lo_ : hi_));
}

Interval AlgebraicReal::eval_enclosure(const Poly& g, const Rational& width) {
  while (true) {
    Interval iv = g.eval(interval());
    if (is_exact() || iv.width() <= width) return iv;
    bisect();
  }
}

}  // namespace twistlab
