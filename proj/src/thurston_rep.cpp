#include "twistlab/thurston_rep.hpp"

#include "twistlab/errors.hpp"

#include <set>

namespace twistlab {

void IntersectionMatrix::check() const {
  if (entries.empty() || entries.front().empty())
    throw Error(ErrorKind::DegenerateMatrix, "empty intersection matrix");
  const std::size_t n = cols();
  std::vector<bool> col_hit(n, false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != n) throw Error(ErrorKind::DegenerateMatrix, "ragged intersection matrix");
    bool row_hit = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (entries[i][j] < 0) throw Error(ErrorKind::DegenerateMatrix, "negative intersection number");
      if (entries[i][j] > 0) row_hit = col_hit[j] = true;
    }
    if (!row_hit) throw Error(ErrorKind::DegenerateMatrix, "row " + std::to_string(i) + " is all zero");
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!col_hit[j]) throw Error(ErrorKind::DegenerateMatrix, "column " + std::to_string(j) + " is all zero");
}

std::vector<std::vector<BigInt>> IntersectionMatrix::gram() const {
  const std::size_t m = rows(), n = cols();
  std::vector<std::vector<BigInt>> g(m, std::vector<BigInt>(m, BigInt(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j) g[i][k] += BigInt(entries[i][j]) * entries[k][j];
  return g;
}

Poly characteristic_polynomial(const std::vector<std::vector<BigInt>>& A) {
  const std::size_t n = A.size();
  if (n == 0) return Poly{1};
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Poly(std::vector<BigInt>{-A[i][j], 1}) : Poly::constant(-A[i][j]);
  // Leading principal minors of xI - A are monic, so pivots never vanish and
  // every division is exact.
  Poly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

AlgebraicReal perron_eigenvalue(const IntersectionMatrix& N) {
  N.check();
  return AlgebraicReal::largest_root(characteristic_polynomial(N.gram()));
}

ThurstonParameter thurston_parameter(const IntersectionMatrix& N) {
  AlgebraicReal mu = perron_eigenvalue(N);
  AlgebraicReal s = AlgebraicReal::largest_root(mu.poly().substitute_square());
  return {std::move(mu), std::move(s)};
}

std::vector<BigInt> RepMatrix::evaluate(const BigInt& s) const {
  return {a.eval(s), b.eval(s), c.eval(s), d.eval(s)};
}

RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

RepMatrix generator_image(bool is_A, Exponent e) {
  RepMatrix m;
  if (is_A) {
    m.b = Poly::monomial(BigInt(e), 1);
  } else {
    m.c = Poly::monomial(BigInt(-e), 1);
  }
  return m;
}

RepMatrix represent(const TwistWord& word, const std::string& a_letter, const std::string& b_letter) {
  RepMatrix out;
  for (const auto& s : word.syllables()) {
    if (s.curve != a_letter && s.curve != b_letter)
      throw Error(ErrorKind::WrongAlphabet,
                  "'" + s.curve + "' is neither " + a_letter + " nor " + b_letter);
    out = out * generator_image(s.curve == a_letter, s.exponent);
  }
  return out;
}

TraceClass classify(const RepMatrix& m, AlgebraicReal& s) {
  const Poly tr = m.trace();
  const int above = s.sign_at(tr - Poly{2});  // sign(tr - 2)
  const int below = s.sign_at(tr + Poly{2});  // sign(tr + 2)
  if (above > 0 || below < 0) return TraceClass::Hyperbolic;
  if (above == 0 || below == 0) return TraceClass::Parabolic;
  return TraceClass::Elliptic;
}

StretchFactor stretch_factor(const TwistWord& word, const IntersectionMatrix& N, const Rational& precision,
                             const std::string& a_letter, const std::string& b_letter) {
  if (precision <= 0) throw Error(ErrorKind::BadParameter, "precision must be positive");
  const RepMatrix m = represent(word, a_letter, b_letter);
  ThurstonParameter param = thurston_parameter(N);
  if (!is_hyperbolic(classify(m, param.s)))
    throw Error(ErrorKind::NotHyperbolic, "trace of the image is in [-2, 2]");

  StretchFactor out;
  out.trace_poly = m.trace();
  const Rational target = precision / 2;
  unsigned bits = bits_for(target) + 4;
  Rational width = target;
  while (true) {
    Interval t = abs(param.s.eval_enclosure(out.trace_poly, width));
    if (t.lo > 2) {
      const Interval disc{t.lo * t.lo - 4, t.hi * t.hi - 4};
      const Interval root = sqrt_enclosure(disc, bits);
      const Interval lambda{(t.lo + root.lo) / 2, (t.hi + root.hi) / 2};
      if (lambda.width() <= target) {
        out.trace = round_outward(t, bits);
        // rounding adds at most 2^-(bits_for(target) + 2) on each side
        out.lambda = round_outward(lambda, bits_for(target) + 2);
        break;
      }
    }
    width /= 4;
    bits += 2;
  }
  out.log_lambda = log_enclosure(out.lambda, bits_for(precision / 4));
  param.mu.refine_to(precision / 2);
  out.mu = round_outward(param.mu.interval(), bits_for(precision) + 2);
  return out;
}

bool is_penner_word(const TwistWord& word, const std::vector<CurveId>& A, const std::vector<CurveId>& B) {
  const std::set<CurveId> a_set(A.begin(), A.end()), b_set(B.begin(), B.end());
  std::set<CurveId> used;
  bool signs_ok = true;
  for (const auto& s : word.syllables()) {
    const bool in_a = a_set.contains(s.curve), in_b = b_set.contains(s.curve);
    if (!in_a && !in_b) throw Error(ErrorKind::UnknownCurve, "'" + s.curve + "' is in neither multicurve");
    if (in_a && s.exponent <= 0) signs_ok = false;
    if (in_b && s.exponent >= 0) signs_ok = false;
    used.insert(s.curve);
  }
  return signs_ok && used.size() == a_set.size() + b_set.size();
}

}  // namespace twistlab
