#pragma once

// Thurston's construction for two filling multicurves A and B: the
// representation T_A -> [[1, s], [0, 1]], T_B -> [[1, 0], [-s, 1]] with
// s = sqrt(mu), mu the largest eigenvalue of N N^T for N the intersection
// matrix. Negative powers map to inverse matrices.

#include "twistlab/curve_config.hpp"
#include "twistlab/polynomial.hpp"
#include "twistlab/twist_word.hpp"

#include <vector>

namespace twistlab {

/// N[i][j] = i(alpha_i, beta_j) for curves alpha_i of A and beta_j of B.
struct IntersectionMatrix {
  std::vector<std::vector<Count>> entries;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
  /// Throws Error{DegenerateMatrix} on ragged input, negative entries or an
  /// all-zero row / column.
  void check() const;
  /// N N^T
  std::vector<std::vector<BigInt>> gram() const;
};

/// det(x I - A) by fraction-free (Bareiss) elimination over Z[x].
Poly characteristic_polynomial(const std::vector<std::vector<BigInt>>& A);

/// mu, the largest eigenvalue of N N^T, and s = sqrt(mu).
struct ThurstonParameter {
  AlgebraicReal mu;
  AlgebraicReal s;
};

/// Throws Error{DegenerateMatrix}.
AlgebraicReal perron_eigenvalue(const IntersectionMatrix& N);
ThurstonParameter thurston_parameter(const IntersectionMatrix& N);

/// 2x2 matrix over Z[s]; s is formal and never reduced.
struct RepMatrix {
  Poly a = Poly{1}, b, c, d = Poly{1};

  static RepMatrix identity() { return {}; }
  Poly trace() const { return a + d; }
  Poly det() const { return a * d - b * c; }
  /// Substitutes an integer value for s.
  std::vector<BigInt> evaluate(const BigInt& s) const;

  bool operator==(const RepMatrix&) const = default;
};

RepMatrix operator*(const RepMatrix& x, const RepMatrix& y);

/// T_A^e -> [[1, e s], [0, 1]], T_B^e -> [[1, 0], [-e s, 1]].
RepMatrix generator_image(bool is_A, Exponent e);

/// Image of a word over the two letters `a_letter`, `b_letter` (default "A",
/// "B"). Throws Error{WrongAlphabet} on any other curve name.
RepMatrix represent(const TwistWord& word, const std::string& a_letter = "A",
                    const std::string& b_letter = "B");

enum class TraceClass {
  Elliptic,   // |tr| < 2
  Parabolic,  // |tr| = 2 (or identity)
  Hyperbolic  // |tr| > 2
};

/// Exact decision of |trace(m)| at s against 2.
TraceClass classify(const RepMatrix& m, AlgebraicReal& s);
inline bool is_hyperbolic(TraceClass c) { return c == TraceClass::Hyperbolic; }

struct StretchFactor {
  Interval mu;
  Poly trace_poly;
  Interval trace;   // |trace| at s
  Interval lambda;  // (|tr| + sqrt(tr^2 - 4)) / 2
  Interval log_lambda;
};

/// Stretch factor and Teichmuller translation length log(lambda), each
/// enclosed with width <= precision. Throws Error{NotHyperbolic}.
StretchFactor stretch_factor(const TwistWord& word, const IntersectionMatrix& N, const Rational& precision,
                             const std::string& a_letter = "A", const std::string& b_letter = "B");

/// Positive twists on every curve of A, negative twists on every curve of B,
/// each curve used at least once. Throws Error{UnknownCurve} for a curve in
/// neither family.
bool is_penner_word(const TwistWord& word, const std::vector<CurveId>& A, const std::vector<CurveId>& B);

}  // namespace twistlab
