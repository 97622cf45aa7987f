#pragma once

// Concrete torus model. Curves are slopes p/q, the curve graph is the Farey
// graph, Dehn twists act through SL(2,Z) and annular projections use a
// floor-difference model.

#include "twistlab/curve_config.hpp"
#include "twistlab/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab::farey {

/// Primitive integer vector up to sign, canonical form q > 0 or (1, 0).
class Slope {
 public:
  /// Throws Error{BadParameter} on (0, 0) or a non-primitive vector.
  Slope(BigInt p, BigInt q);

  static Slope infinity() { return Slope(1, 0); }
  /// "p/q", with "1/0" for infinity; a bare integer n means n/1.
  static Slope parse(std::string_view text);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  /// p/q; only for finite slopes.
  Rational value() const;
  std::string str() const;

  bool operator==(const Slope& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool operator<(const Slope& o) const { return q_ < o.q_ || (q_ == o.q_ && p_ < o.p_); }

 private:
  BigInt p_, q_;
};

/// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors (p, q).
struct Matrix2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static Matrix2 identity() { return {}; }
  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  /// Inverse of a determinant-1 matrix.
  Matrix2 inverse() const { return {d, -b, -c, a}; }
  Matrix2 pow(std::int64_t e) const;
  Slope apply(const Slope& s) const;

  bool operator==(const Matrix2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);

/// |p1 q2 - p2 q1|
BigInt intersection(const Slope& x, const Slope& y);

/// Determinant-1 matrix sending infinity to `core`: first column (p, q),
/// second column the extended-Euclid cofactor with the smallest nonnegative
/// lower entry.
Matrix2 base_change(const Slope& core);

/// e-th power of the Dehn twist about c. T_inf^e = [[1, e], [0, 1]], i.e.
/// x -> x + e on slopes; other curves by conjugation with base_change.
Matrix2 twist_matrix(const Slope& c, std::int64_t e);
Matrix2 twist_matrix(const Slope& c, const BigInt& e);

/// Exact Farey-graph distance.
std::int64_t farey_distance(const Slope& x, const Slope& y);

/// A vertex adjacent to `from` on some geodesic from `from` to `to`
/// (requires farey_distance(from, to) >= 2).
Slope geodesic_neighbor(const Slope& from, const Slope& to);

/// Bidirectional BFS inside the subgraph of slopes with |p|, q <= budget.
/// The result is the distance in that subgraph, an upper bound for the true
/// distance. Throws Error{BudgetExhausted} when an endpoint lies outside the
/// budget or the endpoints are disconnected in the subgraph.
std::int64_t farey_distance_bfs(const Slope& x, const Slope& y, std::int64_t budget);

/// The same budget-bounded subgraph, materialized for all-pairs work.
class BoundedFareyGraph {
 public:
  explicit BoundedFareyGraph(std::int64_t budget);

  std::int64_t budget() const { return budget_; }
  std::size_t size() const { return vertices_.size(); }
  /// Canonical (p, q) of vertex i.
  std::pair<std::int64_t, std::int64_t> vertex(std::size_t i) const { return vertices_[i]; }
  std::optional<std::size_t> index_of(std::int64_t p, std::int64_t q) const;
  /// BFS distances from vertex `source`; -1 for unreachable.
  std::vector<std::int32_t> distances_from(std::size_t source) const;

 private:
  std::int64_t budget_;
  std::vector<std::pair<std::int64_t, std::int64_t>> vertices_;
  std::vector<std::int32_t> index_;  // dense (p + budget) * (budget + 1) + q
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Floor-difference model of the annular curve graph around `core`:
/// 0 if x and y coincide, else |floor(x') - floor(y')| + 2 where ' denotes
/// the image under the inverse of base_change(core). Throws
/// Error{CoreDisjoint} when x or y does not cross the core.
std::int64_t annular_distance(const Slope& core, const Slope& x, const Slope& y);

struct VerificationRow {
  unsigned m = 0;
  std::int64_t distance = 0;
  std::int64_t expected = 0;  // 2 m n (l - 2)
  bool equal = false;
};

struct VerificationReport {
  Slope a = Slope::infinity();
  Slope b = Slope::infinity();
  std::int64_t l = 0;
  unsigned n = 0;
  std::vector<BigInt> exponents;
  BigInt min_abs_exponent = 0;
  bool alternating_signs = false;
  Slope v1 = Slope::infinity();
  Matrix2 f;
  std::vector<VerificationRow> rows;

  bool all_equal() const;
};

/// Builds f = T_a^{e_1} T_b^{e_2} ... T_b^{e_2n}, picks v1 next to a on a
/// geodesic towards b, and compares farey_distance(v1, f^m v1) with 2mn(l-2)
/// for m = 1..m_max. Mismatches are recorded, not thrown. Throws
/// Error{ConditionUnmet} if l < 3, the exponent list is empty or of odd
/// length, or some |exponent| < threshold.
VerificationReport verify_main_theorem(const Slope& a, const Slope& b, const std::vector<BigInt>& exponents,
                                       unsigned m_max, const BigInt& threshold);

struct ThresholdSearch {
  std::optional<BigInt> threshold;  // smallest doubling that gave equality
  std::vector<BigInt> tried;
  VerificationReport last;
};

/// Raises every |exponent| to at least t for t = start, 2 start, 4 start,
/// ... <= cap, until verify_main_theorem reports equality for all m.
ThresholdSearch find_equality_threshold(const Slope& a, const Slope& b, const std::vector<BigInt>& exponents,
                                        unsigned m_max, const BigInt& start, const BigInt& cap);

/// Curve system over the given slopes: dist from farey_distance, inter from
/// intersection, proj from annular_distance, one singleton multicurve per
/// slope (named "{p/q}"). Curves are named by Slope::str().
CurveSystem export_curve_system(const std::vector<Slope>& slopes, std::optional<Count> M = std::nullopt);

}  // namespace twistlab::farey
