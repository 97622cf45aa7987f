#pragma once

// Hypothesis checks and bounds for the stable translation length l_C(f) of a
// twist word on the curve graph. Everything here is exact.

#include "twistlab/curve_config.hpp"
#include "twistlab/numeric.hpp"
#include "twistlab/twist_word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

enum class BoundKind {
  TwoCurveExact,    // alternating powers of two filling curves
  CurveCycle,       // one power per curve around a cycle of curves
  TwoMulticurve,    // alternating blocks on two filling multicurves
  MulticurveCycle,  // one block per multicurve around a cycle
  Penner,           // positive on A, negative on B
  None,
};

std::string to_string(BoundKind kind);

struct ConditionVerdict {
  std::string description;  // symbolic condition with the numbers filled in
  bool passed = false;
  std::string witness;      // offending syllable / curve / pair when failed
};

struct BoundResult {
  BoundKind theorem = BoundKind::None;
  std::vector<ConditionVerdict> conditions;
  Rational lower = 0;
  std::optional<Rational> upper;  // nullopt means +infinity
  std::optional<BigInt> exact;
  bool pseudo_anosov = false;
  // Bounds the formula would give; filled even when a condition fails.
  std::optional<Rational> unverified_lower, unverified_upper;
  std::vector<std::string> notes;

  bool conditions_met() const;
};

/// Alternating a^{a_1} b^{b_1} ... a^{a_n} b^{b_n}; needs dist(a,b) = l >= 3 and
/// every |exponent| > 2M, then l_C = 2n(l - 2). Throws Error{WrongShape,
/// MissingDistance}.
BoundResult exact_two_filling(const TwistWord& word, const CurveSystem& sys);

/// T_{c_1}^{n_1} ... T_{c_k}^{n_k}, k >= 2, cyclically adjacent curves distinct.
/// Needs dist(c_i, c_{i+1}) >= 3 and |n_i| > 2M + 2 + proj(c_i; c_{i-1}, c_{i+1}).
/// The printed statement repeats alpha_1 in its second factor; one syllable
/// per curve of the cycle is assumed. Throws Error{WrongShape,
/// MissingDistance, MissingProjection}.
BoundResult bounds_curve_cycle(const TwistWord& word, const CurveSystem& sys);

/// 2k blocks alternating between the multicurves named A and B (either may
/// come first). Needs dist(A,B) = l >= 3 and a syllable with |t| > 2M + 3 in
/// every block; then 2kl - 4k <= l_C <= 2kl. Throws Error{WrongShape,
/// MissingDistance, UnknownCurve}.
BoundResult bounds_two_multicurve(const TwistWord& word, const CurveSystem& sys, const MulticurveId& A,
                                  const MulticurveId& B);

/// One block per multicurve of `cycle` in order. Needs dist(C_i, C_{i+1}) >= 3
/// and in every block a twist T_g^t with |t| > 2M + 3 + proj(g; C_{i-1}, C_{i+1}).
/// Throws Error{WrongShape, MissingDistance, MissingProjection, UnknownCurve}.
BoundResult bounds_multicurve_cycle(const TwistWord& word, const CurveSystem& sys,
                                    const std::vector<MulticurveId>& cycle);

/// Penner words on two multicurves at distance >= 3; certifies pseudo-Anosov
/// without a length bound.
BoundResult penner_bound(const TwistWord& word, const CurveSystem& sys, const MulticurveId& A,
                         const MulticurveId& B);

/// Tries every shape on the cyclically reduced word and keeps the tightest
/// verified interval. Never throws for data problems; they become notes.
BoundResult best_bound(const TwistWord& word, const CurveSystem& sys);

/// Same curves and data with every curve in its own multicurve "{c}".
CurveSystem singleton_multicurves(const CurveSystem& sys);

}  // namespace twistlab
