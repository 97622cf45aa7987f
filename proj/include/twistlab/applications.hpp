#pragma once

// Consequences of the bounds: collecting twists into a shorter word, the
// Teichmuller / curve graph length ratio, and powers of twists that generate
// right-angled Artin groups.

#include "twistlab/curve_config.hpp"
#include "twistlab/length_bounds.hpp"
#include "twistlab/numeric.hpp"
#include "twistlab/twist_word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

enum class MinimalVerdict { StrictlyGreater, EqualConjugate };
std::string to_string(MinimalVerdict v);

struct MinimalWordResult {
  TwistWord collected;  // A totals in multicurve order, then B totals
  MinimalVerdict verdict = MinimalVerdict::EqualConjugate;
  std::size_t k = 0;    // number of A/B block pairs
  BoundResult original;
};

/// Needs the two-multicurve hypotheses for A, B (Error{ConditionUnmet}).
/// Only curves occurring in the word are collected; a curve whose exponents
/// sum to zero is rejected with Error{ZeroTotal}.
MinimalWordResult minimal_word(const TwistWord& word, const CurveSystem& sys, const MulticurveId& A,
                               const MulticurveId& B);

/// (2t)^(2n). Throws Error{BadParameter} unless n >= 1 and t > 1.
Rational trace_bound(std::int64_t n, const Rational& t);

/// trace of a^{e_1} b^{e_2} a^{e_3} ... with a = [[1,t],[0,1]],
/// b = [[1,0],[t,1]], signs e_i in {1,-1}. Throws Error{BadParameter}.
Rational alternating_trace(const std::vector<int>& signs, const Rational& t);

struct RatioReport {
  TwistWord expanded;   // pattern with exponents multiplied by 2M+1
  std::int64_t n = 0;   // syllable pairs
  Count l = 0;          // dist(a, b)
  Count intersection = 0;
  BigInt t;             // i(a,b) * (2M+1)
  BigInt lC;            // 2n(l-2)
  Interval lambda;
  Interval lT;
  Interval tau;         // lT / lC
  Interval optimizer_upper;  // log(2t) / (l-2)
  bool within_bound = false; // tau.hi <= optimizer_upper.hi
  std::optional<Count> omega;
};

/// `pattern` alternates two curves with exponents +-1; each letter stands for
/// the (2M+1)-th power of the twist. Throws Error{WrongShape, ConditionUnmet,
/// MissingDistance, MissingData, NotHyperbolic}.
RatioReport ratio_report(const TwistWord& pattern, const CurveSystem& sys,
                         const Rational& precision = Rational(1, 1000000000));

enum class RaagMode { FreeCurves, TwoMulticurves, Multicurves };
std::string to_string(RaagMode m);
RaagMode parse_raag_mode(const std::string& text);

struct RaagCertificate {
  RaagMode mode = RaagMode::FreeCurves;
  Count required_power = 0;
  Count max_projection = 0;
  std::string group_shape;
  std::vector<std::size_t> ranks;  // free factor ranks; all 1 for free groups
  std::vector<std::string> conditions_used;
  std::vector<std::string> notes;
};

/// `data` lists curves (FreeCurves) or multicurve names (the other modes).
/// Throws Error{ConditionUnmet} when a distance is below 3,
/// Error{MissingProjection}, Error{MissingDistance}, Error{BadParameter}.
RaagCertificate raag_threshold(const CurveSystem& sys, RaagMode mode, const std::vector<std::string>& data);

}  // namespace twistlab
