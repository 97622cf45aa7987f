#include "twistlab/applications.hpp"

#include "twistlab/errors.hpp"
#include "twistlab/thurston_rep.hpp"

#include <limits>
#include <map>
#include <set>

namespace twistlab {

std::string to_string(MinimalVerdict v) {
  return v == MinimalVerdict::StrictlyGreater ? "strictly_greater" : "equal_conjugate";
}

MinimalWordResult minimal_word(const TwistWord& word, const CurveSystem& sys, const MulticurveId& A,
                               const MulticurveId& B) {
  MinimalWordResult out;
  out.original = bounds_two_multicurve(word, sys, A, B);
  if (!out.original.conditions_met()) {
    for (const auto& c : out.original.conditions)
      if (!c.passed) throw Error(ErrorKind::ConditionUnmet, c.description + " fails at " + c.witness);
  }
  const TwistWord w = normalize(word);
  out.k = block_decompose(w, sys.partition()).pairs();
  out.verdict = out.k >= 2 ? MinimalVerdict::StrictlyGreater : MinimalVerdict::EqualConjugate;

  std::map<CurveId, BigInt> totals;
  for (const auto& s : w.syllables()) totals[s.curve] += s.exponent;
  std::vector<Syllable> collected;
  for (const auto* family : {&sys.multicurve(A), &sys.multicurve(B)}) {
    for (const auto& c : *family) {
      auto it = totals.find(c);
      if (it == totals.end()) continue;
      if (it->second == 0) throw Error(ErrorKind::ZeroTotal, "exponents of " + c + " sum to 0");
      if (it->second > std::numeric_limits<Exponent>::max() || it->second < -std::numeric_limits<Exponent>::max())
        throw Error(ErrorKind::BadParameter, "total exponent of " + c + " overflows");
      collected.push_back({c, it->second.convert_to<Exponent>()});
    }
  }
  out.collected = TwistWord(std::move(collected));
  return out;
}

Rational trace_bound(std::int64_t n, const Rational& t) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "n must be at least 1");
  if (t <= 1) throw Error(ErrorKind::BadParameter, "t must exceed 1");
  const Rational base = 2 * t;
  return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(base), static_cast<unsigned>(2 * n)),
                  boost::multiprecision::pow(boost::multiprecision::denominator(base), static_cast<unsigned>(2 * n)));
}

Rational alternating_trace(const std::vector<int>& signs, const Rational& t) {
  Rational a = 1, b = 0, c = 0, d = 1;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw Error(ErrorKind::BadParameter, "signs must be +1 or -1");
    const Rational x = t * signs[i];
    if (i % 2 == 0) {
      // right multiply by [[1, x], [0, 1]]
      b += a * x;
      d += c * x;
    } else {
      // right multiply by [[1, 0], [x, 1]]
      a += b * x;
      c += d * x;
    }
  }
  return a + d;
}

RatioReport ratio_report(const TwistWord& pattern, const CurveSystem& sys, const Rational& precision) {
  const std::size_t len = pattern.size();
  if (len < 2 || len % 2 != 0)
    throw Error(ErrorKind::WrongShape, "need an even number (>= 2) of alternating syllables");
  const CurveId a = pattern[0].curve, b = pattern[1].curve;
  if (a == b) throw Error(ErrorKind::WrongShape, "the two curves must differ");
  for (std::size_t i = 0; i < len; ++i) {
    if (pattern[i].curve != (i % 2 == 0 ? a : b))
      throw Error(ErrorKind::WrongShape, "syllable " + std::to_string(i + 1) + " breaks the alternation");
    if (pattern[i].exponent != 1 && pattern[i].exponent != -1)
      throw Error(ErrorKind::ConditionUnmet, "exponent " + std::to_string(pattern[i].exponent) + " of syllable " +
                                                 std::to_string(i + 1) + " is not +-1");
  }

  RatioReport out;
  out.n = static_cast<std::int64_t>(len / 2);
  out.l = sys.require_dist(a, b);
  if (out.l < 3) throw Error(ErrorKind::ConditionUnmet, "dist(" + a + "," + b + ") = " + std::to_string(out.l) + " < 3");
  const auto inter = sys.inter(a, b);
  if (!inter) throw Error(ErrorKind::MissingData, "no intersection number for " + a + "," + b);
  out.intersection = *inter;

  const Count power = 2 * sys.M() + 1;
  std::vector<Syllable> expanded, letters;
  for (std::size_t i = 0; i < len; ++i) {
    expanded.push_back({pattern[i].curve, pattern[i].exponent * power});
    letters.push_back({i % 2 == 0 ? "A" : "B", pattern[i].exponent * power});
  }
  out.expanded = TwistWord(std::move(expanded));
  const BoundResult bound = exact_two_filling(out.expanded, sys);
  if (!bound.exact) throw Error(ErrorKind::ConditionUnmet, "the powered word misses the exact-length hypotheses");
  out.lC = *bound.exact;
  out.t = BigInt(out.intersection) * power;

  const StretchFactor sf = stretch_factor(TwistWord(std::move(letters)), IntersectionMatrix{{{out.intersection}}},
                                          precision);
  out.lambda = sf.lambda;
  out.lT = sf.log_lambda;
  const Rational lc(out.lC);
  const unsigned out_bits = bits_for(precision) + 8;
  out.tau = round_outward({out.lT.lo / lc, out.lT.hi / lc}, out_bits);
  const Interval log2t = log_enclosure(Rational(2 * out.t), bits_for(precision));
  const Rational gap(out.l - 2);
  out.optimizer_upper = round_outward({log2t.lo / gap, log2t.hi / gap}, out_bits);
  out.within_bound = out.tau.hi <= out.optimizer_upper.hi;
  if (sys.surface()) out.omega = sys.surface()->omega();
  return out;
}

std::string to_string(RaagMode m) {
  switch (m) {
    case RaagMode::FreeCurves: return "free_curves";
    case RaagMode::TwoMulticurves: return "two_multicurves";
    case RaagMode::Multicurves: return "multicurves";
  }
  return "free_curves";
}

RaagMode parse_raag_mode(const std::string& text) {
  if (text == "free_curves") return RaagMode::FreeCurves;
  if (text == "two_multicurves") return RaagMode::TwoMulticurves;
  if (text == "multicurves") return RaagMode::Multicurves;
  throw Error(ErrorKind::Malformed, "unknown mode '" + text + "'");
}

namespace {

std::string free_product(const std::vector<std::size_t>& ranks) {
  std::string out;
  for (std::size_t r : ranks) {
    if (!out.empty()) out += " * ";
    out += r == 1 ? "Z" : "Z^" + std::to_string(r);
  }
  return out;
}

}  // namespace

RaagCertificate raag_threshold(const CurveSystem& sys, RaagMode mode, const std::vector<std::string>& data) {
  RaagCertificate out;
  out.mode = mode;
  const Count M = sys.M();

  if (mode == RaagMode::FreeCurves) {
    if (data.size() < 2) throw Error(ErrorKind::BadParameter, "need at least two curves");
    for (const auto& c : data)
      if (!sys.has_curve(c)) throw Error(ErrorKind::UnknownCurve, "'" + c + "'");
    if (std::set<CurveId>(data.begin(), data.end()).size() != data.size())
      throw Error(ErrorKind::BadParameter, "curves must be distinct");
    for (std::size_t i = 0; i < data.size(); ++i)
      for (std::size_t j = i + 1; j < data.size(); ++j) {
        const Count d = sys.require_dist(data[i], data[j]);
        if (d < 3)
          throw Error(ErrorKind::ConditionUnmet, "dist(" + data[i] + "," + data[j] + ") = " + std::to_string(d) + " < 3");
      }
    out.conditions_used.push_back("pairwise dist >= 3");
    for (std::size_t k = 0; k < data.size(); ++k)
      for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j) {
          if (k == i || k == j) continue;
          out.max_projection = std::max(out.max_projection, sys.require_proj(data[k], data[i], data[j]));
        }
    out.required_power = smallest_above(2 * M + 2 + out.max_projection);
    out.conditions_used.push_back("n > 2M+2+max proj = " + std::to_string(2 * M + 2 + out.max_projection));
    out.ranks.assign(data.size(), 1);
    out.group_shape = "free group of rank " + std::to_string(data.size());
    out.notes.push_back("rank equals the number of curves");
    return out;
  }

  if (mode == RaagMode::TwoMulticurves && data.size() != 2)
    throw Error(ErrorKind::BadParameter, "two_multicurves needs exactly two multicurves");
  if (data.size() < 2) throw Error(ErrorKind::BadParameter, "need at least two multicurves");
  for (const auto& name : data)
    if (!sys.multicurves().contains(name)) throw Error(ErrorKind::UnknownCurve, "no multicurve named '" + name + "'");
  if (std::set<std::string>(data.begin(), data.end()).size() != data.size())
    throw Error(ErrorKind::BadParameter, "multicurves must be distinct");
  for (std::size_t i = 0; i < data.size(); ++i)
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      const Count d = dist_multicurve(sys, sys.multicurve(data[i]), sys.multicurve(data[j]));
      if (d < 3)
        throw Error(ErrorKind::ConditionUnmet, "dist(" + data[i] + "," + data[j] + ") = " + std::to_string(d) + " < 3");
    }
  out.conditions_used.push_back("pairwise dist >= 3");
  for (const auto& name : data) out.ranks.push_back(sys.multicurve(name).size());
  out.group_shape = free_product(out.ranks);

  if (mode == RaagMode::TwoMulticurves) {
    out.required_power = smallest_above(2 * M + 3);
    out.conditions_used.push_back("n > 2M+3 = " + std::to_string(2 * M + 3));
    return out;
  }
  for (const auto& owner : data)
    for (const auto& core : sys.multicurve(owner))
      for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j)
          out.max_projection = std::max(
              out.max_projection, proj_multicurve(sys, core, sys.multicurve(data[i]), sys.multicurve(data[j])));
  out.required_power = smallest_above(2 * M + 3 + out.max_projection);
  out.conditions_used.push_back("n > 2M+3+max proj = " + std::to_string(2 * M + 3 + out.max_projection));
  return out;
}

}  // namespace twistlab
