#include "twistlab/length_bounds.hpp"

#include "twistlab/errors.hpp"
#include "twistlab/thurston_rep.hpp"

#include <algorithm>
#include <set>

namespace twistlab {

namespace {

BigInt magnitude(Exponent e) { return e < 0 ? BigInt(-BigInt(e)) : BigInt(e); }

std::string syllable_str(const Syllable& s) { return s.curve + "^" + std::to_string(s.exponent); }

std::string count_str(Count v) { return std::to_string(v); }

ConditionVerdict verdict(std::string description, bool passed, std::string witness) {
  return {std::move(description), passed, passed ? std::string() : std::move(witness)};
}

// Fills lower/upper when every verdict passed, otherwise only the unverified
// pair.
void settle(BoundResult& r, const Rational& lower, const Rational& upper) {
  r.unverified_lower = lower;
  r.unverified_upper = upper;
  if (r.conditions_met()) {
    r.lower = lower;
    r.upper = upper;
    r.pseudo_anosov = lower > 0;
  } else {
    r.lower = 0;
    r.upper.reset();
    r.pseudo_anosov = false;
  }
}

const std::vector<CurveId>& members(const CurveSystem& sys, const MulticurveId& name) {
  if (!sys.multicurves().contains(name)) throw Error(ErrorKind::UnknownCurve, "no multicurve named '" + name + "'");
  return sys.multicurve(name);
}

std::string block_str(const TwistWord& w, const Block& b) {
  std::string out;
  for (std::size_t i = b.begin; i < b.end; ++i) out += (out.empty() ? "" : " ") + syllable_str(w[i]);
  return out;
}

TwistWord slice(const TwistWord& w, std::size_t begin, std::size_t end) {
  return TwistWord(std::vector<Syllable>(w.syllables().begin() + static_cast<std::ptrdiff_t>(begin),
                                         w.syllables().begin() + static_cast<std::ptrdiff_t>(end)));
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::TwoCurveExact: return "two_curve_exact";
    case BoundKind::CurveCycle: return "curve_cycle";
    case BoundKind::TwoMulticurve: return "two_multicurve";
    case BoundKind::MulticurveCycle: return "multicurve_cycle";
    case BoundKind::Penner: return "penner";
    case BoundKind::None: return "none";
  }
  return "none";
}

bool BoundResult::conditions_met() const {
  if (conditions.empty()) return false;
  for (const auto& c : conditions)
    if (!c.passed) return false;
  return true;
}

BoundResult exact_two_filling(const TwistWord& word, const CurveSystem& sys) {
  const TwistWord w = normalize(word);
  if (w.size() < 2 || w.size() % 2 != 0)
    throw Error(ErrorKind::WrongShape, "need an even number (>= 2) of alternating syllables, got " +
                                           std::to_string(w.size()));
  const CurveId a = w[0].curve, b = w[1].curve;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].curve != (i % 2 == 0 ? a : b))
      throw Error(ErrorKind::WrongShape, "syllable " + std::to_string(i + 1) + " (" + syllable_str(w[i]) +
                                             ") breaks the alternation of " + a + " and " + b);

  BoundResult r;
  r.theorem = BoundKind::TwoCurveExact;
  const Count l = sys.require_dist(a, b);
  r.conditions.push_back(verdict("dist(" + a + "," + b + ") = " + count_str(l) + " >= 3", l >= 3,
                                 a + "," + b));
  const Count bound = 2 * sys.M();
  for (std::size_t i = 0; i < w.size(); ++i)
    r.conditions.push_back(verdict("|" + syllable_str(w[i]) + "| > 2M = " + count_str(bound),
                                   magnitude(w[i].exponent) > bound,
                                   "(" + w[i].curve + "," + std::to_string(w[i].exponent) + ")"));

  const BigInt n = static_cast<Count>(w.size() / 2);
  const BigInt value = 2 * n * (l - 2);
  settle(r, Rational(value), Rational(value));
  if (r.conditions_met()) r.exact = value;
  return r;
}

BoundResult bounds_curve_cycle(const TwistWord& word, const CurveSystem& sys) {
  const TwistWord w = normalize(word);
  const std::size_t k = w.size();
  if (k < 2) throw Error(ErrorKind::WrongShape, "need at least two syllables");
  if (w[0].curve == w[k - 1].curve)
    throw Error(ErrorKind::WrongShape, "first and last syllables share the curve " + w[0].curve);

  BoundResult r;
  r.theorem = BoundKind::CurveCycle;
  BigInt sum = 0;
  bool dist_ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    const CurveId& x = w[i].curve;
    const CurveId& y = w[(i + 1) % k].curve;
    const Count d = sys.require_dist(x, y);
    sum += d;
    dist_ok = dist_ok && d >= 3;
    r.conditions.push_back(verdict("dist(" + x + "," + y + ") = " + count_str(d) + " >= 3", d >= 3, x + "," + y));
  }
  for (std::size_t i = 0; i < k; ++i) {
    const CurveId& prev = w[(i + k - 1) % k].curve;
    const CurveId& next = w[(i + 1) % k].curve;
    const CurveId& core = w[i].curve;
    Count p = 0;
    try {
      p = sys.require_proj(core, prev, next);
    } catch (const Error& e) {
      if (dist_ok || e.kind() != ErrorKind::MissingProjection) throw;
      r.conditions.push_back(verdict("|" + syllable_str(w[i]) + "| > 2M+2+proj(" + core + ";" + prev + "," + next + ")",
                                     false, "proj(" + core + ";" + prev + "," + next + ") unavailable"));
      continue;
    }
    const Count bound = 2 * sys.M() + 2 + p;
    r.conditions.push_back(verdict("|" + syllable_str(w[i]) + "| > 2M+2+proj(" + core + ";" + prev + "," + next +
                                       ") = " + count_str(bound),
                                   magnitude(w[i].exponent) > bound,
                                   "(" + core + "," + std::to_string(w[i].exponent) + ")"));
  }
  settle(r, Rational(sum - 2 * static_cast<Count>(k)), Rational(sum));
  return r;
}

BoundResult bounds_two_multicurve(const TwistWord& word, const CurveSystem& sys, const MulticurveId& A,
                                  const MulticurveId& B) {
  const auto& a_members = members(sys, A);
  const auto& b_members = members(sys, B);
  if (A == B) throw Error(ErrorKind::WrongShape, "the two multicurves must differ");
  const TwistWord w = normalize(word);
  const BlockDecomposition dec = block_decompose(w, sys.partition());
  if (dec.blocks.empty() || dec.blocks.size() % 2 != 0)
    throw Error(ErrorKind::WrongShape, "need an even number (>= 2) of alternating blocks, got " +
                                           std::to_string(dec.blocks.size()));
  for (const auto& blk : dec.blocks)
    if (blk.multicurve != A && blk.multicurve != B)
      throw Error(ErrorKind::WrongShape, "block on multicurve " + blk.multicurve + " is neither " + A + " nor " + B);

  BoundResult r;
  r.theorem = BoundKind::TwoMulticurve;
  const Count l = dist_multicurve(sys, a_members, b_members);
  r.conditions.push_back(verdict("dist(" + A + "," + B + ") = " + count_str(l) + " >= 3", l >= 3, A + "," + B));
  const Count bound = 2 * sys.M() + 3;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const Block& blk = dec.blocks[i];
    BigInt best = 0;
    for (std::size_t j = blk.begin; j < blk.end; ++j) best = std::max(best, magnitude(w[j].exponent));
    r.conditions.push_back(verdict("block " + std::to_string(i + 1) + " (" + blk.multicurve + ") has |t| > 2M+3 = " +
                                       count_str(bound),
                                   best > bound, "block " + std::to_string(i + 1) + ": " + block_str(w, blk)));
  }
  const BigInt k = static_cast<Count>(dec.pairs());
  settle(r, Rational(2 * k * l - 4 * k), Rational(2 * k * l));
  return r;
}

BoundResult bounds_multicurve_cycle(const TwistWord& word, const CurveSystem& sys,
                                    const std::vector<MulticurveId>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 2) throw Error(ErrorKind::WrongShape, "need a cycle of at least two multicurves");
  for (const auto& c : cycle) members(sys, c);
  for (std::size_t i = 0; i < n; ++i)
    if (cycle[i] == cycle[(i + 1) % n])
      throw Error(ErrorKind::WrongShape, "adjacent cycle entries coincide: " + cycle[i]);
  const TwistWord w = normalize(word);
  const BlockDecomposition dec = block_decompose(w, sys.partition());
  if (dec.blocks.size() != n)
    throw Error(ErrorKind::WrongShape, "word has " + std::to_string(dec.blocks.size()) + " blocks, cycle has " +
                                           std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (dec.blocks[i].multicurve != cycle[i])
      throw Error(ErrorKind::WrongShape, "block " + std::to_string(i + 1) + " lies on " + dec.blocks[i].multicurve +
                                             ", expected " + cycle[i]);

  BoundResult r;
  r.theorem = BoundKind::MulticurveCycle;
  BigInt sum = 0;
  bool dist_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = cycle[i];
    const auto& y = cycle[(i + 1) % n];
    const Count d = dist_multicurve(sys, sys.multicurve(x), sys.multicurve(y));
    sum += d;
    dist_ok = dist_ok && d >= 3;
    r.conditions.push_back(verdict("dist(" + x + "," + y + ") = " + count_str(d) + " >= 3", d >= 3, x + "," + y));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Block& blk = dec.blocks[i];
    const auto& prev = cycle[(i + n - 1) % n];
    const auto& next = cycle[(i + 1) % n];
    const std::string label = "block " + std::to_string(i + 1) + " (" + blk.multicurve + ")";
    bool passed = false;
    bool missing = false;
    std::string detail;
    for (std::size_t j = blk.begin; j < blk.end; ++j) {
      const Syllable& s = w[j];
      Count p = 0;
      try {
        p = proj_multicurve(sys, s.curve, sys.multicurve(prev), sys.multicurve(next));
      } catch (const Error& e) {
        if (dist_ok || e.kind() != ErrorKind::MissingProjection) throw;
        missing = true;
        continue;
      }
      const Count bound = 2 * sys.M() + 3 + p;
      if (magnitude(s.exponent) > bound) passed = true;
      detail += (detail.empty() ? "" : ", ") + syllable_str(s) + " needs > " + count_str(bound);
    }
    if (missing) detail += (detail.empty() ? "" : ", ") + std::string("projection data unavailable");
    r.conditions.push_back(verdict(label + " has |t| > 2M+3+proj(g;" + prev + "," + next + ")", passed,
                                   label + ": " + detail));
  }
  settle(r, Rational(sum - 2 * static_cast<Count>(n)), Rational(sum));
  return r;
}

BoundResult penner_bound(const TwistWord& word, const CurveSystem& sys, const MulticurveId& A,
                         const MulticurveId& B) {
  const auto& a_members = members(sys, A);
  const auto& b_members = members(sys, B);
  const TwistWord w = normalize(word);
  BoundResult r;
  r.theorem = BoundKind::Penner;
  const Count l = dist_multicurve(sys, a_members, b_members);
  r.conditions.push_back(verdict("dist(" + A + "," + B + ") = " + count_str(l) + " >= 3 (filling)", l >= 3,
                                 A + "," + B));
  const bool shape = is_penner_word(w, a_members, b_members);
  std::string witness;
  if (!shape) {
    std::set<CurveId> used;
    for (const auto& s : w.syllables()) used.insert(s.curve);
    for (const auto& s : w.syllables()) {
      const bool in_a = std::find(a_members.begin(), a_members.end(), s.curve) != a_members.end();
      if ((in_a && s.exponent < 0) || (!in_a && s.exponent > 0)) {
        witness = syllable_str(s);
        break;
      }
    }
    if (witness.empty())
      for (const auto* fam : {&a_members, &b_members})
        for (const auto& c : *fam)
          if (witness.empty() && !used.contains(c)) witness = c + " unused";
  }
  r.conditions.push_back(verdict("positive twists on " + A + ", negative on " + B + ", every curve used", shape,
                                 witness));
  r.lower = 0;
  r.upper.reset();
  r.pseudo_anosov = r.conditions_met();
  r.notes.push_back("pseudo-Anosov certificate only; no length bound");
  return r;
}

CurveSystem singleton_multicurves(const CurveSystem& sys) {
  CurveSystem out;
  for (const auto& c : sys.curves()) {
    out.add_curve(c);
    out.add_multicurve("{" + c + "}", {c});
  }
  for (const auto& [k, v] : sys.dist_entries()) out.set_dist(k.first, k.second, v);
  for (const auto& [k, v] : sys.inter_entries()) out.set_inter(k.first, k.second, v);
  for (const auto& [k, v] : sys.proj_entries()) out.set_proj(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
  if (!sys.M_is_default()) out.set_M(sys.M());
  if (sys.surface()) out.set_surface(*sys.surface());
  return out;
}

namespace {

// Width used to rank verified results; exact first, unbounded last.
std::optional<Rational> width_of(const BoundResult& r) {
  if (!r.upper) return std::nullopt;
  return *r.upper - r.lower;
}

bool tighter(const BoundResult& x, const BoundResult& y) {
  const auto wx = width_of(x), wy = width_of(y);
  if (!wx) return false;
  if (!wy) return true;
  return *wx < *wy;
}

}  // namespace

BoundResult best_bound(const TwistWord& word, const CurveSystem& sys) {
  const TwistWord normal = normalize(word);
  TwistWord w = cyclic_reduce(normal);
  std::vector<std::string> notes;

  if (w.empty()) {
    BoundResult r;
    r.lower = 0;
    r.upper = Rational(0);
    r.exact = BigInt(0);
    r.notes.push_back("identity: not pseudo-Anosov");
    return r;
  }

  std::vector<BoundResult> candidates;
  auto attempt = [&](BoundKind kind, auto&& fn) {
    try {
      candidates.push_back(fn());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WrongShape) notes.push_back(to_string(kind) + ": " + e.what());
    }
  };

  attempt(BoundKind::TwoCurveExact, [&] { return exact_two_filling(w, sys); });
  attempt(BoundKind::CurveCycle, [&] { return bounds_curve_cycle(w, sys); });

  const auto part = sys.partition();
  bool all_in_multicurves = true;
  for (const auto& s : w.syllables()) all_in_multicurves = all_in_multicurves && part.contains(s.curve);
  if (all_in_multicurves) {
    BlockDecomposition dec = block_decompose(w, part);
    // Rotate a trailing block onto the front when it shares the first
    // block's multicurve; this is a conjugation.
    if (dec.blocks.size() > 1 && dec.blocks.front().multicurve == dec.blocks.back().multicurve) {
      const Block last = dec.blocks.back();
      w = slice(w, last.begin, last.end).concat(slice(w, 0, last.begin));
      dec = block_decompose(w, part);
    }
    std::vector<MulticurveId> cycle;
    std::set<MulticurveId> distinct;
    for (const auto& b : dec.blocks) {
      cycle.push_back(b.multicurve);
      distinct.insert(b.multicurve);
    }
    if (distinct.size() == 2 && cycle.size() % 2 == 0) {
      attempt(BoundKind::TwoMulticurve, [&] { return bounds_two_multicurve(w, sys, cycle[0], cycle[1]); });
    }
    attempt(BoundKind::MulticurveCycle, [&] { return bounds_multicurve_cycle(w, sys, cycle); });
    if (distinct.size() == 2) {
      attempt(BoundKind::Penner, [&] { return penner_bound(w, sys, cycle[0], cycle[1]); });
      attempt(BoundKind::Penner, [&] { return penner_bound(w, sys, cycle[1], cycle[0]); });
    }
  }

  if (!(w == normal)) notes.push_back("analyzed the cyclic conjugate " + w.str());

  const BoundResult* best = nullptr;
  for (const auto& c : candidates) {
    if (!c.conditions_met()) continue;
    if (best == nullptr || tighter(c, *best)) best = &c;
  }
  if (best != nullptr) {
    BoundResult r = *best;
    r.notes.insert(r.notes.end(), notes.begin(), notes.end());
    return r;
  }

  BoundResult r;
  for (const auto& c : candidates) {
    for (auto v : c.conditions) {
      v.description = to_string(c.theorem) + ": " + v.description;
      r.conditions.push_back(std::move(v));
    }
    if (!r.unverified_lower && c.unverified_lower) {
      r.unverified_lower = c.unverified_lower;
      r.unverified_upper = c.unverified_upper;
      r.notes.push_back("unverified bounds follow the " + to_string(c.theorem) + " formula");
    }
  }
  r.notes.insert(r.notes.end(), notes.begin(), notes.end());
  r.notes.push_back(candidates.empty() ? "no supported word shape" : "no shape has all hypotheses met");
  return r;
}

}  // namespace twistlab
