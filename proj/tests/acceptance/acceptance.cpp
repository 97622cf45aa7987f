// Acceptance experiments. One PASS/FAIL line per criterion on stdout, with
// indented detail lines above it. Randomized parts take --seed.

#include "twistlab/applications.hpp"
#include "twistlab/curve_config.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/farey_backend.hpp"
#include "twistlab/length_bounds.hpp"
#include "twistlab/thurston_rep.hpp"

#include "CLI11.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iostream>
#include <random>
#include <sstream>

using namespace twistlab;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

std::mt19937_64 gen;

std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

farey::Slope random_slope(std::int64_t bound) {
  for (;;) {
    std::int64_t p = uniform(-bound, bound), q = uniform(0, bound);
    if (gcd64(p, q) != 1 || (q == 0 && p != 1)) continue;
    return farey::Slope(p, q);
  }
}

void detail(const std::string& line) { std::cout << "  " << line << "\n"; }

bool report(int n, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << std::endl;
  return ok;
}

// 2x2 integer matrices, written out by hand.
struct IMat {
  BigInt a = 1, b = 0, c = 0, d = 1;
};

IMat mul(const IMat& x, const IMat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool criterion1() {
  int instances = 0, settled = 0, equal_at_201 = 0;
  while (instances < 25) {
    const farey::Slope a = random_slope(12), b = random_slope(12);
    const std::int64_t l = farey::farey_distance(a, b);
    if (l != 3 && l != 4) continue;
    const int n = static_cast<int>(uniform(1, 3));
    std::vector<BigInt> exps;
    for (int i = 0; i < 2 * n; ++i) {
      const BigInt e = uniform(201, 400);
      exps.push_back(uniform(0, 1) ? e : BigInt(-e));
    }
    ++instances;
    const farey::VerificationReport first = farey::verify_main_theorem(a, b, exps, 4, 201);
    std::ostringstream line;
    line << "a=" << a.str() << " b=" << b.str() << " l=" << l << " n=" << n << " d(m=1..4)=";
    for (const auto& row : first.rows) line << row.distance << (row.m < 4 ? "," : "");
    line << " expected=";
    for (const auto& row : first.rows) line << row.expected << (row.m < 4 ? "," : "");
    if (first.all_equal()) {
      ++equal_at_201;
      ++settled;
      detail(line.str() + " equal at 201");
      continue;
    }
    const farey::ThresholdSearch search = farey::find_equality_threshold(a, b, exps, 4, 201, BigInt(1) << 15);
    if (search.threshold) {
      ++settled;
      line << " threshold=" << search.threshold->str();
    } else {
      line << " no threshold <= 32768 (tried " << search.tried.size() << ", last d(m=1)="
           << search.last.rows.front().distance << ")";
    }
    detail(line.str());
  }
  detail(std::to_string(equal_at_201) + "/" + std::to_string(instances) + " equal at 201, " + std::to_string(settled) +
         " settled by 2^15");
  return report(1, "farey_distance(v1, f^m v1) = 2mn(l-2) for every instance at some threshold <= 2^15",
                settled == instances);
}

bool criterion2() {
  int checked = 0, bad = 0;
  while (checked < 100) {
    const farey::Slope c = random_slope(50), x = random_slope(50);
    if (farey::intersection(c, x) == 0) continue;
    ++checked;
    for (std::int64_t n = -100; n <= 100; ++n) {
      if (n == 0) continue;
      const auto d = farey::annular_distance(c, x, farey::twist_matrix(c, n).apply(x));
      if (d != (n < 0 ? -n : n) + 2) {
        if (++bad <= 5) detail("mismatch c=" + c.str() + " x=" + x.str() + " n=" + std::to_string(n));
      }
    }
  }
  detail("100 pairs x 200 twist powers, " + std::to_string(bad) + " mismatches");
  return report(2, "annular_distance(c, x, T_c^n x) = |n| + 2", bad == 0);
}

bool criterion3() {
  const std::int64_t grid = 30, budget = 64;
  const farey::BoundedFareyGraph graph(budget);
  std::vector<std::pair<std::int64_t, std::int64_t>> slopes;
  for (std::int64_t q = 0; q <= grid; ++q)
    for (std::int64_t p = -grid; p <= grid; ++p)
      if (gcd64(p, q) == 1 && (q > 0 || p == 1)) slopes.push_back({p, q});
  std::size_t pairs = 0, bad = 0;
  for (const auto& [xp, xq] : slopes) {
    const auto dist = graph.distances_from(*graph.index_of(xp, xq));
    const farey::Slope x(xp, xq);
    for (const auto& [yp, yq] : slopes) {
      ++pairs;
      const auto cf = farey::farey_distance(x, farey::Slope(yp, yq));
      if (cf != dist[*graph.index_of(yp, yq)]) {
        if (++bad <= 5) detail("mismatch " + x.str() + " " + farey::Slope(yp, yq).str());
      }
    }
  }
  // the per-pair bidirectional search on a sample, and stability of the budget
  for (int i = 0; i < 300; ++i) {
    const farey::Slope x = random_slope(grid), y = random_slope(grid);
    const auto d64 = farey::farey_distance_bfs(x, y, budget);
    const auto d128 = farey::farey_distance_bfs(x, y, 2 * budget);
    if (d64 != farey::farey_distance(x, y) || d64 != d128) ++bad;
    ++pairs;
  }
  detail(std::to_string(slopes.size()) + " slopes, " + std::to_string(pairs) + " pairs, " + std::to_string(bad) +
         " mismatches");
  return report(3, "farey_distance equals BFS distance on all pairs with max(|p|, q) <= 30", bad == 0);
}

bool criterion4() {
  const IntersectionMatrix N{{{1}}};
  const Rational eps(1, 1000000000);
  int words = 0, hyperbolic = 0, bad = 0;
  while (words < 100) {
    std::vector<Syllable> syl;
    const int pairs = static_cast<int>(uniform(1, 4));
    for (int i = 0; i < pairs; ++i)
      for (const char* letter : {"A", "B"}) {
        Exponent e = 0;
        while (e == 0) e = uniform(-5, 5);
        syl.push_back({letter, e});
      }
    const TwistWord w(syl);
    ++words;
    IMat m;
    for (const auto& s : syl) {
      const BigInt e = s.exponent;
      m = mul(m, s.curve == "A" ? IMat{1, e, 0, 1} : IMat{1, 0, -e, 1});
    }
    const auto v = represent(w).evaluate(1);
    if (v != std::vector<BigInt>{m.a, m.b, m.c, m.d}) ++bad;
    const BigInt tr = m.a + m.d;
    if (tr >= -2 && tr <= 2) {
      try {
        stretch_factor(w, N, eps);
        ++bad;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotHyperbolic) ++bad;
      }
      continue;
    }
    ++hyperbolic;
    const Float50 t = Float50(tr < 0 ? BigInt(-tr) : tr);
    const Float50 ref = (t + boost::multiprecision::sqrt(t * t - 4)) / 2;
    const StretchFactor sf = stretch_factor(w, N, eps);
    const Float50 mid = (Float50(sf.lambda.lo) + Float50(sf.lambda.hi)) / 2;
    if (Float50(sf.lambda.lo) > ref || Float50(sf.lambda.hi) < ref ||
        boost::multiprecision::fabs(mid - ref) > Float50(1e-9))
      ++bad;
  }
  const StretchFactor golden = stretch_factor(TwistWord::parse("A B^-1"), N, eps);
  const Float50 phi2 = (3 + boost::multiprecision::sqrt(Float50(5))) / 2;
  const Float50 gmid = (Float50(golden.lambda.lo) + Float50(golden.lambda.hi)) / 2;
  if (boost::multiprecision::fabs(gmid - phi2) > Float50(1e-9)) ++bad;
  detail(std::to_string(words) + " words, " + std::to_string(hyperbolic) + " hyperbolic, lambda(A B^-1) = " +
         gmid.str(15) + ", " + std::to_string(bad) + " mismatches");
  return report(4, "mu = 1 images equal the SL(2,Z) product and lambda matches within 1e-9", bad == 0);
}

bool criterion5() {
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = uniform(1, 6);
    const std::int64_t t = uniform(2, 10);
    std::vector<int> signs;
    for (std::int64_t j = 0; j < 2 * n; ++j) signs.push_back(uniform(0, 1) ? 1 : -1);
    const Rational tr = alternating_trace(signs, Rational(t));
    if (abs(tr) > trace_bound(n, Rational(t))) ++bad;
  }
  detail("200 words, " + std::to_string(bad) + " violations");
  return report(5, "trace of alternating +-1 words <= (2t)^(2n)", bad == 0);
}

bool criterion6() {
  int bad = 0, samples = 0;
  for (int i = 0; i < 30; ++i) {
    const Count l = uniform(3, 6), inter = uniform(1, 5), M = uniform(1, 20);
    CurveSystem sys;
    sys.add_curve("a");
    sys.add_curve("b");
    sys.set_dist("a", "b", l);
    sys.set_inter("a", "b", inter);
    sys.set_M(M);
    std::vector<Syllable> syl;
    const int n = static_cast<int>(uniform(1, 3));
    for (int j = 0; j < n; ++j)
      for (const char* c : {"a", "b"}) syl.push_back({c, uniform(0, 1) ? 1 : -1});
    const RatioReport r = ratio_report(TwistWord(syl), sys, Rational(1, 1000000000));
    const Float50 rhs = boost::multiprecision::log(Float50(2 * r.t)) / (l - 2) + Float50(1e-6);
    if (Float50(r.tau.hi) > rhs) ++bad;
    ++samples;
  }
  detail(std::to_string(samples) + " words, " + std::to_string(bad) + " violations");
  return report(6, "tau.upper <= log(2t)/(l-2) + 1e-6", bad == 0);
}

CurveSystem random_config() {
  CurveSystem sys;
  const int k = static_cast<int>(uniform(2, 4));
  std::vector<CurveId> cs;
  for (int i = 0; i < k; ++i) cs.push_back("c" + std::to_string(i));
  for (const auto& c : cs) sys.add_curve(c);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      sys.set_dist(cs[i], cs[j], uniform(3, 6));
      sys.set_inter(cs[i], cs[j], uniform(1, 9));
    }
  for (const auto& core : cs)
    for (const auto& x : cs)
      for (const auto& y : cs)
        if (core != x && core != y && x < y) sys.set_proj(core, x, y, uniform(0, 10));
  sys.set_M(uniform(1, 30));
  return singleton_multicurves(sys);
}

bool coherent(const BoundResult& r) {
  if (r.upper && r.lower > *r.upper) return false;
  if (r.exact && (r.lower != Rational(*r.exact) || !r.upper || *r.upper != r.lower)) return false;
  return true;
}

bool criterion7() {
  int bad = 0, comparisons = 0, results = 0;
  for (int i = 0; i < 100; ++i) {
    const CurveSystem sys = random_config();
    if (!validate(sys).ok()) {
      ++bad;
      continue;
    }
    const auto& cs = sys.curves();
    const Count M = sys.M();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Syllable> syl;
      const int len = static_cast<int>(uniform(2, 6));
      for (int j = 0; j < len; ++j) {
        CurveId c = cs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(cs.size()) - 1))];
        if (!syl.empty() && syl.back().curve == c) c = cs[(std::find(cs.begin(), cs.end(), c) - cs.begin() + 1) % cs.size()];
        const Exponent e = uniform(1, 2 * M + 20);
        syl.push_back({c, uniform(0, 1) ? e : -e});
      }
      const TwistWord w(syl);
      const BoundResult best = best_bound(w, sys);
      ++results;
      if (!coherent(best)) ++bad;
    }
    // alternating two-curve word, big exponents
    const CurveId a = cs[0], b = cs[1];
    std::vector<Syllable> alt;
    const int n = static_cast<int>(uniform(1, 3));
    for (int j = 0; j < n; ++j)
      for (const auto& c : {a, b}) {
        const Exponent e = uniform(2 * M + 4, 2 * M + 50);
        alt.push_back({c, uniform(0, 1) ? e : -e});
      }
    const TwistWord w(alt);
    const BoundResult exact = exact_two_filling(w, sys);
    const BoundResult multi = bounds_two_multicurve(w, sys, "{" + a + "}", "{" + b + "}");
    results += 2;
    if (!coherent(exact) || !coherent(multi)) ++bad;
    if (!exact.exact || !multi.conditions_met() || Rational(*exact.exact) != multi.lower) ++bad;
    ++comparisons;
  }
  detail(std::to_string(results) + " results, " + std::to_string(comparisons) + " exact/lower comparisons, " +
         std::to_string(bad) + " violations");
  return report(7, "bounds are coherent and the exact length equals the singleton lower bound", bad == 0);
}

bool criterion8() {
  int bad = 0;
  CurveSystem two;
  two.add_curve("a");
  two.add_curve("b");
  two.set_dist("a", "b", 3);
  two.add_multicurve("C1", {"a"});
  two.add_multicurve("C2", {"b"});
  const Count r2 = raag_threshold(two, RaagMode::TwoMulticurves, {"C1", "C2"}).required_power;
  if (two.M() != 100 || r2 != 204) ++bad;
  for (int i = 0; i < 20; ++i) {
    CurveSystem sys;
    const int k = static_cast<int>(uniform(2, 5));
    std::vector<CurveId> cs;
    for (int j = 0; j < k; ++j) cs.push_back("c" + std::to_string(j));
    for (const auto& c : cs) sys.add_curve(c);
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) sys.set_dist(cs[x], cs[y], uniform(3, 8));
    Count maxproj = 0;
    for (int core = 0; core < k; ++core)
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y) {
          if (core == x || core == y) continue;
          const Count p = uniform(0, 40);
          maxproj = std::max(maxproj, p);
          sys.set_proj(cs[core], cs[x], cs[y], p);
        }
    const Count got = raag_threshold(sys, RaagMode::FreeCurves, cs).required_power;
    if (got != 2 * 100 + 3 + maxproj) ++bad;
  }
  detail("two-multicurve power " + std::to_string(r2) + ", 20 projection tables, " + std::to_string(bad) +
         " mismatches");
  return report(8, "required_power = 204 for two multicurves and 2M+3+maxproj for free curves", bad == 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance experiments"};
  std::uint64_t seed = 20240917;
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);
  std::cout << "seed " << seed << "\n";

  bool all = true;
  auto run = [&](bool (*criterion)()) {
    gen.seed(seed);
    try {
      all = criterion() && all;
    } catch (const std::exception& e) {
      detail(std::string("exception: ") + e.what());
      all = false;
    }
  };
  for (auto* c : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8}) run(c);
  return all ? 0 : 1;
}
