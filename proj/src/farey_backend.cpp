#include "twistlab/farey_backend.hpp"

#include "twistlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace twistlab::farey {

namespace mp = boost::multiprecision;

Slope::Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw Error(ErrorKind::BadParameter, "slope (0,0)");
  if (mp::gcd(p_, q_) != 1)
    throw Error(ErrorKind::BadParameter, "slope " + p_.str() + "/" + q_.str() + " is not primitive");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Slope Slope::parse(std::string_view text) {
  try {
    const auto slash = text.find('/');
    BigInt p(std::string(text.substr(0, slash)));
    BigInt q = 1;
    if (slash != std::string_view::npos) q = BigInt(std::string(text.substr(slash + 1)));
    return Slope(p, q);
  } catch (const Error&) {
    throw Error(ErrorKind::Malformed, "bad slope '" + std::string(text) + "'");
  } catch (const std::exception&) {
    throw Error(ErrorKind::Malformed, "bad slope '" + std::string(text) + "'");
  }
}

Rational Slope::value() const {
  if (is_infinity()) throw Error(ErrorKind::BadParameter, "value of the infinite slope");
  return Rational(p_, q_);
}

std::string Slope::str() const { return p_.str() + "/" + q_.str(); }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 Matrix2::pow(std::int64_t e) const {
  Matrix2 base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Matrix2 out;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

Slope Matrix2::apply(const Slope& s) const { return Slope(a * s.p() + b * s.q(), c * s.p() + d * s.q()); }

BigInt intersection(const Slope& x, const Slope& y) { return mp::abs(x.p() * y.q() - y.p() * x.q()); }

Matrix2 base_change(const Slope& core) {
  if (core.is_infinity()) return Matrix2::identity();
  // p s - r q = 1  =>  s = p^{-1} mod q, r = (p s - 1) / q.
  const auto eg = extended_gcd(core.p(), core.q());  // p x + q y = 1
  BigInt s = eg.x % core.q();
  if (s < 0) s += core.q();
  BigInt r = (core.p() * s - 1) / core.q();
  return {core.p(), r, core.q(), s};
}

Matrix2 twist_matrix(const Slope& c, const BigInt& e) {
  // B [[1, e], [0, 1]] B^{-1} = I + e [[-pq, p^2], [-q^2, pq]]
  const BigInt& p = c.p();
  const BigInt& q = c.q();
  return {1 - e * p * q, e * p * p, -e * q * q, 1 + e * p * q};
}

Matrix2 twist_matrix(const Slope& c, std::int64_t e) { return twist_matrix(c, BigInt(e)); }

namespace {

// Distance from infinity to p/q (q >= 1) in the Farey graph.
//
// Walks the Farey triangles crossed by the vertical line through p/q. Each
// crossed edge {L, R} separates infinity from p/q, so the new vertex w of the
// next triangle has d(w) = min(d(L), d(R)) + 1. A and B are the scaled gaps
// p/q - L and R - p/q; the walk is the Euclidean algorithm on (A, B), and a
// run of J steps around a fixed pivot is collapsed because the recursion
// reaches its fixed point d(pivot) + 1 after at most two steps.
std::int64_t distance_from_infinity(const BigInt& p, const BigInt& q) {
  if (q == 1) return 1;
  BigInt A = p - floor_div(p, q) * q;  // p mod q, in [1, q)
  BigInt B = q - A;
  std::int64_t dL = 1, dR = 1;
  auto run = [](std::int64_t pivot, std::int64_t moving, const BigInt& steps) {
    std::int64_t v = std::min(pivot, moving) + 1;
    for (BigInt j = 1; j < steps; ++j) {
      if (v >= pivot) return pivot + 1;
      v = std::min(pivot, v) + 1;
    }
    return v;
  };
  while (A != B) {
    if (A < B) {
      BigInt J = (B - 1) / A;
      dR = run(dL, dR, J);
      B -= J * A;
    } else {
      BigInt J = (A - 1) / B;
      dL = run(dR, dL, J);
      A -= J * B;
    }
  }
  return std::min(dL, dR) + 1;
}

}  // namespace

std::int64_t farey_distance(const Slope& x, const Slope& y) {
  if (x == y) return 0;
  const Slope image = base_change(x).inverse().apply(y);
  return distance_from_infinity(image.p(), image.q());
}

Slope geodesic_neighbor(const Slope& from, const Slope& to) {
  const std::int64_t l = farey_distance(from, to);
  if (l < 2) throw Error(ErrorKind::BadParameter, "geodesic_neighbor needs distance >= 2");
  const Matrix2 B = base_change(from);
  const Slope image = B.inverse().apply(to);
  const BigInt n = floor(image.value());
  for (const BigInt& k : {n, BigInt(n + 1)}) {
    const Slope candidate(k, 1);
    if (farey_distance(candidate, image) == l - 1) return B.apply(candidate);
  }
  throw Error(ErrorKind::BadParameter, "no geodesic neighbor found");  // unreachable for l >= 2
}

namespace {

using Small = std::pair<std::int64_t, std::int64_t>;

Small canonical(std::int64_t p, std::int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

template <typename Visit>
void for_each_neighbor(Small v, std::int64_t budget, Visit&& visit) {
  const auto [p, q] = v;
  if (q == 0) {
    for (std::int64_t k = -budget; k <= budget; ++k) visit(Small{k, 1});
    return;
  }
  // p s0 - q r0 = 1
  std::int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1, a = p, b = q;
  while (b != 0) {
    const std::int64_t t = a / b;
    std::tie(a, b) = std::make_pair(b, a - t * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - t * y1);
  }
  if (a < 0) {
    x0 = -x0;
    y0 = -y0;
  }
  const std::int64_t s0 = x0, r0 = -y0;  // p x0 + q y0 = 1
  auto fdiv = [](std::int64_t n, std::int64_t d) { return n / d - ((n % d != 0) && ((n < 0) != (d < 0))); };
  const std::int64_t kmin = -fdiv(budget + s0, q);  // ceil((-budget - s0) / q)
  const std::int64_t kmax = fdiv(budget - s0, q);
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    const std::int64_t r = r0 + k * p, s = s0 + k * q;
    if (r < -budget || r > budget) continue;
    visit(canonical(r, s));
  }
}

struct SmallHash {
  std::size_t operator()(const Small& s) const noexcept {
    return std::hash<std::int64_t>()(s.first * 1000003 + s.second);
  }
};

bool within(const Slope& s, std::int64_t budget) {
  return mp::abs(s.p()) <= budget && s.q() <= budget;
}

}  // namespace

std::int64_t farey_distance_bfs(const Slope& x, const Slope& y, std::int64_t budget) {
  if (!within(x, budget) || !within(y, budget))
    throw Error(ErrorKind::BudgetExhausted, "endpoint outside budget " + std::to_string(budget));
  const Small sx{x.p().convert_to<std::int64_t>(), x.q().convert_to<std::int64_t>()};
  const Small sy{y.p().convert_to<std::int64_t>(), y.q().convert_to<std::int64_t>()};
  if (sx == sy) return 0;

  std::unordered_map<Small, std::int64_t, SmallHash> seen[2];
  std::vector<Small> frontier[2] = {{sx}, {sy}};
  seen[0][sx] = 0;
  seen[1][sy] = 0;
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<Small> next;
    std::int64_t best = -1;
    for (const Small& u : frontier[side]) {
      const std::int64_t du = seen[side][u];
      for_each_neighbor(u, budget, [&](Small w) {
        if (auto it = seen[1 - side].find(w); it != seen[1 - side].end()) {
          const std::int64_t total = du + 1 + it->second;
          if (best < 0 || total < best) best = total;
        }
        if (seen[side].emplace(w, du + 1).second) next.push_back(w);
      });
    }
    if (best >= 0) return best;
    frontier[side] = std::move(next);
  }
  throw Error(ErrorKind::BudgetExhausted, "no path within budget " + std::to_string(budget));
}

BoundedFareyGraph::BoundedFareyGraph(std::int64_t budget) : budget_(budget) {
  if (budget < 1) throw Error(ErrorKind::BadParameter, "budget must be >= 1");
  index_.assign(static_cast<std::size_t>((2 * budget + 1) * (budget + 1)), -1);
  auto slot = [&](std::int64_t p, std::int64_t q) {
    return static_cast<std::size_t>((p + budget) * (budget + 1) + q);
  };
  auto add = [&](std::int64_t p, std::int64_t q) {
    index_[slot(p, q)] = static_cast<std::int32_t>(vertices_.size());
    vertices_.emplace_back(p, q);
  };
  add(1, 0);
  for (std::int64_t q = 1; q <= budget; ++q)
    for (std::int64_t p = -budget; p <= budget; ++p)
      if (std::gcd(p, q) == 1) add(p, q);
  adjacency_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for_each_neighbor(vertices_[i], budget, [&](Small w) {
      adjacency_[i].push_back(static_cast<std::uint32_t>(index_[slot(w.first, w.second)]));
    });
}

std::optional<std::size_t> BoundedFareyGraph::index_of(std::int64_t p, std::int64_t q) const {
  const auto [cp, cq] = canonical(p, q);
  if (cp < -budget_ || cp > budget_ || cq > budget_) return std::nullopt;
  const auto v = index_[static_cast<std::size_t>((cp + budget_) * (budget_ + 1) + cq)];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

std::vector<std::int32_t> BoundedFareyGraph::distances_from(std::size_t source) const {
  std::vector<std::int32_t> dist(vertices_.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t w : adjacency_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::int64_t annular_distance(const Slope& core, const Slope& x, const Slope& y) {
  if (intersection(core, x) == 0 || intersection(core, y) == 0)
    throw Error(ErrorKind::CoreDisjoint, "annular_distance around " + core.str() + " needs " + x.str() +
                                             " and " + y.str() + " to cross it");
  const Matrix2 U = base_change(core).inverse();
  const Rational xi = U.apply(x).value();
  const Rational yi = U.apply(y).value();
  if (xi == yi) return 0;
  return (mp::abs(floor(xi) - floor(yi)) + 2).convert_to<std::int64_t>();
}

bool VerificationReport::all_equal() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.equal; });
}

VerificationReport verify_main_theorem(const Slope& a, const Slope& b, const std::vector<BigInt>& exponents,
                                       unsigned m_max, const BigInt& threshold) {
  VerificationReport report;
  report.a = a;
  report.b = b;
  report.exponents = exponents;
  report.l = farey_distance(a, b);
  if (report.l < 3)
    throw Error(ErrorKind::ConditionUnmet, "d(a,b) = " + std::to_string(report.l) + " < 3: a and b do not fill");
  if (exponents.empty() || exponents.size() % 2 != 0)
    throw Error(ErrorKind::ConditionUnmet, "the word must alternate a, b with 2n syllables");
  report.n = static_cast<unsigned>(exponents.size() / 2);
  report.min_abs_exponent = mp::abs(exponents.front());
  report.alternating_signs = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const BigInt mag = mp::abs(exponents[i]);
    if (mag == 0) throw Error(ErrorKind::ConditionUnmet, "zero exponent");
    if (mag < threshold)
      throw Error(ErrorKind::ConditionUnmet, "|e_" + std::to_string(i + 1) + "| = " + mag.str() +
                                                 " below threshold " + threshold.str());
    report.min_abs_exponent = std::min(report.min_abs_exponent, mag);
    if (i > 0 && (exponents[i] > 0) == (exponents[i - 1] > 0)) report.alternating_signs = false;
  }

  for (std::size_t i = 0; i < exponents.size(); ++i)
    report.f = report.f * twist_matrix(i % 2 == 0 ? a : b, exponents[i]);
  report.v1 = geodesic_neighbor(a, b);

  Matrix2 fm;
  for (unsigned m = 1; m <= m_max; ++m) {
    fm = fm * report.f;
    VerificationRow row;
    row.m = m;
    row.distance = farey_distance(report.v1, fm.apply(report.v1));
    row.expected = 2 * static_cast<std::int64_t>(m) * report.n * (report.l - 2);
    row.equal = row.distance == row.expected;
    report.rows.push_back(row);
  }
  return report;
}

ThresholdSearch find_equality_threshold(const Slope& a, const Slope& b, const std::vector<BigInt>& exponents,
                                        unsigned m_max, const BigInt& start, const BigInt& cap) {
  ThresholdSearch search;
  for (BigInt t = start; t <= cap; t *= 2) {
    std::vector<BigInt> raised = exponents;
    for (auto& e : raised)
      if (mp::abs(e) < t) e = e < 0 ? BigInt(-t) : t;
    search.tried.push_back(t);
    search.last = verify_main_theorem(a, b, raised, m_max, t);
    if (search.last.all_equal()) {
      search.threshold = t;
      break;
    }
  }
  return search;
}

CurveSystem export_curve_system(const std::vector<Slope>& slopes, std::optional<Count> M) {
  std::vector<Slope> unique = slopes;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  CurveSystem sys;
  for (const auto& s : unique) sys.add_curve(s.str());
  for (const auto& s : unique) sys.add_multicurve("{" + s.str() + "}", {s.str()});
  for (std::size_t i = 0; i < unique.size(); ++i)
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      sys.set_dist(unique[i].str(), unique[j].str(), farey_distance(unique[i], unique[j]));
      sys.set_inter(unique[i].str(), unique[j].str(), intersection(unique[i], unique[j]).convert_to<Count>());
    }
  for (const auto& core : unique)
    for (std::size_t i = 0; i < unique.size(); ++i)
      for (std::size_t j = i + 1; j < unique.size(); ++j) {
        if (unique[i] == core || unique[j] == core) continue;
        sys.set_proj(core.str(), unique[i].str(), unique[j].str(), annular_distance(core, unique[i], unique[j]));
      }
  if (M) sys.set_M(*M);
  return sys;
}

}  // namespace twistlab::farey
