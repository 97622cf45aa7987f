#pragma once

// The trusted geometric input: curves, multicurves, curve-graph distances,
// annular projection distances, intersection numbers and the constant M of
// the bounded geodesic image theorem.

#include "twistlab/twist_word.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace twistlab {

using Count = std::int64_t;

inline constexpr Count kDefaultM = 100;

struct SurfaceKind {
  Count genus = 0;
  Count punctures = 0;

  /// 3g + p - 4
  Count omega() const { return 3 * genus + punctures - 4; }
};

class CurveSystem {
 public:
  CurveSystem() = default;

  void add_curve(const CurveId& c);
  /// Members must also be declared with add_curve; validate() reports strays.
  void add_multicurve(const MulticurveId& name, const std::vector<CurveId>& members);
  void set_dist(const CurveId& a, const CurveId& b, Count value);
  void set_inter(const CurveId& a, const CurveId& b, Count value);
  void set_proj(const CurveId& core, const CurveId& x, const CurveId& y, Count value);
  void set_M(Count m);
  void set_surface(SurfaceKind s) { surface_ = s; }

  const std::vector<CurveId>& curves() const { return curves_; }
  bool has_curve(const CurveId& c) const { return curve_set_.contains(c); }
  const std::map<MulticurveId, std::vector<CurveId>>& multicurves() const { return multicurves_; }
  const std::vector<CurveId>& multicurve(const MulticurveId& name) const;
  std::optional<MulticurveId> multicurve_of(const CurveId& c) const;
  /// curve -> multicurve for every curve in some multicurve.
  std::map<CurveId, MulticurveId> partition() const;

  Count M() const { return m_; }
  bool M_is_default() const { return m_is_default_; }
  const std::optional<SurfaceKind>& surface() const { return surface_; }

  /// dist(x, x) = 0; otherwise the stored value for (a, b) or (b, a).
  std::optional<Count> dist(const CurveId& a, const CurveId& b) const;
  std::optional<Count> inter(const CurveId& a, const CurveId& b) const;
  /// proj(c, x, x) = 0; otherwise the stored value for (x, y) or (y, x).
  std::optional<Count> proj(const CurveId& core, const CurveId& x, const CurveId& y) const;

  /// As above but throwing Error{MissingDistance / MissingProjection}.
  Count require_dist(const CurveId& a, const CurveId& b) const;
  Count require_proj(const CurveId& core, const CurveId& x, const CurveId& y) const;

  /// Whether x crosses the annulus around `core`, as far as the data tells:
  /// false for the core itself and for curves of the core's multicurve,
  /// inter > 0 when inter is stored, nullopt when undetermined.
  std::optional<bool> crosses(const CurveId& core, const CurveId& x) const;

  using PairKey = std::pair<CurveId, CurveId>;
  using TripleKey = std::tuple<CurveId, CurveId, CurveId>;
  const std::map<PairKey, Count>& dist_entries() const { return dist_; }
  const std::map<PairKey, Count>& inter_entries() const { return inter_; }
  const std::map<TripleKey, Count>& proj_entries() const { return proj_; }
  /// Entries given twice with different values (kept for validation).
  const std::vector<std::string>& conflicts() const { return conflicts_; }

 private:
  std::vector<CurveId> curves_;
  std::set<CurveId> curve_set_;
  std::map<MulticurveId, std::vector<CurveId>> multicurves_;
  std::map<PairKey, Count> dist_;
  std::map<PairKey, Count> inter_;
  std::map<TripleKey, Count> proj_;
  std::vector<std::string> conflicts_;
  Count m_ = kDefaultM;
  bool m_is_default_ = true;
  std::optional<SurfaceKind> surface_;
};

struct Violation {
  std::string kind;     // short tag, e.g. "asymmetric dist"
  std::string message;  // names the offending tuple
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const CurveSystem& sys);

/// dist(a, b) >= 3. Throws Error{MissingDistance}.
bool filling_pair(const CurveSystem& sys, const CurveId& a, const CurveId& b);

/// min over a in A, b in B of dist(a, b). Throws Error{MissingDistance}.
Count dist_multicurve(const CurveSystem& sys, const std::vector<CurveId>& A,
                      const std::vector<CurveId>& B);

/// max of proj(core, c, d) over c in C, d in D both crossing the core; 0 when
/// no pair crosses. Throws Error{MissingProjection}.
Count proj_multicurve(const CurveSystem& sys, const CurveId& core, const std::vector<CurveId>& C,
                      const std::vector<CurveId>& D);

/// Strict integer threshold: smallest integer n with n > x.
inline Count smallest_above(Count x) { return x + 1; }

/// JSON schema: curves, multicurves, dist, proj, inter, M, surface. Unknown
/// fields are rejected with Error{Malformed}.
CurveSystem curve_system_from_json(const nlohmann::json& doc);
CurveSystem load_curve_system(const std::filesystem::path& path);
nlohmann::json to_json(const CurveSystem& sys);

/// FNV-1a over the canonical JSON dump, as 16 hex digits.
std::string digest(const CurveSystem& sys);

}  // namespace twistlab
