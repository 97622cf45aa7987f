#include "twistlab/curve_config.hpp"

#include "twistlab/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

namespace twistlab {

using nlohmann::json;

namespace {

std::string pair_str(const std::string& name, const CurveId& a, const CurveId& b) {
  return name + "(" + a + "," + b + ")";
}

std::string triple_str(const std::string& name, const CurveId& c, const CurveId& x, const CurveId& y) {
  return name + "(" + c + ";" + x + "," + y + ")";
}

template <typename Map, typename Key>
void store(Map& map, const Key& key, Count value, std::vector<std::string>& conflicts,
           const std::string& label) {
  auto [it, inserted] = map.emplace(key, value);
  if (!inserted && it->second != value)
    conflicts.push_back(label + " given as both " + std::to_string(it->second) + " and " +
                        std::to_string(value));
}

}  // namespace

void CurveSystem::add_curve(const CurveId& c) {
  if (c.empty()) throw Error(ErrorKind::Malformed, "empty curve name");
  if (curve_set_.insert(c).second) curves_.push_back(c);
}

void CurveSystem::add_multicurve(const MulticurveId& name, const std::vector<CurveId>& members) {
  if (members.empty()) throw Error(ErrorKind::Malformed, "multicurve '" + name + "' is empty");
  if (!multicurves_.emplace(name, members).second)
    throw Error(ErrorKind::Malformed, "duplicate multicurve '" + name + "'");
}

void CurveSystem::set_dist(const CurveId& a, const CurveId& b, Count value) {
  store(dist_, PairKey{a, b}, value, conflicts_, pair_str("dist", a, b));
}

void CurveSystem::set_inter(const CurveId& a, const CurveId& b, Count value) {
  store(inter_, PairKey{a, b}, value, conflicts_, pair_str("inter", a, b));
}

void CurveSystem::set_proj(const CurveId& core, const CurveId& x, const CurveId& y, Count value) {
  store(proj_, TripleKey{core, x, y}, value, conflicts_, triple_str("proj", core, x, y));
}

void CurveSystem::set_M(Count m) {
  if (m <= 0) throw Error(ErrorKind::BadParameter, "M must be a positive integer");
  m_ = m;
  m_is_default_ = false;
}

const std::vector<CurveId>& CurveSystem::multicurve(const MulticurveId& name) const {
  auto it = multicurves_.find(name);
  if (it == multicurves_.end()) throw Error(ErrorKind::UnknownCurve, "no multicurve named '" + name + "'");
  return it->second;
}

std::optional<MulticurveId> CurveSystem::multicurve_of(const CurveId& c) const {
  for (const auto& [name, members] : multicurves_)
    if (std::find(members.begin(), members.end(), c) != members.end()) return name;
  return std::nullopt;
}

std::map<CurveId, MulticurveId> CurveSystem::partition() const {
  std::map<CurveId, MulticurveId> out;
  for (const auto& [name, members] : multicurves_)
    for (const auto& c : members) out.emplace(c, name);
  return out;
}

std::optional<Count> CurveSystem::dist(const CurveId& a, const CurveId& b) const {
  if (a == b) return 0;
  if (auto it = dist_.find({a, b}); it != dist_.end()) return it->second;
  if (auto it = dist_.find({b, a}); it != dist_.end()) return it->second;
  return std::nullopt;
}

std::optional<Count> CurveSystem::inter(const CurveId& a, const CurveId& b) const {
  if (a == b) return 0;
  if (auto it = inter_.find({a, b}); it != inter_.end()) return it->second;
  if (auto it = inter_.find({b, a}); it != inter_.end()) return it->second;
  return std::nullopt;
}

std::optional<Count> CurveSystem::proj(const CurveId& core, const CurveId& x, const CurveId& y) const {
  if (x == y) return 0;
  if (auto it = proj_.find({core, x, y}); it != proj_.end()) return it->second;
  if (auto it = proj_.find({core, y, x}); it != proj_.end()) return it->second;
  return std::nullopt;
}

Count CurveSystem::require_dist(const CurveId& a, const CurveId& b) const {
  auto d = dist(a, b);
  if (!d) throw Error(ErrorKind::MissingDistance, pair_str("dist", a, b) + " not stored");
  return *d;
}

Count CurveSystem::require_proj(const CurveId& core, const CurveId& x, const CurveId& y) const {
  auto p = proj(core, x, y);
  if (!p) throw Error(ErrorKind::MissingProjection, triple_str("proj", core, x, y) + " not stored");
  return *p;
}

std::optional<bool> CurveSystem::crosses(const CurveId& core, const CurveId& x) const {
  if (core == x) return false;
  if (auto i = inter(core, x)) return *i > 0;
  auto mc = multicurve_of(core);
  if (mc && multicurve_of(x) == mc) return false;
  return std::nullopt;
}

ValidationReport validate(const CurveSystem& sys) {
  ValidationReport report;
  auto add = [&](std::string kind, std::string message) {
    report.violations.push_back({std::move(kind), std::move(message)});
  };
  auto known = [&](const CurveId& c, const std::string& where) {
    if (!sys.has_curve(c)) add("unknown curve", "'" + c + "' used in " + where + " is not declared");
  };

  for (const auto& msg : sys.conflicts()) add("conflicting entries", msg);

  std::map<CurveId, MulticurveId> owner;
  for (const auto& [name, members] : sys.multicurves()) {
    for (const auto& c : members) {
      known(c, "multicurve " + name);
      auto [it, inserted] = owner.emplace(c, name);
      if (!inserted)
        add("overlapping multicurves", "'" + c + "' belongs to both " + it->second + " and " + name);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& a = members[i];
        const auto& b = members[j];
        auto in = sys.inter(a, b);
        auto d = sys.dist(a, b);
        if ((in && *in > 0) || (d && *d > 1))
          add("multicurve not disjoint", name + " contains " + a + " and " + b + " which intersect");
      }
  }

  for (const auto& [key, v] : sys.dist_entries()) {
    const auto& [a, b] = key;
    known(a, pair_str("dist", a, b));
    known(b, pair_str("dist", a, b));
    if (v < 0) add("negative value", pair_str("dist", a, b) + " = " + std::to_string(v));
    if (a == b && v != 0) add("nonzero self-distance", pair_str("dist", a, a) + " = " + std::to_string(v));
    if (a < b) {
      if (auto it = sys.dist_entries().find({b, a}); it != sys.dist_entries().end() && it->second != v)
        add("asymmetric dist", pair_str("asymmetric dist", a, b) + ": " + std::to_string(v) + " vs " +
                                   std::to_string(it->second));
    }
  }

  for (const auto& [key, v] : sys.inter_entries()) {
    const auto& [a, b] = key;
    known(a, pair_str("inter", a, b));
    known(b, pair_str("inter", a, b));
    if (v < 0) add("negative value", pair_str("inter", a, b) + " = " + std::to_string(v));
    if (a < b) {
      if (auto it = sys.inter_entries().find({b, a}); it != sys.inter_entries().end() && it->second != v)
        add("asymmetric inter", pair_str("asymmetric inter", a, b));
    }
    if (a == b) continue;
    if (auto d = sys.dist(a, b)) {
      if (v == 0 && *d > 1)
        add("dist/inter mismatch", pair_str("inter", a, b) + " = 0 but dist = " + std::to_string(*d));
      if (v >= 1 && *d < 2)
        add("dist/inter mismatch", pair_str("inter", a, b) + " = " + std::to_string(v) +
                                       " but dist = " + std::to_string(*d));
    }
  }

  for (const auto& [key, v] : sys.proj_entries()) {
    const auto& [c, x, y] = key;
    const std::string label = triple_str("proj", c, x, y);
    known(c, label);
    known(x, label);
    known(y, label);
    if (v < 0) add("negative value", label + " = " + std::to_string(v));
    if (x == y && v != 0) add("nonzero self-projection", label + " = " + std::to_string(v));
    if (x < y) {
      if (auto it = sys.proj_entries().find({c, y, x}); it != sys.proj_entries().end() && it->second != v)
        add("asymmetric proj", label + " vs " + triple_str("proj", c, y, x));
    }
    for (const auto& z : {x, y}) {
      if (z == c) {
        add("projection without crossing", label + ": the core itself has no projection");
      } else if (auto in = sys.inter(c, z); in && *in == 0) {
        add("projection without crossing", label + ": inter(" + c + "," + z + ") = 0");
      }
    }
  }

  const auto& cs = sys.curves();
  for (const auto& x : cs)
    for (const auto& y : cs)
      for (const auto& z : cs) {
        if (!(x < z) || y == x || y == z) continue;
        auto xy = sys.dist(x, y), yz = sys.dist(y, z), xz = sys.dist(x, z);
        if (xy && yz && xz && *xz > *xy + *yz)
          add("triangle inequality", "dist(" + x + "," + z + ") = " + std::to_string(*xz) + " > dist(" +
                                         x + "," + y + ") + dist(" + y + "," + z + ") = " +
                                         std::to_string(*xy + *yz));
      }
  return report;
}

bool filling_pair(const CurveSystem& sys, const CurveId& a, const CurveId& b) {
  return sys.require_dist(a, b) >= 3;
}

Count dist_multicurve(const CurveSystem& sys, const std::vector<CurveId>& A, const std::vector<CurveId>& B) {
  if (A.empty() || B.empty()) throw Error(ErrorKind::MissingDistance, "empty multicurve");
  Count best = std::numeric_limits<Count>::max();
  for (const auto& a : A)
    for (const auto& b : B) best = std::min(best, sys.require_dist(a, b));
  return best;
}

Count proj_multicurve(const CurveSystem& sys, const CurveId& core, const std::vector<CurveId>& C,
                      const std::vector<CurveId>& D) {
  Count best = 0;
  for (const auto& c : C)
    for (const auto& d : D) {
      auto cc = sys.crosses(core, c);
      auto dc = sys.crosses(core, d);
      if ((cc && !*cc) || (dc && !*dc)) continue;
      // Undetermined crossing: a stored projection implies both cross.
      best = std::max(best, sys.require_proj(core, c, d));
    }
  return best;
}

namespace {

const json& field(const json& doc, const char* key) { return doc.at(key); }

Count as_count(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw Error(ErrorKind::Malformed, what + " must be an integer");
  return v.get<Count>();
}

std::string as_name(const json& v, const std::string& what) {
  if (!v.is_string()) throw Error(ErrorKind::Malformed, what + " must be a string");
  return v.get<std::string>();
}

}  // namespace

CurveSystem curve_system_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Malformed, "configuration must be a JSON object");
  static const std::set<std::string> allowed{"curves", "multicurves", "dist", "proj", "inter", "M", "surface"};
  for (const auto& [key, _] : doc.items())
    if (!allowed.contains(key)) throw Error(ErrorKind::Malformed, "unknown configuration field '" + key + "'");

  CurveSystem sys;
  if (!doc.contains("curves") || !doc["curves"].is_array())
    throw Error(ErrorKind::Malformed, "'curves' must be an array of strings");
  for (const auto& c : field(doc, "curves")) sys.add_curve(as_name(c, "curve name"));

  if (doc.contains("multicurves")) {
    const auto& mcs = doc["multicurves"];
    if (!mcs.is_object()) throw Error(ErrorKind::Malformed, "'multicurves' must be an object");
    for (const auto& [name, members] : mcs.items()) {
      if (!members.is_array()) throw Error(ErrorKind::Malformed, "multicurve '" + name + "' must be an array");
      std::vector<CurveId> list;
      for (const auto& m : members) list.push_back(as_name(m, "multicurve member"));
      sys.add_multicurve(name, list);
    }
  }

  auto rows = [&](const char* key, std::size_t width, auto&& sink) {
    if (!doc.contains(key)) return;
    const auto& arr = doc[key];
    if (!arr.is_array()) throw Error(ErrorKind::Malformed, std::string("'") + key + "' must be an array");
    for (const auto& row : arr) {
      if (!row.is_array() || row.size() != width)
        throw Error(ErrorKind::Malformed, std::string("each '") + key + "' entry needs " +
                                              std::to_string(width) + " elements");
      sink(row);
    }
  };
  rows("dist", 3, [&](const json& r) {
    sys.set_dist(as_name(r[0], "dist curve"), as_name(r[1], "dist curve"), as_count(r[2], "dist value"));
  });
  rows("inter", 3, [&](const json& r) {
    sys.set_inter(as_name(r[0], "inter curve"), as_name(r[1], "inter curve"), as_count(r[2], "inter value"));
  });
  rows("proj", 4, [&](const json& r) {
    sys.set_proj(as_name(r[0], "proj core"), as_name(r[1], "proj curve"), as_name(r[2], "proj curve"),
                 as_count(r[3], "proj value"));
  });

  if (doc.contains("M")) sys.set_M(as_count(doc["M"], "M"));
  if (doc.contains("surface")) {
    const auto& s = doc["surface"];
    if (!s.is_object()) throw Error(ErrorKind::Malformed, "'surface' must be an object");
    for (const auto& [key, _] : s.items())
      if (key != "genus" && key != "punctures")
        throw Error(ErrorKind::Malformed, "unknown surface field '" + key + "'");
    SurfaceKind kind;
    kind.genus = s.contains("genus") ? as_count(s["genus"], "genus") : 0;
    kind.punctures = s.contains("punctures") ? as_count(s["punctures"], "punctures") : 0;
    if (kind.genus < 0 || kind.punctures < 0) throw Error(ErrorKind::Malformed, "negative surface data");
    sys.set_surface(kind);
  }
  return sys;
}

CurveSystem load_curve_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Malformed, "cannot open configuration '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Malformed, path.string() + ": " + e.what());
  }
  return curve_system_from_json(doc);
}

json to_json(const CurveSystem& sys) {
  json doc;
  doc["curves"] = sys.curves();
  doc["multicurves"] = json::object();
  for (const auto& [name, members] : sys.multicurves()) doc["multicurves"][name] = members;
  doc["dist"] = json::array();
  for (const auto& [k, v] : sys.dist_entries()) doc["dist"].push_back({k.first, k.second, v});
  doc["inter"] = json::array();
  for (const auto& [k, v] : sys.inter_entries()) doc["inter"].push_back({k.first, k.second, v});
  doc["proj"] = json::array();
  for (const auto& [k, v] : sys.proj_entries())
    doc["proj"].push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  doc["M"] = sys.M();
  if (sys.surface()) doc["surface"] = {{"genus", sys.surface()->genus}, {"punctures", sys.surface()->punctures}};
  return doc;
}

std::string digest(const CurveSystem& sys) {
  const std::string text = to_json(sys).dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace twistlab
