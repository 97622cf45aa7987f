#include "twistlab/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace twistlab {

Json rational_json(const Rational& x) { return to_decimal_string(x); }

Json interval_json(const Interval& iv) { return Json::array({to_decimal_string(iv.lo), to_decimal_string(iv.hi)}); }

Json integer_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json to_json(const ConditionVerdict& v) {
  Json j{{"description", v.description}, {"passed", v.passed}};
  if (!v.passed) j["witness"] = v.witness;
  return j;
}

Json to_json(const BoundResult& r) {
  Json j;
  j["theorem"] = to_string(r.theorem);
  j["pseudo_anosov"] = r.pseudo_anosov;
  j["exact"] = r.exact ? integer_json(*r.exact) : Json(nullptr);
  j["lower"] = rational_json(r.lower);
  j["upper"] = r.upper ? rational_json(*r.upper) : Json("inf");
  j["conditions"] = Json::array();
  for (const auto& c : r.conditions) j["conditions"].push_back(to_json(c));
  if (!r.conditions_met() && r.unverified_lower)
    j["unverified"] = {{"lower", rational_json(*r.unverified_lower)}, {"upper", rational_json(*r.unverified_upper)}};
  j["notes"] = r.notes;
  return j;
}

Json to_json(const MinimalWordResult& r) {
  return {{"collected", r.collected.str()},
          {"verdict", to_string(r.verdict)},
          {"k", r.k},
          {"original", to_json(r.original)}};
}

Json to_json(const RatioReport& r) {
  Json j{{"expanded_word", r.expanded.str()},
         {"n", r.n},
         {"l", r.l},
         {"intersection", r.intersection},
         {"t", integer_json(r.t)},
         {"lC", integer_json(r.lC)},
         {"lambda", interval_json(r.lambda)},
         {"lT", interval_json(r.lT)},
         {"tau", interval_json(r.tau)},
         {"optimizer_upper", interval_json(r.optimizer_upper)},
         {"within_bound", r.within_bound}};
  j["omega"] = r.omega ? Json(*r.omega) : Json(nullptr);
  return j;
}

Json to_json(const RaagCertificate& c) {
  return {{"mode", to_string(c.mode)},
          {"required_power", c.required_power},
          {"max_projection", c.max_projection},
          {"group_shape", c.group_shape},
          {"ranks", c.ranks},
          {"conditions_used", c.conditions_used},
          {"notes", c.notes}};
}

Json to_json(const farey::VerificationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"m", row.m}, {"distance", row.distance}, {"expected", row.expected}, {"equal", row.equal}});
  Json exps = Json::array();
  for (const auto& e : r.exponents) exps.push_back(integer_json(e));
  return {{"a", r.a.str()},
          {"b", r.b.str()},
          {"l", r.l},
          {"n", r.n},
          {"exponents", exps},
          {"min_abs_exponent", integer_json(r.min_abs_exponent)},
          {"alternating_signs", r.alternating_signs},
          {"v1", r.v1.str()},
          {"f", Json::array({integer_json(r.f.a), integer_json(r.f.b), integer_json(r.f.c), integer_json(r.f.d)})},
          {"rows", rows},
          {"all_equal", r.all_equal()}};
}

Json to_json(const farey::ThresholdSearch& s) {
  Json tried = Json::array();
  for (const auto& t : s.tried) tried.push_back(integer_json(t));
  return {{"threshold", s.threshold ? integer_json(*s.threshold) : Json(nullptr)},
          {"tried", tried},
          {"last", to_json(s.last)}};
}

std::vector<std::string> system_warnings(const CurveSystem& sys) {
  std::vector<std::string> out;
  if (sys.M_is_default())
    out.push_back("M = " + std::to_string(kDefaultM) +
                  " is the default bounded geodesic image constant; thresholds depend on this choice");
  return out;
}

std::string torus_warning() {
  return "torus model: distances come from the Farey graph, projections from the floor-difference annular model; "
         "the torus is sporadic, so agreement at a given threshold says nothing about the universal constant M";
}

Json envelope(const std::string& command, Json input_echo, Json result, const std::vector<std::string>& warnings) {
  return {{"tool_version", kToolVersion},
          {"command", command},
          {"input_echo", std::move(input_echo)},
          {"result", std::move(result)},
          {"warnings", warnings}};
}

namespace {

void render(const Json& v, const std::string& indent, std::ostringstream& os) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    const std::string key = v.is_object() ? it.key() : "-";
    const bool scalar_array = x.is_array() && std::none_of(x.begin(), x.end(), [](const Json& e) {
                                return e.is_structured();
                              });
    if (x.is_primitive() || scalar_array) {
      os << indent << key << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
    } else {
      os << indent << key << ":\n";
      render(x, indent + "  ", os);
    }
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  if (doc.is_structured()) {
    render(doc, "", os);
  } else {
    os << doc.dump() << "\n";
  }
  return os.str();
}

}  // namespace twistlab
