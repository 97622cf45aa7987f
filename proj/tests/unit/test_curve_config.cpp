#include "doctest.h"

#include "twistlab/curve_config.hpp"
#include "twistlab/errors.hpp"

#include <algorithm>

using namespace twistlab;

namespace {

bool has_kind(const ValidationReport& r, const std::string& kind) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

CurveSystem three_curves() {
  CurveSystem s;
  for (const char* c : {"a", "b", "c"}) s.add_curve(c);
  return s;
}

}  // namespace

TEST_SUITE("curve_config") {

TEST_CASE("asymmetric dist is reported") {
  CurveSystem s = three_curves();
  s.set_dist("a", "b", 3);
  s.set_dist("b", "a", 4);
  const auto r = validate(s);
  CHECK_FALSE(r.ok());
  CHECK(has_kind(r, "asymmetric dist"));
}

TEST_CASE("triangle inequality is reported") {
  CurveSystem s = three_curves();
  s.set_dist("a", "b", 5);
  s.set_dist("b", "c", 1);
  s.set_dist("a", "c", 1);
  CHECK(has_kind(validate(s), "triangle inequality"));
}

TEST_CASE("intersecting curves in one multicurve") {
  CurveSystem s = three_curves();
  s.add_multicurve("A", {"a", "b"});
  s.set_inter("a", "b", 2);
  CHECK(has_kind(validate(s), "multicurve not disjoint"));
}

TEST_CASE("a consistent system validates") {
  CurveSystem s = three_curves();
  s.set_dist("a", "b", 3);
  s.set_dist("b", "c", 3);
  s.set_dist("a", "c", 4);
  s.set_inter("a", "b", 5);
  s.set_proj("b", "a", "c", 2);
  CHECK(validate(s).ok());
}

TEST_CASE("filling_pair") {
  CurveSystem s = three_curves();
  s.set_dist("a", "b", 3);
  s.set_dist("a", "c", 2);
  s.set_dist("b", "c", 1);
  CHECK(filling_pair(s, "a", "b"));
  CHECK_FALSE(filling_pair(s, "a", "c"));
  CHECK_FALSE(filling_pair(s, "b", "c"));
  CurveSystem t = three_curves();
  CHECK_THROWS_AS(filling_pair(t, "a", "b"), Error);
}

TEST_CASE("dist_multicurve") {
  CurveSystem s;
  for (const char* c : {"a1", "a2", "b1"}) s.add_curve(c);
  s.set_dist("a1", "b1", 3);
  s.set_dist("a2", "b1", 4);
  CHECK(dist_multicurve(s, {"a1", "a2"}, {"b1"}) == 3);
  CHECK(dist_multicurve(s, {"a2"}, {"b1"}) == 4);
  CHECK(dist_multicurve(s, {"a1", "b1"}, {"b1"}) == 0);
  try {
    dist_multicurve(s, {"a1"}, {"a2"});
    FAIL("expected MissingDistance");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingDistance);
  }
}

TEST_CASE("proj_multicurve") {
  CurveSystem s;
  for (const char* c : {"g", "c1", "c2", "d1", "d2", "e"}) s.add_curve(c);
  for (const char* c : {"c1", "c2", "d1", "d2"}) s.set_inter("g", c, 1);
  s.set_inter("g", "e", 0);
  s.set_proj("g", "c1", "d1", 7);
  CHECK(proj_multicurve(s, "g", {"c1"}, {"d1"}) == 7);
  s.set_proj("g", "c1", "d2", 1);
  s.set_proj("g", "c2", "d1", 4);
  s.set_proj("g", "c2", "d2", 2);
  CHECK(proj_multicurve(s, "g", {"c1", "c2"}, {"d1", "d2"}) == 7);
  CHECK(proj_multicurve(s, "g", {"e"}, {"e"}) == 0);
  CHECK_THROWS_AS(proj_multicurve(s, "g", {"c1"}, {"c2"}), Error);
}

TEST_CASE("maximum over three pairs") {
  CurveSystem s;
  for (const char* c : {"g", "c1", "c2", "d1"}) s.add_curve(c);
  for (const char* c : {"c1", "c2", "d1"}) s.set_inter("g", c, 2);
  s.set_proj("g", "c1", "d1", 1);
  s.set_proj("g", "c2", "d1", 4);
  s.set_proj("g", "c1", "c2", 2);
  CHECK(proj_multicurve(s, "g", {"c1", "c2"}, {"d1", "c2"}) == 4);
}

TEST_CASE("strict threshold") {
  CHECK(smallest_above(203) == 204);
  CHECK(smallest_above(0) == 1);
}

TEST_CASE("JSON round trip and rejection") {
  const nlohmann::json doc = nlohmann::json::parse(R"({
    "curves": ["a", "b"], "multicurves": {"A": ["a"], "B": ["b"]},
    "dist": [["a", "b", 3]], "inter": [["a", "b", 1]], "proj": [], "M": 7,
    "surface": {"genus": 2, "punctures": 0}})");
  const CurveSystem s = curve_system_from_json(doc);
  CHECK(s.M() == 7);
  CHECK_FALSE(s.M_is_default());
  CHECK(s.dist("b", "a") == 3);
  CHECK(s.surface()->omega() == 2);
  CHECK(validate(s).ok());
  const CurveSystem again = curve_system_from_json(to_json(s));
  CHECK(digest(again) == digest(s));
  CHECK(digest(s).size() == 16);

  nlohmann::json bad = doc;
  bad["extra"] = 1;
  CHECK_THROWS_AS(curve_system_from_json(bad), Error);
  bad = doc;
  bad["dist"] = nlohmann::json::array({nlohmann::json::array({"a", "b"})});
  CHECK_THROWS_AS(curve_system_from_json(bad), Error);
  bad = doc;
  bad["surface"]["boundary"] = 1;
  CHECK_THROWS_AS(curve_system_from_json(bad), Error);
  CHECK(curve_system_from_json(nlohmann::json::parse(R"({"curves": []})")).M() == kDefaultM);
}

}
