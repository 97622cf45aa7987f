#pragma once

// JSON rendering of results and the report envelope shared by every command.
// Rationals and intervals are written as exact decimal strings.

#include "twistlab/applications.hpp"
#include "twistlab/farey_backend.hpp"
#include "twistlab/length_bounds.hpp"
#include "twistlab/thurston_rep.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace twistlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "twistlab 0.1.0";

Json rational_json(const Rational& x);
/// [lo, hi]
Json interval_json(const Interval& iv);
/// JSON integer when it fits in 64 bits, decimal string otherwise.
Json integer_json(const BigInt& v);

Json to_json(const ConditionVerdict& v);
Json to_json(const BoundResult& r);
Json to_json(const MinimalWordResult& r);
Json to_json(const RatioReport& r);
Json to_json(const RaagCertificate& c);
Json to_json(const farey::VerificationReport& r);
Json to_json(const farey::ThresholdSearch& s);

/// Warnings every report on `sys` carries (default M).
std::vector<std::string> system_warnings(const CurveSystem& sys);
std::string torus_warning();

Json envelope(const std::string& command, Json input_echo, Json result, const std::vector<std::string>& warnings);

/// Indented "key: value" rendering for --format text.
std::string render_text(const Json& doc);

}  // namespace twistlab
