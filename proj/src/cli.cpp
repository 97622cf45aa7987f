#include "twistlab/cli.hpp"

#include "twistlab/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace twistlab::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConditionUnmet:
    case ErrorKind::NotHyperbolic:
    case ErrorKind::ZeroTotal:
    case ErrorKind::WrongShape:
      return 1;
    default:
      return 2;
  }
}

Json error_json(std::string_view kind, const std::string& message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", message}}}};
}

// ---- parameter access -------------------------------------------------------

bool has(const Json& p, const char* key) { return p.contains(key) && !p[key].is_null(); }

std::string get_string(const Json& p, const char* key) {
  if (!has(p, key)) throw Error(ErrorKind::Malformed, std::string("missing option --") + key);
  const Json& v = p[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw Error(ErrorKind::Malformed, std::string("option --") + key + " must be a string");
}

std::string get_string(const Json& p, const char* key, const std::string& fallback) {
  return has(p, key) ? get_string(p, key) : fallback;
}

std::int64_t get_int(const Json& p, const char* key, std::int64_t fallback) {
  if (!has(p, key)) return fallback;
  const Json& v = p[key];
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      const std::int64_t out = std::stoll(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return out;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::Malformed, std::string("option --") + key + " must be an integer");
}

// Space or comma separated list, or a JSON array of strings.
std::vector<std::string> get_list(const Json& p, const char* key) {
  std::vector<std::string> out;
  if (!has(p, key)) return out;
  const Json& v = p[key];
  if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_string()) throw Error(ErrorKind::Malformed, std::string("option --") + key + " must list strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }
  std::string text = get_string(p, key);
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream is(text);
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

Rational get_precision(const Json& p) {
  const Rational eps = parse_rational(get_string(p, "precision", "1e-9"));
  if (eps <= 0) throw Error(ErrorKind::BadParameter, "precision must be positive");
  return eps;
}

fs::path resolve(const fs::path& base, const std::string& path) {
  const fs::path p(path);
  return p.is_absolute() || base.empty() ? p : base / p;
}

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Malformed, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Malformed, path.string() + ": " + e.what());
  }
}

CurveSystem get_system(const Json& p, const fs::path& base) {
  if (!has(p, "config")) throw Error(ErrorKind::Malformed, "missing option --config");
  CurveSystem sys = p["config"].is_object() ? curve_system_from_json(nlohmann::json(p["config"]))
                                            : load_curve_system(resolve(base, get_string(p, "config")));
  if (has(p, "M")) sys.set_M(get_int(p, "M", kDefaultM));
  return sys;
}

// First two block multicurves, for commands that need A and B but got none.
std::pair<MulticurveId, MulticurveId> get_pair(const Json& p, const CurveSystem& sys, const TwistWord& w) {
  if (has(p, "A") && has(p, "B")) return {get_string(p, "A"), get_string(p, "B")};
  const auto dec = block_decompose(normalize(w), sys.partition());
  if (dec.blocks.size() < 2) throw Error(ErrorKind::WrongShape, "cannot infer two multicurves from the word");
  return {dec.blocks[0].multicurve, dec.blocks[1].multicurve};
}

Json system_echo(const CurveSystem& sys, const TwistWord* w) {
  Json echo;
  if (w) {
    echo["word"] = w->str();
    echo["normalized"] = normalize(*w).str();
  }
  echo["config_digest"] = digest(sys);
  echo["M"] = sys.M();
  return echo;
}

// ---- commands ---------------------------------------------------------------

Outcome analyze(const Json& p, const fs::path& base) {
  const CurveSystem sys = get_system(p, base);
  const TwistWord w = TwistWord::parse(get_string(p, "word"));
  const std::string theorem = get_string(p, "theorem", "auto");
  BoundResult r;
  if (theorem == "auto") {
    r = best_bound(w, sys);
  } else if (theorem == "two_curve_exact") {
    r = exact_two_filling(w, sys);
  } else if (theorem == "curve_cycle") {
    r = bounds_curve_cycle(w, sys);
  } else if (theorem == "two_multicurve") {
    const auto [A, B] = get_pair(p, sys, w);
    r = bounds_two_multicurve(w, sys, A, B);
  } else if (theorem == "multicurve_cycle") {
    std::vector<MulticurveId> cycle = get_list(p, "cycle");
    if (cycle.empty())
      for (const auto& b : block_decompose(normalize(w), sys.partition()).blocks) cycle.push_back(b.multicurve);
    r = bounds_multicurve_cycle(w, sys, cycle);
  } else if (theorem == "penner") {
    const auto [A, B] = get_pair(p, sys, w);
    r = penner_bound(w, sys, A, B);
  } else {
    throw Error(ErrorKind::Malformed, "unknown theorem '" + theorem + "'");
  }
  Json echo = system_echo(sys, &w);
  echo["theorem"] = theorem;
  const bool identity = normalize(w).empty();
  const int code = r.conditions_met() || identity ? 0 : 1;
  return {code, envelope("analyze", echo, to_json(r), system_warnings(sys)), {}};
}

std::vector<std::vector<Count>> matrix_from_json(const Json& doc) {
  const Json& rows = doc.is_object() && doc.contains("N") ? doc["N"] : doc;
  if (!rows.is_array()) throw Error(ErrorKind::Malformed, "matrix must be an array of rows");
  std::vector<std::vector<Count>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::Malformed, "matrix rows must be arrays");
    auto& r = out.emplace_back();
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw Error(ErrorKind::Malformed, "matrix entries must be integers");
      r.push_back(e.get<Count>());
    }
  }
  return out;
}

std::string to_string(TraceClass c) {
  switch (c) {
    case TraceClass::Elliptic: return "elliptic";
    case TraceClass::Parabolic: return "parabolic";
    case TraceClass::Hyperbolic: return "hyperbolic";
  }
  return "elliptic";
}

Outcome thurston(const Json& p, const fs::path& base) {
  if (!has(p, "matrix")) throw Error(ErrorKind::Malformed, "missing option --matrix");
  const IntersectionMatrix N{matrix_from_json(
      p["matrix"].is_array() || p["matrix"].is_object() ? p["matrix"] : read_json_file(resolve(base, get_string(p, "matrix"))))};
  const TwistWord w = TwistWord::parse(get_string(p, "word"));
  const std::string la = get_string(p, "a_letter", "A"), lb = get_string(p, "b_letter", "B");
  const Rational eps = get_precision(p);

  const RepMatrix m = represent(w, la, lb);
  ThurstonParameter param = thurston_parameter(N);
  const TraceClass cls = classify(m, param.s);
  Json result;
  result["mu_poly"] = param.mu.poly().str("x");
  result["trace_poly"] = m.trace().str("s");
  result["classification"] = to_string(cls);
  result["hyperbolic"] = is_hyperbolic(cls);
  int code = 0;
  if (is_hyperbolic(cls)) {
    const StretchFactor sf = stretch_factor(w, N, eps, la, lb);
    result["mu_interval"] = interval_json(sf.mu);
    result["trace_interval"] = interval_json(sf.trace);
    result["lambda_interval"] = interval_json(sf.lambda);
    result["lT_interval"] = interval_json(sf.log_lambda);
  } else {
    param.mu.refine_to(eps / 2);
    result["mu_interval"] = interval_json(round_outward(param.mu.interval(), bits_for(eps) + 2));
    result["error"] = {{"kind", "NotHyperbolic"}, {"message", "|trace| <= 2 at s = sqrt(mu)"}};
    code = 1;
  }
  Json echo{{"word", w.str()}, {"matrix", N.entries}, {"precision", to_decimal_string(eps)}};
  return {code, envelope("thurston", echo, result, {}), {}};
}

Outcome minword(const Json& p, const fs::path& base) {
  const CurveSystem sys = get_system(p, base);
  const TwistWord w = TwistWord::parse(get_string(p, "word"));
  const auto [A, B] = get_pair(p, sys, w);
  Json echo = system_echo(sys, &w);
  echo["A"] = A;
  echo["B"] = B;
  return {0, envelope("minword", echo, to_json(minimal_word(w, sys, A, B)), system_warnings(sys)), {}};
}

Outcome ratio(const Json& p, const fs::path& base) {
  const CurveSystem sys = get_system(p, base);
  const TwistWord w = TwistWord::parse(get_string(p, "word"));
  const Rational eps = get_precision(p);
  const RatioReport r = ratio_report(w, sys, eps);
  Json echo = system_echo(sys, &w);
  echo["precision"] = to_decimal_string(eps);
  return {r.within_bound ? 0 : 1, envelope("ratio", echo, to_json(r), system_warnings(sys)), {}};
}

Outcome raag(const Json& p, const fs::path& base) {
  const CurveSystem sys = get_system(p, base);
  const RaagMode mode = parse_raag_mode(get_string(p, "mode"));
  const auto data = get_list(p, mode == RaagMode::FreeCurves ? "curves" : "multicurves");
  Json echo = system_echo(sys, nullptr);
  echo["mode"] = to_string(mode);
  echo["data"] = data;
  return {0, envelope("raag", echo, to_json(raag_threshold(sys, mode, data)), system_warnings(sys)), {}};
}

farey::Slope get_slope(const Json& p, const char* key) { return farey::Slope::parse(get_string(p, key)); }

Outcome farey_dist(const Json& p) {
  const farey::Slope x = get_slope(p, "x"), y = get_slope(p, "y");
  Json result{{"distance", farey::farey_distance(x, y)}};
  if (has(p, "bfs")) result["bfs_distance"] = farey::farey_distance_bfs(x, y, get_int(p, "bfs", 0));
  Json echo{{"x", x.str()}, {"y", y.str()}};
  return {0, envelope("farey dist", echo, result, {}), {}};
}

Outcome farey_verify(const Json& p) {
  const farey::Slope a = get_slope(p, "a"), b = get_slope(p, "b");
  const TwistWord w = TwistWord::parse(get_string(p, "word"));
  std::vector<BigInt> exps;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const char* want = i % 2 == 0 ? "a" : "b";
    if (w[i].curve != want)
      throw Error(ErrorKind::Malformed, "word must alternate a and b starting with a; syllable " +
                                            std::to_string(i + 1) + " is " + w[i].curve);
    exps.emplace_back(w[i].exponent);
  }
  const std::int64_t mmax = get_int(p, "mmax", 4);
  if (mmax < 1) throw Error(ErrorKind::BadParameter, "--mmax must be at least 1");
  const BigInt threshold = get_int(p, "threshold", 1);
  const farey::VerificationReport rep = farey::verify_main_theorem(a, b, exps, static_cast<unsigned>(mmax), threshold);
  Json result{{"verification", to_json(rep)}};
  bool ok = rep.all_equal();
  if (!ok && has(p, "search_cap")) {
    BigInt start = rep.min_abs_exponent;
    const farey::ThresholdSearch s =
        farey::find_equality_threshold(a, b, exps, static_cast<unsigned>(mmax), start, get_int(p, "search_cap", 0));
    result["search"] = to_json(s);
  }
  Json echo{{"a", a.str()}, {"b", b.str()}, {"word", w.str()}, {"mmax", mmax}, {"threshold", integer_json(threshold)}};
  return {ok ? 0 : 1, envelope("farey verify", echo, result, {torus_warning()}), {}};
}

Outcome farey_export(const Json& p) {
  std::vector<farey::Slope> slopes;
  for (const auto& s : get_list(p, "slopes")) slopes.push_back(farey::Slope::parse(s));
  if (slopes.empty()) throw Error(ErrorKind::Malformed, "missing option --slopes");
  std::optional<Count> M;
  if (has(p, "M")) M = get_int(p, "M", kDefaultM);
  const CurveSystem sys = farey::export_curve_system(slopes, M);
  std::vector<std::string> warnings = system_warnings(sys);
  warnings.push_back(torus_warning());
  Json echo{{"slopes", get_list(p, "slopes")}};
  return {0, envelope("farey export", echo, Json(to_json(sys)), warnings), {}};
}

}  // namespace

Outcome execute(const std::string& command, const Json& params, const fs::path& base_dir) {
  Json echo{{"params", params}};
  try {
    if (!params.is_object()) throw Error(ErrorKind::Malformed, "options must form a JSON object");
    if (command == "analyze") return analyze(params, base_dir);
    if (command == "thurston") return thurston(params, base_dir);
    if (command == "minword") return minword(params, base_dir);
    if (command == "ratio") return ratio(params, base_dir);
    if (command == "raag") return raag(params, base_dir);
    if (command == "farey dist") return farey_dist(params);
    if (command == "farey verify") return farey_verify(params);
    if (command == "farey export") return farey_export(params);
    throw Error(ErrorKind::Malformed, "unknown command '" + command + "'");
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    return {code, envelope(command, echo, error_json(to_string(e.kind()), e.what()), {}),
            code == 2 ? e.what() : std::string()};
  } catch (const nlohmann::json::exception& e) {
    return {2, envelope(command, echo, error_json("Malformed", e.what()), {}), e.what()};
  } catch (const std::invalid_argument& e) {
    return {2, envelope(command, echo, error_json("Malformed", e.what()), {}), e.what()};
  } catch (const std::domain_error& e) {
    return {2, envelope(command, echo, error_json("BadParameter", e.what()), {}), e.what()};
  }
}

int run_batch(std::istream& in, const fs::path& base_dir, std::ostream& out) {
  std::size_t pass = 0, fail = 0, index = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    Json row{{"index", index++}};
    Json request;
    try {
      request = Json::parse(line);
      if (!request.is_object() || !request.contains("command") || !request["command"].is_string())
        throw Error(ErrorKind::Malformed, "instance needs a string \"command\"");
    } catch (const std::exception& e) {
      row["status"] = "fail";
      row["error"] = {{"kind", "Malformed"}, {"message", e.what()}};
      out << row.dump() << "\n";
      ++fail;
      continue;
    }
    const std::string command = request["command"].get<std::string>();
    Json params = request;
    params.erase("command");
    const Outcome o = execute(command, params, base_dir);
    row["command"] = command;
    row["status"] = o.exit_code == 0 ? "pass" : "fail";
    row["exit_code"] = o.exit_code;
    if (o.report["result"].contains("error")) row["error"] = o.report["result"]["error"];
    row["report"] = o.report;
    out << row.dump() << "\n";
    ++(o.exit_code == 0 ? pass : fail);
  }
  out << Json{{"pass", pass}, {"fail", fail}}.dump() << "\n";
  return fail == 0 ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dehn twist words, curve graph translation length bounds, Thurston's construction"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::optional<std::int64_t> M;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--M", M, "override the bounded geodesic image constant");

  std::map<std::string, std::string> opts;  // flag name -> value
  auto opt = [&](CLI::App* sub, const std::string& flag, const std::string& help, bool required = false) {
    const std::string key = flag.substr(flag.find_first_not_of('-'));
    auto* o = sub->add_option(flag, opts[key], help);
    if (required) o->required();
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "bounds for l_C of a word");
  opt(analyze_cmd, "--config", "curve system JSON", true);
  opt(analyze_cmd, "--word", "twist word, e.g. \"a^201 b^-201\"", true);
  opt(analyze_cmd, "--theorem", "auto, two_curve_exact, curve_cycle, two_multicurve, multicurve_cycle or penner");
  opt(analyze_cmd, "--A", "first multicurve");
  opt(analyze_cmd, "--B", "second multicurve");
  opt(analyze_cmd, "--cycle", "multicurve cycle, space separated");

  auto* thurston_cmd = app.add_subcommand("thurston", "Thurston representation and stretch factor");
  opt(thurston_cmd, "--matrix", "intersection matrix JSON", true);
  opt(thurston_cmd, "--word", "word over A and B", true);
  opt(thurston_cmd, "--precision", "enclosure width (default 1e-9)");
  opt(thurston_cmd, "--a-letter", "name of the A letter");
  opt(thurston_cmd, "--b-letter", "name of the B letter");

  auto* minword_cmd = app.add_subcommand("minword", "collect exponents per curve and compare");
  opt(minword_cmd, "--config", "curve system JSON", true);
  opt(minword_cmd, "--word", "twist word", true);
  opt(minword_cmd, "--A", "first multicurve");
  opt(minword_cmd, "--B", "second multicurve");

  auto* ratio_cmd = app.add_subcommand("ratio", "l_T / l_C for a +-1 pattern of powered twists");
  opt(ratio_cmd, "--config", "curve system JSON", true);
  opt(ratio_cmd, "--word", "pattern such as \"a b^-1 a^-1 b\"", true);
  opt(ratio_cmd, "--precision", "enclosure width (default 1e-9)");

  auto* raag_cmd = app.add_subcommand("raag", "powers of twists generating a right-angled Artin group");
  opt(raag_cmd, "--config", "curve system JSON", true);
  opt(raag_cmd, "--mode", "free_curves, two_multicurves or multicurves", true);
  opt(raag_cmd, "--curves", "curves for free_curves");
  opt(raag_cmd, "--multicurves", "multicurve names for the other modes");

  auto* farey_cmd = app.add_subcommand("farey", "torus model");
  farey_cmd->require_subcommand(1);
  farey_cmd->fallthrough();
  auto* dist_cmd = farey_cmd->add_subcommand("dist", "Farey graph distance");
  dist_cmd->add_option("x", opts["x"], "slope p/q")->required();
  dist_cmd->add_option("y", opts["y"], "slope p/q")->required();
  opt(dist_cmd, "--bfs", "also run a BFS inside this budget");
  auto* verify_cmd = farey_cmd->add_subcommand("verify", "compare d(v1, f^m v1) with 2mn(l-2)");
  opt(verify_cmd, "--a", "slope a", true);
  opt(verify_cmd, "--b", "slope b", true);
  opt(verify_cmd, "--word", "word over a and b", true);
  opt(verify_cmd, "--mmax", "largest m (default 4)");
  opt(verify_cmd, "--threshold", "minimum |exponent| (default 1)");
  opt(verify_cmd, "--search-cap", "on mismatch, double the exponents up to this cap");
  auto* export_cmd = farey_cmd->add_subcommand("export", "curve system JSON for a list of slopes");
  opt(export_cmd, "--slopes", "slopes, space separated", true);

  auto* batch_cmd = app.add_subcommand("batch", "run a JSON Lines experiment file");
  std::string batch_file;
  batch_cmd->add_option("file", batch_file, "experiment file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "twistlab: " << e.what() << "\n";
    return 2;
  }

  if (batch_cmd->parsed()) {
    std::ifstream in(batch_file);
    if (!in) {
      err << "twistlab: cannot open " << batch_file << "\n";
      return 2;
    }
    return run_batch(in, fs::path(batch_file).parent_path(), out);
  }

  std::string command;
  CLI::App* used = nullptr;
  for (auto* sub : {analyze_cmd, thurston_cmd, minword_cmd, ratio_cmd, raag_cmd, dist_cmd, verify_cmd, export_cmd})
    if (sub->parsed()) used = sub;
  command = used->get_parent() == farey_cmd ? "farey " + used->get_name() : used->get_name();

  Json params = Json::object();
  for (const auto* o : used->get_options()) {
    if (o->count() == 0 || o->get_name() == "--help") continue;
    std::string key = o->get_name();
    key = key.substr(key.find_first_not_of('-'));
    std::replace(key.begin(), key.end(), '-', '_');
    std::string flag = o->get_name();
    params[key] = opts[flag.substr(flag.find_first_not_of('-'))];
  }
  if (M) params["M"] = *M;

  const Outcome o = execute(command, params, fs::current_path());
  if (o.exit_code == 2) {
    err << "twistlab: " << o.diagnostic << "\n";
    return 2;
  }
  out << (format == "text" ? render_text(o.report) : o.report.dump(2) + "\n");
  return o.exit_code;
}

}  // namespace twistlab::cli
