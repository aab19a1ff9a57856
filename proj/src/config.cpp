#include "xychain/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "xychain/error.hpp"
#include "xychain/presets.hpp"

namespace xychain {

using nlohmann::json;

namespace {

const std::vector<std::string> kRunKeys = {"preset", "N",         "gamma",       "kT",
                                           "grid",   "J",         "h",           "t_max",
                                           "n_samples", "separations", "solver", "tol",
                                           "output", "sweep",     "description"};

template <class T>
T get(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

double get_real(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    throw ConfigError(std::string("bad value for '") + key + "': " + s);
  }
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

json real_to_json(double x) {
  if (std::isinf(x) && x > 0) return "inf";
  return x;
}

int get_int(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  const double x = v.get<double>();
  if (x != std::floor(x) || std::abs(x) > 1e9) {
    throw ConfigError(std::string("'") + key + "' must be an integer");
  }
  return static_cast<int>(x);
}

}  // namespace

void RunConfig::validate() const {
  spec.validate();
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ConfigError("t_max must be finite and >= 0");
  if (n_samples < 2) throw ConfigError("n_samples must be at least 2");
  if (separations.empty()) throw ConfigError("separations must not be empty");
  for (int r : separations) {
    if (r < 1 || r > spec.N / 2) {
      throw ConfigError("separation " + std::to_string(r) + " outside 1..N/2");
    }
  }
  if (!(tol > 0.0)) throw ConfigError("tol must be positive");
  if (solver == Solver::exact && !spec.proportional()) {
    throw ConfigError("solver 'exact' requires J(t) = lambda h(t)");
  }
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::lambda: return "lambda";
    case SweepVariable::kT: return "kT";
    case SweepVariable::K: return "K";
    case SweepVariable::N: return "N";
  }
  return "?";
}

SweepVariable sweep_variable_from_string(std::string_view name) {
  if (name == "lambda") return SweepVariable::lambda;
  if (name == "kT") return SweepVariable::kT;
  if (name == "K") return SweepVariable::K;
  if (name == "N") return SweepVariable::N;
  throw ConfigError("unknown sweep variable '" + std::string(name) + "'");
}

RunConfig SweepConfig::point(std::size_t variant, double value) const {
  RunConfig cfg = base;
  if (!variants.empty()) {
    json doc = to_json(base);
    doc.merge_patch(variants.at(variant).overrides);
    cfg = run_config_from_json(doc);
  }
  ChainSpec& s = cfg.spec;
  switch (variable) {
    case SweepVariable::lambda: {
      if (!s.proportional()) throw ConfigError("lambda sweep needs J(t) = lambda h(t)");
      // J(t) is held fixed and h(t) = J(t) / lambda.
      const DrivingProfile shape = s.h_profile.scaled(s.j_profile.lambda);
      s.h_profile = shape.scaled(1.0 / value);
      s.j_profile.lambda = value;
      break;
    }
    case SweepVariable::kT: s.kT = value; break;
    case SweepVariable::K:
      if (s.j_profile.time_dependent() && !s.proportional()) {
        s.j_profile.K = value;
      } else if (s.h_profile.time_dependent()) {
        s.h_profile.K = value;
      } else {
        throw ConfigError("K sweep needs a time-dependent profile");
      }
      break;
    case SweepVariable::N:
      if (value != std::floor(value)) throw ConfigError("N sweep values must be integers");
      s.N = static_cast<int>(value);
      break;
  }
  return cfg;
}

void SweepConfig::validate() const {
  base.validate();
  if (values.empty()) throw ConfigError("sweep values must not be empty");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) throw ConfigError("sweep values must be strictly increasing");
  }
  if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
    throw ConfigError("window_fraction must be in (0, 1]");
  }
  for (std::size_t v = 0; v < std::max<std::size_t>(1, variants.size()); ++v) {
    if (!variants.empty() && variants[v].label.empty()) throw ConfigError("variant without label");
    for (double x : values) point(v, x).validate();
  }
}

double default_t_max(const ChainSpec& spec) {
  double period = 0.0;
  double rate = 0.0;
  for (const auto* p : {&spec.j_profile, &spec.h_profile}) {
    if (!p->time_dependent() || p->kind == ProfileKind::proportional) continue;
    if (auto T = p->period()) {
      period = std::max(period, *T);
    } else {
      rate = rate == 0.0 ? p->K : std::min(rate, p->K);
    }
  }
  if (period > 0.0) return 10.0 * period;
  if (rate > 0.0) return 20.0 / rate;
  return 20.0;
}

json profile_to_json(const DrivingProfile& p) {
  return {{"kind", std::string(to_string(p.kind))},
          {"J0", p.J0},
          {"J1", p.J1},
          {"K", p.K},
          {"lambda", p.lambda}};
}

DrivingProfile profile_from_json(const json& j) {
  if (j.is_number()) return DrivingProfile::constant(j.get<double>());
  if (!j.is_object()) throw ConfigError("profile must be an object or a number");
  for (const auto& [key, _] : j.items()) {
    if (key != "kind" && key != "J0" && key != "J1" && key != "K" && key != "lambda") {
      throw ConfigError("unknown profile key '" + key + "'");
    }
  }
  DrivingProfile p;
  if (j.contains("kind")) p.kind = profile_kind_from_string(get<std::string>(j, "kind"));
  if (j.contains("J0")) p.J0 = get_real(j, "J0");
  if (j.contains("J1")) p.J1 = get_real(j, "J1");
  if (j.contains("K")) p.K = get_real(j, "K");
  if (j.contains("lambda")) p.lambda = get_real(j, "lambda");
  if (p.kind == ProfileKind::constant && !j.contains("J1")) p.J1 = p.J0;
  return p;
}

json expand_preset(const json& doc) {
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
  if (!doc.contains("preset")) return doc;
  json out = preset_document(get<std::string>(doc, "preset"));
  json rest = doc;
  rest.erase("preset");
  out.merge_patch(rest);
  return out;
}

RunConfig run_config_from_json(const json& in) {
  const json doc = expand_preset(in);
  for (const auto& [key, _] : doc.items()) {
    if (std::find(kRunKeys.begin(), kRunKeys.end(), key) == kRunKeys.end()) {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  RunConfig cfg;
  ChainSpec& s = cfg.spec;
  if (doc.contains("N")) s.N = get_int(doc, "N");
  if (doc.contains("gamma")) s.gamma = get_real(doc, "gamma");
  if (doc.contains("kT")) s.kT = get_real(doc, "kT");
  if (doc.contains("grid")) s.grid = momentum_grid_from_string(get<std::string>(doc, "grid"));
  if (doc.contains("J")) s.j_profile = profile_from_json(doc.at("J"));
  if (doc.contains("h")) s.h_profile = profile_from_json(doc.at("h"));
  s.validate();
  cfg.t_max = doc.contains("t_max") ? get_real(doc, "t_max") : default_t_max(s);
  if (doc.contains("n_samples")) cfg.n_samples = get_int(doc, "n_samples");
  if (doc.contains("separations")) {
    const json& r = doc.at("separations");
    if (!r.is_array()) throw ConfigError("separations must be a list");
    cfg.separations.clear();
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw ConfigError("separations must be integers");
      cfg.separations.push_back(x.get<int>());
    }
  }
  if (doc.contains("solver")) {
    try {
      cfg.solver = solver_from_string(get<std::string>(doc, "solver"));
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  if (doc.contains("tol")) cfg.tol = get_real(doc, "tol");
  if (doc.contains("output")) cfg.output_path = get<std::string>(doc, "output");
  cfg.validate();
  return cfg;
}

SweepConfig sweep_config_from_json(const json& in) {
  const json doc = expand_preset(in);
  if (!doc.contains("sweep") || !doc.at("sweep").is_object()) {
    throw ConfigError("sweep configuration needs a 'sweep' object");
  }
  const json& sw = doc.at("sweep");
  for (const auto& [key, _] : sw.items()) {
    if (key != "variable" && key != "values" && key != "window_fraction" && key != "variants") {
      throw ConfigError("unknown sweep key '" + key + "'");
    }
  }
  SweepConfig cfg;
  cfg.base = run_config_from_json(doc);
  cfg.variable = sweep_variable_from_string(get<std::string>(sw, "variable"));
  const json& values = sw.at("values");
  if (!values.is_array()) throw ConfigError("sweep values must be a list");
  for (const auto& v : values) {
    if (!v.is_number()) throw ConfigError("sweep values must be numbers");
    cfg.values.push_back(v.get<double>());
  }
  if (sw.contains("window_fraction")) cfg.window_fraction = get_real(sw, "window_fraction");
  if (sw.contains("variants")) {
    for (const auto& v : sw.at("variants")) {
      SweepVariant var;
      var.label = get<std::string>(v, "label");
      if (v.contains("overrides")) var.overrides = v.at("overrides");
      cfg.variants.push_back(var);
    }
  }
  cfg.validate();
  return cfg;
}

json to_json(const RunConfig& cfg) {
  const ChainSpec& s = cfg.spec;
  json doc = {{"N", s.N},
              {"gamma", s.gamma},
              {"kT", real_to_json(s.kT)},
              {"grid", std::string(to_string(s.grid))},
              {"J", profile_to_json(s.j_profile)},
              {"h", profile_to_json(s.h_profile)},
              {"t_max", cfg.t_max},
              {"n_samples", cfg.n_samples},
              {"separations", cfg.separations},
              {"solver", std::string(to_string(cfg.solver))},
              {"tol", cfg.tol}};
  if (!cfg.output_path.empty()) doc["output"] = cfg.output_path;
  return doc;
}

json to_json(const SweepConfig& cfg) {
  json doc = to_json(cfg.base);
  json sw = {{"variable", std::string(to_string(cfg.variable))},
             {"values", cfg.values},
             {"window_fraction", cfg.window_fraction}};
  if (!cfg.variants.empty()) {
    json vars = json::array();
    for (const auto& v : cfg.variants) vars.push_back({{"label", v.label}, {"overrides", v.overrides}});
    sw["variants"] = vars;
  }
  doc["sweep"] = sw;
  return doc;
}

namespace {
json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
}
}  // namespace

RunConfig parse_run_config(std::string_view text) { return run_config_from_json(parse_text(text)); }
SweepConfig parse_sweep_config(std::string_view text) {
  return sweep_config_from_json(parse_text(text));
}
std::string serialize(const RunConfig& cfg) { return to_json(cfg).dump(2); }
std::string serialize(const SweepConfig& cfg) { return to_json(cfg).dump(2); }

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

}  // namespace xychain
