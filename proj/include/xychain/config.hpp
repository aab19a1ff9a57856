#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "xychain/kernels.hpp"
#include "xychain/model.hpp"

namespace xychain {

/// One time-series experiment.
struct RunConfig {
  ChainSpec spec;
  double t_max = 20.0;
  int n_samples = 1001;
  std::vector<int> separations{1};
  Solver solver = Solver::automatic;
  double tol = 1e-9;
  std::string output_path;  // empty or "-" means stdout

  // ConfigError on any violated invariant.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class SweepVariable { lambda, kT, K, N };

std::string_view to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(std::string_view name);

/// A named override of the base configuration; every variant becomes one
/// output column.
struct SweepVariant {
  std::string label;
  nlohmann::json overrides = nlohmann::json::object();

  friend bool operator==(const SweepVariant&, const SweepVariant&) = default;
};

struct SweepConfig {
  RunConfig base;
  SweepVariable variable = SweepVariable::lambda;
  std::vector<double> values;
  double window_fraction = 0.3;
  std::vector<SweepVariant> variants;

  void validate() const;

  // Base configuration with variant `v` (if any) and the sweep value applied.
  RunConfig point(std::size_t variant, double value) const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// 20/K for transient profiles, ten periods of the slowest periodic profile,
/// 20 when nothing depends on time.
double default_t_max(const ChainSpec& spec);

nlohmann::json profile_to_json(const DrivingProfile& p);
DrivingProfile profile_from_json(const nlohmann::json& j);

/// Replaces a "preset" key by the preset's document, with the remaining
/// keys applied on top. Nested objects merge key by key.
nlohmann::json expand_preset(const nlohmann::json& doc);

RunConfig run_config_from_json(const nlohmann::json& doc);
SweepConfig sweep_config_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const SweepConfig& cfg);

// Text round trip.
RunConfig parse_run_config(std::string_view text);
SweepConfig parse_sweep_config(std::string_view text);
std::string serialize(const RunConfig& cfg);
std::string serialize(const SweepConfig& cfg);

nlohmann::json load_document(const std::string& path);

}  // namespace xychain
