#include "xychain/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/evolve.hpp"

namespace xychain {

namespace {

bool use_exact(const ChainSpec& spec, Solver solver) {
  switch (solver) {
    case Solver::numeric: return false;
    case Solver::exact:
      if (!spec.proportional()) {
        throw ConfigError("solver 'exact' needs a proportional coupling profile");
      }
      return true;
    case Solver::automatic: return spec.proportional();
  }
  return false;
}

// Evolves one block; writes column p-1 of the table and returns its worst defect.
double evolve_one(const ChainSpec& spec, const ModeBlock& mode, std::span<const double> t_grid,
                  const KernelOptions& options, bool exact, ModeTable& table) {
  const ModeState init = thermal_state(spec, mode);
  std::vector<Propagator> props;
  if (exact) {
    props.reserve(t_grid.size());
    for (double t : t_grid) props.push_back(propagate_exact(spec, mode, t));
  } else {
    props = propagate_numeric(spec, mode, t_grid, options.tol);
  }
  double defect = 0.0;
  const std::size_t stride = static_cast<std::size_t>(table.modes());
  for (std::size_t i = 0; i < props.size(); ++i) {
    defect = std::max(defect, unitarity_defect(props[i].U));
    table.data[i * stride + static_cast<std::size_t>(mode.p - 1)] =
        mode_expectations(evolve_state(init, props[i]), options.kappa);
  }
  return defect;
}

ModeTable prepare(const ChainSpec& spec, std::span<const double> t_grid) {
  spec.validate();
  ModeTable table;
  table.N = spec.N;
  table.grid = spec.grid;
  table.t.assign(t_grid.begin(), t_grid.end());
  table.data.resize(t_grid.size() * static_cast<std::size_t>(table.modes()));
  return table;
}

int max_separation(const ModeTable& table, std::span<const int> separations) {
  int r_max = 1;
  for (int r : separations) {
    if (r < 1 || r > table.N / 2) {
      throw ConfigError("separation " + std::to_string(r) + " outside 1.." +
                        std::to_string(table.N / 2));
    }
    r_max = std::max(r_max, r);
  }
  return r_max;
}

void observe_time(const ModeTable& table, std::size_t i, std::span<const int> separations,
                  int r_max, Observation* out) {
  const auto modes = table.at(i);
  const double M = magnetization(modes, table.N);
  const ContractionSet cs = contraction_set(modes, table.N, table.grid, r_max);
  for (std::size_t k = 0; k < separations.size(); ++k) {
    Observation& o = out[k];
    o.t = table.t[i];
    o.r = separations[k];
    o.M = M;
    o.corr = correlators(cs, o.r);
    o.C = concurrence_x(two_site_state(M, o.corr.Sx, o.corr.Sy, o.corr.Sz)).C;
  }
}

}  // namespace

std::string_view to_string(Solver solver) {
  switch (solver) {
    case Solver::numeric: return "numeric";
    case Solver::exact: return "exact";
    case Solver::automatic: return "auto";
  }
  return "unknown";
}

Solver solver_from_string(std::string_view name) {
  if (name == "numeric") return Solver::numeric;
  if (name == "exact") return Solver::exact;
  if (name == "auto") return Solver::automatic;
  throw ConfigError("unknown solver '" + std::string(name) + "'");
}

ModeTable evolve_modes_serial(const ChainSpec& spec, std::span<const double> t_grid,
                              const KernelOptions& options) {
  ModeTable table = prepare(spec, t_grid);
  const bool exact = use_exact(spec, options.solver);
  for (const ModeBlock& mode : mode_blocks(spec)) {
    table.max_unitarity_defect = std::max(table.max_unitarity_defect,
                                          evolve_one(spec, mode, t_grid, options, exact, table));
  }
  return table;
}

ModeTable evolve_modes_omp(const ChainSpec& spec, std::span<const double> t_grid,
                           const KernelOptions& options) {
  ModeTable table = prepare(spec, t_grid);
  const bool exact = use_exact(spec, options.solver);
  const std::vector<ModeBlock> blocks = mode_blocks(spec);
  const int n = static_cast<int>(blocks.size());
  std::vector<double> defects(blocks.size(), 0.0);
  std::vector<std::exception_ptr> errors(blocks.size());

#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < n; ++k) {
    try {
      defects[k] = evolve_one(spec, blocks[k], t_grid, options, exact, table);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  table.max_unitarity_defect = *std::max_element(defects.begin(), defects.end());
  return table;
}

std::vector<Observation> observe_serial(const ModeTable& table, std::span<const int> separations) {
  const int r_max = max_separation(table, separations);
  std::vector<Observation> out(table.t.size() * separations.size());
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    observe_time(table, i, separations, r_max, out.data() + i * separations.size());
  }
  return out;
}

std::vector<Observation> observe_omp(const ModeTable& table, std::span<const int> separations) {
  const int r_max = max_separation(table, separations);
  std::vector<Observation> out(table.t.size() * separations.size());
  const auto n = static_cast<long>(table.t.size());
  std::vector<std::exception_ptr> errors(table.t.size());

#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      observe_time(table, static_cast<std::size_t>(i), separations, r_max,
                   out.data() + static_cast<std::size_t>(i) * separations.size());
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<double> uniform_grid(double t_max, int n) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw ConfigError("t_max must be non-negative");
  if (t_max == 0.0) return {0.0};
  if (n < 2) throw ConfigError("n_samples must be at least 2");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[i] = t_max * i / (n - 1);
  t.back() = t_max;
  return t;
}

}  // namespace xychain
