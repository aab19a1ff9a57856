#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "xychain/observables.hpp"

namespace xychain {

enum class Solver { numeric, exact, automatic };

std::string_view to_string(Solver solver);
Solver solver_from_string(std::string_view name);

struct KernelOptions {
  Solver solver = Solver::automatic;
  double tol = 1e-9;
  KappaConvention kappa = KappaConvention::standard;
};

/// Per-mode expectations on a time grid, stored time-major.
struct ModeTable {
  int N = 0;
  MomentumGrid grid = MomentumGrid::periodic;
  std::vector<double> t;
  std::vector<ModeExpectations> data;  // data[i * N/2 + (p - 1)]
  double max_unitarity_defect = 0.0;

  int modes() const { return N / 2; }
  std::span<const ModeExpectations> at(std::size_t i) const {
    return {data.data() + i * static_cast<std::size_t>(modes()), static_cast<std::size_t>(modes())};
  }
};

/// Everything reported at one (t, r).
struct Observation {
  double t = 0.0;
  int r = 1;
  double M = 0.0;
  Correlators corr;
  double C = 0.0;
};

/// Thermal state per mode, propagated over `t_grid`, reduced to expectations.
/// The OpenMP variant distributes modes over threads and returns bit-identical
/// results.
ModeTable evolve_modes_serial(const ChainSpec& spec, std::span<const double> t_grid,
                              const KernelOptions& options = {});
ModeTable evolve_modes_omp(const ChainSpec& spec, std::span<const double> t_grid,
                           const KernelOptions& options = {});

/// Observations for every grid time and separation, time-major.
std::vector<Observation> observe_serial(const ModeTable& table, std::span<const int> separations);
std::vector<Observation> observe_omp(const ModeTable& table, std::span<const int> separations);

/// Uniform grid of n points on [0, t_max]; a single point when t_max == 0.
std::vector<double> uniform_grid(double t_max, int n);

}  // namespace xychain
