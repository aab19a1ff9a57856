#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xychain/config.hpp"
#include "xychain/kernels.hpp"

namespace xychain {

struct Timeseries {
  std::vector<Observation> rows;  // time-major, separations in config order
  double max_unitarity_defect = 0.0;
};

Timeseries run_timeseries(const RunConfig& cfg);

/// (t, C) at separation r.
std::vector<std::pair<double, double>> concurrence_series(const Timeseries& ts, int r);

/// Header `t,r,M,Sx,Sy,Sz,C`, 17 significant digits.
void write_timeseries_csv(std::ostream& out, const Timeseries& ts);

/// First time after the initial plateau where |C(t) - plateau| > threshold.
/// The plateau is the mean of C over [3/K, 3/K + 0.2 t_max]; the search
/// starts at the end of that window. nullopt when C never leaves it.
struct RevivalDetector {
  double threshold = 0.01;
  double window_fraction = 0.2;
  double settle_rates = 3.0;
};
std::optional<double> detect_revival(std::span<const std::pair<double, double>> series,
                                     double K, const RevivalDetector& detector = {});

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // NaN marks a missing t_c
};

/// One row per sweep value: value, asymptotic C per variant, and for N
/// sweeps the revival time per variant.
SweepTable run_sweep(const SweepConfig& cfg);

void write_sweep_csv(std::ostream& out, const SweepTable& table);

// printf("%.17g"), with "nan"/"inf" spelled out.
std::string format_real(double x);

}  // namespace xychain
