#include "xychain/runner.hpp"

#include <cmath>
#include <cstdio>

#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"

namespace xychain {

Timeseries run_timeseries(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.n_samples);
  KernelOptions options;
  options.solver = cfg.solver;
  options.tol = cfg.tol;
  const ModeTable table = evolve_modes_omp(cfg.spec, grid, options);
  Timeseries ts;
  ts.rows = observe_omp(table, cfg.separations);
  ts.max_unitarity_defect = table.max_unitarity_defect;
  return ts;
}

std::vector<std::pair<double, double>> concurrence_series(const Timeseries& ts, int r) {
  std::vector<std::pair<double, double>> out;
  for (const auto& o : ts.rows) {
    if (o.r == r) out.emplace_back(o.t, o.C);
  }
  return out;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_timeseries_csv(std::ostream& out, const Timeseries& ts) {
  out << "t,r,M,Sx,Sy,Sz,C\n";
  for (const auto& o : ts.rows) {
    out << format_real(o.t) << ',' << o.r << ',' << format_real(o.M) << ','
        << format_real(o.corr.Sx) << ',' << format_real(o.corr.Sy) << ','
        << format_real(o.corr.Sz) << ',' << format_real(o.C) << '\n';
  }
}

std::optional<double> detect_revival(std::span<const std::pair<double, double>> series, double K,
                                     const RevivalDetector& detector) {
  if (series.size() < 2) throw PreconditionError("revival detection needs a time series");
  const double t_max = series.back().first;
  const double start = K > 0.0 ? detector.settle_rates / K : 0.0;
  const double end = start + detector.window_fraction * t_max;
  double sum = 0.0;
  int count = 0;
  for (const auto& [t, c] : series) {
    if (t >= start && t <= end) {
      sum += c;
      ++count;
    }
  }
  if (count == 0) throw PreconditionError("plateau window holds no samples");
  const double plateau = sum / count;
  for (const auto& [t, c] : series) {
    if (t > end && std::abs(c - plateau) > detector.threshold) return t;
  }
  return std::nullopt;
}

SweepTable run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t nv = std::max<std::size_t>(1, cfg.variants.size());
  const bool revival = cfg.variable == SweepVariable::N;
  auto suffix = [&](std::size_t v) {
    return cfg.variants.empty() ? std::string() : "_" + cfg.variants[v].label;
  };

  SweepTable table;
  table.columns.push_back("value");
  for (std::size_t v = 0; v < nv; ++v) table.columns.push_back("C_asym" + suffix(v));
  if (revival) {
    for (std::size_t v = 0; v < nv; ++v) table.columns.push_back("t_c" + suffix(v));
  }

  for (double value : cfg.values) {
    std::vector<double> row{value};
    std::vector<double> tc;
    for (std::size_t v = 0; v < nv; ++v) {
      const RunConfig point = cfg.point(v, value);
      const Timeseries ts = run_timeseries(point);
      const auto series = concurrence_series(ts, point.separations.front());
      row.push_back(asymptotic_value(series, cfg.window_fraction));
      if (revival) {
        const auto t = detect_revival(series, point.spec.max_rate());
        tc.push_back(t ? *t : std::nan(""));
      }
    }
    row.insert(row.end(), tc.begin(), tc.end());
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_real(row[c]);
    out << '\n';
  }
}

}  // namespace xychain
