#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <omp.h>

#include "xychain/config.hpp"
#include "xychain/error.hpp"
#include "xychain/presets.hpp"
#include "xychain/runner.hpp"
#include "xychain/verify.hpp"

using namespace xychain;
using nlohmann::json;

namespace {

struct Common {
  std::string config;
  std::string preset;
  std::string output;
  int threads = 0;
  double tol = 0.0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "JSON configuration file");
  app->add_option("--preset", c.preset, "figure preset (see `presets`)");
  app->add_option("--output", c.output, "CSV output path, '-' for stdout");
  app->add_option("--threads", c.threads, "maximum OpenMP threads")->check(CLI::PositiveNumber);
  app->add_option("--tol", c.tol, "integrator tolerance")->check(CLI::PositiveNumber);
}

json document(const Common& c) {
  json doc = c.config.empty() ? json::object() : load_document(c.config);
  if (!c.preset.empty()) doc["preset"] = c.preset;
  if (doc.empty()) throw ConfigError("give --config or --preset");
  if (c.tol > 0.0) doc["tol"] = c.tol;
  if (!c.output.empty()) doc["output"] = c.output;
  return doc;
}

template <class Write>
void emit(const std::string& path, Write write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven XY chain: concurrence dynamics of nearest neighbours"};
  app.require_subcommand(1);

  Common run_opts, sweep_opts;
  auto* run = app.add_subcommand("run", "time series t,r,M,Sx,Sy,Sz,C");
  add_common(run, run_opts);
  auto* sweep = app.add_subcommand("sweep", "asymptotic concurrence over a parameter");
  add_common(sweep, sweep_opts);

  int max_n = 8;
  bool flip_kappa = false;
  bool verbose = false;
  double verify_tol = 1e-9;
  int verify_threads = 0;
  auto* ver = app.add_subcommand("verify", "compare against the Fock-space oracle");
  ver->add_option("--max-n", max_n, "largest oracle chain (4..12)");
  ver->add_option("--tol", verify_tol, "integrator tolerance")->check(CLI::PositiveNumber);
  ver->add_option("--threads", verify_threads, "maximum OpenMP threads")->check(CLI::PositiveNumber);
  ver->add_flag("--flip-kappa", flip_kappa, "mutation check: wrong pairing sign, must fail");
  ver->add_flag("-v,--verbose", verbose, "one line per oracle case");

  std::string show;
  auto* presets = app.add_subcommand("presets", "list presets or print one expanded");
  presets->add_option("--preset", show, "print this preset's full configuration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (run_opts.threads > 0) omp_set_num_threads(run_opts.threads);
      const RunConfig cfg = run_config_from_json(document(run_opts));
      const Timeseries ts = run_timeseries(cfg);
      emit(cfg.output_path, [&](std::ostream& out) { write_timeseries_csv(out, ts); });
    } else if (*sweep) {
      if (sweep_opts.threads > 0) omp_set_num_threads(sweep_opts.threads);
      const SweepConfig cfg = sweep_config_from_json(document(sweep_opts));
      const SweepTable table = run_sweep(cfg);
      emit(cfg.base.output_path, [&](std::ostream& out) { write_sweep_csv(out, table); });
    } else if (*ver) {
      if (verify_threads > 0) omp_set_num_threads(verify_threads);
      VerifyOptions opts;
      opts.max_N = max_n;
      opts.tol = verify_tol;
      if (flip_kappa) opts.kappa = KappaConvention::flipped;
      if (verbose) opts.log = &std::cout;
      const VerifyReport report = verify(opts);
      report.print(std::cout);
      return report.pass() ? 0 : 3;
    } else if (*presets) {
      if (!show.empty()) {
        std::cout << preset_document(show).dump(2) << '\n';
      } else {
        for (const auto& p : list_presets()) {
          std::printf("%-6s %-6s %s\n", p.name.c_str(), p.sweep ? "sweep" : "run",
                      p.description.c_str());
        }
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
