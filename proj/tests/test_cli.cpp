#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xychain/config.hpp"
#include "xychain/error.hpp"
#include "xychain/oracle.hpp"
#include "xychain/presets.hpp"
#include "xychain/runner.hpp"
#include "xychain/verify.hpp"

using namespace xychain;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "xychain_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

int cli(const std::string& args) {
  const int status = std::system((std::string(XYCHAIN_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("config round trip") {
  RunConfig cfg;
  cfg.spec.N = 12;
  cfg.spec.gamma = 0.3;
  cfg.spec.kT = 0.1 + 0.2;  // not exactly representable in short decimal
  cfg.spec.j_profile = DrivingProfile::hyperbolic(0.5, 2.0 / 3.0, 7.0);
  cfg.spec.h_profile = DrivingProfile::sine(1.0 / 7.0, 0.3);
  cfg.t_max = 12.345678901234567;
  cfg.n_samples = 17;
  cfg.separations = {1, 3};
  cfg.solver = Solver::numeric;
  cfg.tol = 1e-10;
  cfg.output_path = "x.csv";
  CHECK(parse_run_config(serialize(cfg)) == cfg);

  cfg.spec.kT = std::numeric_limits<double>::infinity();
  CHECK(parse_run_config(serialize(cfg)) == cfg);

  for (const auto& p : list_presets()) {
    json doc = {{"preset", p.name}};
    if (p.sweep) {
      const SweepConfig s = sweep_config_from_json(doc);
      CHECK(parse_sweep_config(serialize(s)) == s);
    } else {
      const RunConfig r = run_config_from_json(doc);
      CHECK(parse_run_config(serialize(r)) == r);
    }
  }
}

TEST_CASE("presets match their captions") {
  const RunConfig a = run_config_from_json({{"preset", "fig1a"}});
  CHECK(a.spec.N == 1000);
  CHECK(a.spec.gamma == 1.0);
  CHECK(a.spec.kT == 0.0);
  CHECK(a.spec.j_profile == DrivingProfile::exponential(0.5, 2.0, 0.1));
  CHECK(a.spec.h_profile == DrivingProfile::constant(1.0));
  CHECK(run_config_from_json({{"preset", "fig1d"}}).spec.j_profile ==
        DrivingProfile::hyperbolic(0.5, 2.0, 10.0));
  CHECK(run_config_from_json({{"preset", "fig3b"}}).spec.j_profile == DrivingProfile::cosine(0.5, 0.5));
  CHECK(run_config_from_json({{"preset", "fig4c"}}).spec.j_profile == DrivingProfile::sine(0.5, 1.0));

  const RunConfig b = run_config_from_json({{"preset", "fig5b"}});
  CHECK(b.spec.proportional());
  CHECK(b.spec.j_profile.lambda == 1.0);
  CHECK(b.spec.h_profile == DrivingProfile::exponential(0.5, 1.0, 0.1));
  const RunConfig e = run_config_from_json({{"preset", "fig5e"}});
  CHECK(e.spec.h_profile == DrivingProfile::sine(0.5, 1.0));

  const SweepConfig f2 = sweep_config_from_json({{"preset", "fig2"}});
  CHECK(f2.variable == SweepVariable::N);
  CHECK(f2.values == std::vector<double>{100, 150, 200, 250, 300});
  CHECK(f2.base.spec.j_profile == DrivingProfile::exponential(0.5, 2.0, 1000.0));

  const SweepConfig f6 = sweep_config_from_json({{"preset", "fig6a"}});
  CHECK(f6.values.size() == 25);
  CHECK(f6.values.front() == doctest::Approx(0.2));
  CHECK(f6.values.back() == doctest::Approx(3.0));
  CHECK(sweep_config_from_json({{"preset", "fig7b"}}).base.spec.gamma == 0.0);
  CHECK_THROWS_AS(preset_document("fig9"), ConfigError);
}

TEST_CASE("explicit keys override presets") {
  const RunConfig c = run_config_from_json({{"preset", "fig3c"}, {"N", 40}, {"J", {{"K", 2.0}}}});
  CHECK(c.spec.N == 40);
  CHECK(c.spec.j_profile.K == 2.0);
  CHECK(c.spec.j_profile.kind == ProfileKind::cos);
  CHECK(c.spec.j_profile.J0 == 0.5);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(run_config_from_json({{"N", 7}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json({{"n_samples", 1}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json({{"N", 8}, {"separations", {5}}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json({{"solver", "exact"}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json({{"colour", "red"}}), ConfigError);
  CHECK_THROWS_AS(run_config_from_json({{"tol", 0}}), ConfigError);
  CHECK_THROWS_AS(parse_run_config("{not json"), ConfigError);
  CHECK_THROWS_AS(sweep_config_from_json({{"sweep", {{"variable", "kT"}, {"values", {1, 0.5}}}}}),
                  ConfigError);
  CHECK_THROWS_AS(sweep_config_from_json({{"sweep", {{"variable", "kT"}, {"values", json::array()}}}}),
                  ConfigError);
  CHECK_THROWS_AS(sweep_config_from_json({{"sweep", {{"variable", "lambda"}, {"values", {1}}}}}),
                  ConfigError);
}

TEST_CASE("default t_max") {
  ChainSpec s;
  s.j_profile = DrivingProfile::exponential(0.5, 2.0, 0.5);
  CHECK(default_t_max(s) == doctest::Approx(40.0));
  s.j_profile = DrivingProfile::cosine(0.5, 0.5);
  CHECK(default_t_max(s) == doctest::Approx(40.0 * M_PI));
  CHECK(run_config_from_json({{"J", {{"kind", "exp"}, {"J0", 1}, {"J1", 2}, {"K", 4}}}}).t_max == 5.0);
}

TEST_CASE("sweep points") {
  const SweepConfig f6 = sweep_config_from_json({{"preset", "fig6a"}});
  for (std::size_t v = 0; v < f6.variants.size(); ++v) {
    const RunConfig p = f6.point(v, 2.5);
    CHECK(p.spec.j_profile.lambda == 2.5);
    CHECK(p.spec.coupling(0.0) == doctest::Approx(1.0));
    CHECK(p.spec.field(0.0) == doctest::Approx(0.4));
  }
  const SweepConfig k = sweep_config_from_json(
      {{"J", {{"kind", "exp"}, {"J0", 0.5}, {"J1", 2}, {"K", 1}}}, {"sweep", {{"variable", "K"}, {"values", {1, 2}}}}});
  CHECK(k.point(0, 2.0).spec.j_profile.K == 2.0);
}

TEST_CASE("t_max = 0 gives the oracle equilibrium") {
  RunConfig cfg = run_config_from_json({{"N", 6}, {"gamma", 0.5}, {"kT", 0.5}, {"J", 0.8}, {"t_max", 0}});
  cfg.separations = {1, 2, 3};
  const Timeseries ts = run_timeseries(cfg);
  REQUIRE(ts.rows.size() == 3);
  const FockOracle o(cfg.spec);
  const auto ref = fock_expectations(o, fock_thermal_state(o));
  for (int k = 0; k < 3; ++k) {
    CHECK(ts.rows[k].t == 0.0);
    CHECK(std::abs(ts.rows[k].M - ref.M) < 1e-12);
    CHECK(std::abs(ts.rows[k].corr.Sx - ref.corr[k].Sx) < 1e-12);
    CHECK(std::abs(ts.rows[k].C - ref.C[k]) < 1e-12);
  }
}

TEST_CASE("csv layout and determinism") {
  const RunConfig cfg = run_config_from_json(
      {{"N", 40}, {"J", {{"kind", "exp"}, {"J0", 0.5}, {"J1", 2}, {"K", 1}}}, {"t_max", 3}, {"n_samples", 7},
       {"separations", {1, 2}}});
  std::ostringstream a, b;
  write_timeseries_csv(a, run_timeseries(cfg));
  write_timeseries_csv(b, run_timeseries(cfg));
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,r,M,Sx,Sy,Sz,C");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 14);
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("revival detector") {
  std::vector<std::pair<double, double>> s;
  for (int k = 0; k <= 1000; ++k) {
    const double t = 0.1 * k;
    s.emplace_back(t, t < 0.5 ? 0.3 : (t < 60 ? 0.1 + 0.002 * std::sin(t) : 0.2));
  }
  CHECK(detect_revival(s, 10.0).value() == doctest::Approx(60.0));
  for (auto& p : s) p.second = 0.1;
  CHECK_FALSE(detect_revival(s, 10.0).has_value());
}

TEST_CASE("sweep table") {
  const SweepConfig cfg = sweep_config_from_json(
      {{"N", 20}, {"J", {{"kind", "proportional"}, {"lambda", 1}}}, {"h", {{"kind", "exp"}, {"J0", 1}, {"J1", 2}, {"K", 1}}},
       {"t_max", 5}, {"n_samples", 51},
       {"sweep", {{"variable", "kT"}, {"values", {0, 0.5, 1}}}}});
  const SweepTable t = run_sweep(cfg);
  CHECK(t.columns == std::vector<std::string>{"value", "C_asym"});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[1][1] <= t.rows[0][1] + 1e-6);
  CHECK(t.rows[2][1] <= t.rows[1][1] + 1e-6);
}

TEST_CASE("verify: small oracle matrix passes, flipped pairing sign fails") {
  VerifyOptions opts;
  opts.max_N = 4;
  CHECK(verify(opts).pass());
  opts.kappa = KappaConvention::flipped;
  CHECK_FALSE(verify(opts).pass());
}

TEST_CASE("command line exit codes") {
  const fs::path out = scratch("run.csv");
  const fs::path cfg = scratch("cfg.json");
  write(cfg, R"({"preset": "fig3c", "N": 20, "t_max": 2, "n_samples": 5})");
  CHECK(cli("run --config " + cfg.string() + " --output " + out.string()) == 0);
  const std::string first = slurp(out);
  CHECK(first.rfind("t,r,M,Sx,Sy,Sz,C\n", 0) == 0);
  CHECK(cli("run --config " + cfg.string() + " --output " + out.string() + " --threads 1") == 0);
  CHECK(slurp(out) == first);

  write(cfg, R"({"N": 5})");
  CHECK(cli("run --config " + cfg.string()) == 1);
  CHECK(cli("run --preset nope") == 1);
  CHECK(cli("run") == 1);
  CHECK(cli("presets") == 0);
  CHECK(cli("verify --max-n 4") == 0);
  CHECK(cli("verify --max-n 4 --flip-kappa") == 3);
  CHECK(cli("bogus") != 0);

  // Exceeding what the integrator can resolve is a numerical failure.
  write(cfg, R"({"N": 8, "J": {"kind": "exp", "J0": 0.5, "J1": 2, "K": 1e15}, "t_max": 1e-13, "n_samples": 2})");
  CHECK(cli("run --config " + cfg.string()) == 2);
}
