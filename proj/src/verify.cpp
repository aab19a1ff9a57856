#include "xychain/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/kernels.hpp"
#include "xychain/oracle.hpp"
#include "xychain/pfaffian.hpp"

namespace xychain {

namespace {

using cd = std::complex<double>;

struct Tracker {
  StageResult result;
  void update(double value, const std::string& where) {
    if (std::isnan(value)) value = INFINITY;
    if (result.where.empty() || value > result.worst) {
      result.worst = value;
      result.where = where;
    }
  }
};

Tracker tracker(const std::string& name, double limit) { return {{name, 0.0, limit, ""}}; }

std::string label(const ChainSpec& s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "N=%d gamma=%g kT=%g J=%s", s.N, s.gamma, s.kT,
                std::string(to_string(s.j_profile.kind)).c_str());
  return buf;
}

double two_site_defect(const Eigen::Matrix4d& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(rho);
  return std::max(std::abs(rho.trace() - 1.0), std::max(0.0, -es.eigenvalues().minCoeff()));
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(stages.begin(), stages.end(), [](const auto& s) { return s.pass(); });
}

void VerifyReport::print(std::ostream& out) const {
  for (const auto& s : stages) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-4s %-24s worst %.3e  limit %.1e", s.pass() ? "ok" : "FAIL",
                  s.name.c_str(), s.worst, s.limit);
    out << buf;
    if (!s.where.empty()) out << "  [" << s.where << "]";
    out << '\n';
  }
  out << (pass() ? "verify: PASS" : "verify: FAIL") << '\n';
}

std::vector<StageResult> invariant_suites() {
  std::mt19937_64 rng(20240611);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  Tracker pf = tracker("pfaffian^2 = det", 1e-8);
  for (int n = 2; n <= 16; n += 2) {
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::MatrixXcd A(n, n);
      for (int i = 0; i < n; ++i) {
        A(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
          A(i, j) = cd(normal(rng), normal(rng));
          A(j, i) = -A(i, j);
        }
      }
      const cd p = pfaffian(A);
      const cd d = A.determinant();
      pf.update(std::abs(p * p - d) / std::max(1e-300, std::abs(d)), "n=" + std::to_string(n));
    }
  }

  Tracker cx = tracker("concurrence_x vs general", 1e-10);
  for (int rep = 0; rep < 1000; ++rep) {
    // Random X-state: positive diagonal, coherences inside the PSD bounds.
    double d[4];
    double sum = 0.0;
    for (double& x : d) sum += (x = uniform(rng) + 1e-3);
    for (double& x : d) x /= sum;
    const double r14 = (2.0 * uniform(rng) - 1.0) * std::sqrt(d[0] * d[3]);
    const double r23 = (2.0 * uniform(rng) - 1.0) * std::sqrt(d[1] * d[2]);
    TwoSiteState s;
    s.rho.diagonal() << d[0], d[1], d[2], d[3];
    s.rho(0, 3) = s.rho(3, 0) = r14;
    s.rho(1, 2) = s.rho(2, 1) = r23;
    const double a = concurrence_x(s).C;
    const double b = concurrence_general(s.rho.cast<cd>()).C;
    cx.update(std::abs(a - b), "sample " + std::to_string(rep));
  }

  Tracker werner = tracker("Werner C(p=0.5)", 1e-10);
  {
    Eigen::Vector4cd psi(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0);
    const Eigen::Matrix4cd rho = 0.5 * psi * psi.adjoint() + 0.5 / 4.0 * Eigen::Matrix4cd::Identity();
    werner.update(std::abs(concurrence_general(rho).C - 0.25), "general");
    TwoSiteState s;
    s.rho = rho.real();
    werner.update(std::abs(concurrence_x(s).C - 0.25), "x-state");
  }
  return {pf.result, cx.result, werner.result};
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.max_N < 4 || options.max_N > 12) throw ConfigError("max_N must be in 4..12");

  Tracker modes = tracker("oracle modes", options.limit);
  Tracker mag = tracker("oracle M", options.limit);
  Tracker sx = tracker("oracle Sx", options.limit);
  Tracker sy = tracker("oracle Sy", options.limit);
  Tracker sz = tracker("oracle Sz", options.limit);
  Tracker conc = tracker("oracle C", options.limit);
  Tracker unit = tracker("unitarity defect", 1e-9);
  Tracker state = tracker("two-site PSD/trace", 1e-9);
  Tracker fock = tracker("oracle anticommutators", 1e-12);

  const std::vector<double> grid = uniform_grid(10.0, 41);
  const DrivingProfile profiles[] = {
      DrivingProfile::exponential(0.5, 2.0, 1.0), DrivingProfile::hyperbolic(0.5, 2.0, 1.0),
      DrivingProfile::cosine(0.5, 1.0), DrivingProfile::sine(0.5, 1.0)};

  KernelOptions kernel;
  kernel.solver = Solver::numeric;
  kernel.tol = options.tol;
  kernel.kappa = options.kappa;

  for (int N = 4; N <= options.max_N; N += 2) {
    for (double gamma : {0.0, 0.5, 1.0}) {
      for (double kT : {0.0, 0.5, 1.0}) {
        for (const auto& profile : profiles) {
          ChainSpec spec;
          spec.N = N;
          spec.gamma = gamma;
          spec.kT = kT;
          spec.j_profile = profile;
          spec.h_profile = DrivingProfile::constant(1.0);
          const std::string where = label(spec);

          const FockOracle oracle(spec);
          fock.update(oracle.anticommutation_defect(), where);
          const auto reference = fock_observe(oracle, grid, options.tol * 0.1);

          std::vector<int> rs;
          for (int r = 1; r <= N / 2; ++r) rs.push_back(r);
          double case_worst = 0.0;
          try {
          const ModeTable table = evolve_modes_serial(spec, grid, kernel);
          unit.update(table.max_unitarity_defect, where);
          const auto obs = observe_serial(table, rs);

          for (std::size_t g = 0; g < grid.size(); ++g) {
            const auto& ref = reference[g];
            const auto row = table.at(g);
            for (std::size_t p = 0; p < row.size(); ++p) {
              const double d = std::max({std::abs(row[p].n_p - ref.modes[p].n_p),
                                         std::abs(row[p].n_mp - ref.modes[p].n_mp),
                                         std::abs(row[p].kappa - ref.modes[p].kappa)});
              modes.update(d, where);
            }
            for (std::size_t k = 0; k < rs.size(); ++k) {
              const Observation& o = obs[g * rs.size() + k];
              const Correlators& c = ref.corr[k];
              const double dm = std::abs(o.M - ref.M);
              const double dx = std::abs(o.corr.Sx - c.Sx);
              const double dy = std::abs(o.corr.Sy - c.Sy);
              const double dz = std::abs(o.corr.Sz - c.Sz);
              const double dc = std::abs(o.C - ref.C[k]);
              mag.update(dm, where);
              sx.update(dx, where);
              sy.update(dy, where);
              sz.update(dz, where);
              conc.update(dc, where);
              case_worst = std::max({case_worst, dm, dx, dy, dz, dc});
              state.update(two_site_defect(two_site_state(o.M, o.corr.Sx, o.corr.Sy, o.corr.Sz).rho),
                           where);
            }
          }
          } catch (const Error& e) {
            // A pipeline that cannot even build its states fails the C stage.
            conc.update(INFINITY, where + ": " + e.what());
            case_worst = INFINITY;
          }
          if (options.log) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  worst %.2e", case_worst);
            *options.log << where << buf << '\n';
          }
        }
      }
    }
  }

  VerifyReport report;
  report.stages = {modes.result, mag.result,  sx.result,   sy.result,  sz.result,
                   conc.result,  unit.result, state.result, fock.result};
  for (auto& s : invariant_suites()) report.stages.push_back(s);
  return report;
}

}  // namespace xychain
