#include <algorithm>
#include <bit>
#include <cmath>

#include "xychain/entanglement.hpp"
#include "xychain/error.hpp"
#include "xychain/kernels.hpp"
#include "xychain/oracle.hpp"

namespace xychain {

using cd = std::complex<double>;

namespace {

constexpr int kMaxSpinSites = 10;
constexpr double kBaseSubstep = 0.05;
constexpr double kWeightCutoff = 1e-14;

// Pauli operator a (1 = x, 2 = y, 3 = z) on `site`; bit set means spin up.
void apply_pauli(int a, int site, std::span<const cd> in, std::span<cd> out) {
  const std::uint32_t bit = 1u << site;
  for (std::uint32_t s = 0; s < in.size(); ++s) {
    const bool up = s & bit;
    switch (a) {
      case 1: out[s ^ bit] = in[s]; break;
      case 2: out[s ^ bit] = (up ? cd(0.0, 1.0) : cd(0.0, -1.0)) * in[s]; break;
      case 3: out[s] = (up ? 1.0 : -1.0) * in[s]; break;
      default: out[s] = in[s];
    }
  }
}

cd pair_expectation(const Eigen::VectorXcd& psi, int a, int l, int b, int m) {
  Eigen::VectorXcd tmp(psi.size()), out(psi.size());
  apply_pauli(b, m, {psi.data(), static_cast<std::size_t>(psi.size())},
              {tmp.data(), static_cast<std::size_t>(tmp.size())});
  apply_pauli(a, l, {tmp.data(), static_cast<std::size_t>(tmp.size())},
              {out.data(), static_cast<std::size_t>(out.size())});
  return psi.dot(out);
}

Eigen::Matrix2cd pauli(int a) {
  Eigen::Matrix2cd s;
  switch (a) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cd(0, -1), cd(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: s.setIdentity();
  }
  return s;
}

}  // namespace

SpinOracle::SpinOracle(const ChainSpec& spec, bool even_parity_only) : spec_(spec) {
  spec_.validate();
  if (spec_.N > kMaxSpinSites) {
    throw ConfigError("spin oracle supports N <= " + std::to_string(kMaxSpinSites));
  }
  const std::uint32_t D = dim();
  const Eigen::MatrixXcd H = dense_hamiltonian(0.0);

  struct Level {
    double E;
    Eigen::VectorXcd v;
  };
  std::vector<Level> levels;
  for (int parity : {0, 1}) {
    if (even_parity_only && parity == 1) continue;
    std::vector<std::uint32_t> states;
    for (std::uint32_t s = 0; s < D; ++s) {
      if (std::popcount(s) % 2 == parity) states.push_back(s);
    }
    const auto d = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXcd Hs(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) Hs(i, j) = H(states[i], states[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(Hs);
    for (Eigen::Index k = 0; k < d; ++k) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(D);
      for (Eigen::Index i = 0; i < d; ++i) v(states[i]) = eig.eigenvectors()(i, k);
      levels.push_back({eig.eigenvalues()(k), std::move(v)});
    }
  }
  double e0 = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (const auto& l : levels) {
    e0 = std::min(e0, l.E);
    scale = std::max(scale, std::abs(l.E));
  }
  double total = 0.0;
  for (auto& l : levels) {
    double w;
    if (spec_.kT == 0.0) w = (l.E - e0 <= kDegeneracyTolerance * scale) ? 1.0 : 0.0;
    else if (std::isinf(spec_.kT)) w = 1.0;
    else w = std::exp(-(l.E - e0) / spec_.kT);
    if (w < kWeightCutoff) continue;
    weights_.push_back(w);
    vectors_.push_back(std::move(l.v));
    total += w;
  }
  for (double& w : weights_) w /= total;
}

void SpinOracle::apply_hamiltonian(double t, std::span<const cd> in, std::span<cd> out) const {
  const int N = spec_.N;
  const double J = spec_.coupling(t);
  const double h = spec_.field(t);
  const double g = spec_.gamma;
  std::fill(out.begin(), out.end(), cd{});
  for (std::uint32_t s = 0; s < in.size(); ++s) {
    const cd x = in[s];
    if (x == cd{}) continue;
    out[s] += -h * (2.0 * std::popcount(s) - N) * x;
    for (int i = 0; i < N; ++i) {
      const int j = (i + 1) % N;
      const std::uint32_t mask = (1u << i) | (1u << j);
      const bool same = ((s >> i) & 1u) == ((s >> j) & 1u);
      // -J/2 [(1+g) sx sx + (1-g) sy sy]; sy sy gives -1 on aligned pairs.
      const double yy = same ? -1.0 : 1.0;
      out[s ^ mask] += -0.5 * J * ((1.0 + g) + (1.0 - g) * yy) * x;
    }
  }
}

Eigen::MatrixXcd SpinOracle::dense_hamiltonian(double t) const {
  const std::uint32_t D = dim();
  Eigen::MatrixXcd H(D, D);
  std::vector<cd> e(D), col(D);
  for (std::uint32_t s = 0; s < D; ++s) {
    std::fill(e.begin(), e.end(), cd{});
    e[s] = 1.0;
    apply_hamiltonian(t, e, col);
    for (std::uint32_t r = 0; r < D; ++r) H(r, s) = col[r];
  }
  return H;
}

std::vector<SpinOracle::Snapshot> SpinOracle::evolve(std::span<const double> t_grid,
                                                     double tol) const {
  if (t_grid.empty() || t_grid.front() != 0.0) throw PreconditionError("time grid must start at 0");
  const int N = spec_.N;
  const int half = N / 2;
  const std::uint32_t D = dim();
  const std::size_t per_r = 16;
  const std::size_t width = 2 * (1 + per_r * half);

  auto observe = [&](const Eigen::VectorXcd& psi, double w, std::vector<double>& row) {
    double mz = 0.0;
    for (int i = 0; i < N; ++i) mz += pair_expectation(psi, 3, i, 0, i).real();
    row[0] += w * 0.5 * mz / N;
    for (int r = 1; r <= half; ++r) {
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const cd v = pair_expectation(psi, a, 0, b, r);
          const std::size_t k = 2 * (1 + per_r * (r - 1) + 4 * a + b);
          row[k] += w * v.real();
          row[k + 1] += w * v.imag();
        }
    }
  };

  const double rate = spec_.max_rate();
  const double dt0 = rate > 0.0 ? std::min(kBaseSubstep, 0.5 / rate) : kBaseSubstep;

  auto run = [&](int level) {
    const double dt_sub = dt0 / std::ldexp(1.0, level);
    std::vector<std::vector<double>> rows(t_grid.size(), std::vector<double>(width, 0.0));
    Eigen::VectorXcd term(D), next(D);
    for (std::size_t v = 0; v < vectors_.size(); ++v) {
      Eigen::VectorXcd psi = vectors_[v];
      observe(psi, weights_[v], rows[0]);
      for (std::size_t g = 1; g < t_grid.size(); ++g) {
        const double span = t_grid[g] - t_grid[g - 1];
        const long n = midpoint_substeps(span, dt_sub, 0);
        const double dt = span / static_cast<double>(n);
        for (long k = 0; k < n; ++k) {
          const double tm = t_grid[g - 1] + (static_cast<double>(k) + 0.5) * dt;
          // exp(-i H dt) psi by its Taylor series.
          term = psi;
          Eigen::VectorXcd sum = psi;
          for (int m = 1; m < 200; ++m) {
            apply_hamiltonian(tm, {term.data(), D}, {next.data(), D});
            term = next * cd(0.0, -dt / m);
            sum += term;
            if (term.norm() < 1e-17 * sum.norm()) break;
          }
          psi = sum;
        }
        observe(psi, weights_[v], rows[g]);
      }
    }
    return rows;
  };

  const RombergResult result = romberg_extrapolate(run, tol);
  std::vector<Snapshot> out;
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    const auto& row = result.values[g];
    Snapshot snap;
    snap.t = t_grid[g];
    snap.M = row[0];
    for (int r = 1; r <= half; ++r) {
      auto value = [&](int a, int b) {
        const std::size_t k = 2 * (1 + per_r * (r - 1) + 4 * a + b);
        return cd(row[k], row[k + 1]);
      };
      Correlators c;
      c.Sx = 0.25 * value(1, 1).real();
      c.Sy = 0.25 * value(2, 2).real();
      c.Sz = 0.25 * value(3, 3).real();
      c.Sxy = 0.25 * (value(1, 2) + value(2, 1)).real();
      snap.corr.push_back(c);
      Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          Eigen::Matrix4cd k;
          const Eigen::Matrix2cd pa = pauli(a), pb = pauli(b);
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = pa(i, j) * pb;
          rho += 0.25 * value(a, b) * k;
        }
      snap.two_site.push_back(rho);
      snap.C.push_back(concurrence_general(rho).C);
    }
    out.push_back(std::move(snap));
  }
  return out;
}

SpinDiscrepancy spin_evolve_compare(const SpinOracle& oracle, std::span<const double> t_grid,
                                    double tol) {
  const auto snaps = oracle.evolve(t_grid, tol);
  const ModeTable table = evolve_modes_serial(oracle.spec(), t_grid, {Solver::automatic, tol});
  const int r1[] = {1};
  const auto obs = observe_serial(table, r1);
  SpinDiscrepancy d;
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    const auto& s = snaps[g];
    const auto& o = obs[g];
    d.M = std::max(d.M, std::abs(o.M - s.M));
    d.Sx = std::max(d.Sx, std::abs(o.corr.Sx - s.corr[0].Sx));
    d.Sy = std::max(d.Sy, std::abs(o.corr.Sy - s.corr[0].Sy));
    d.Sz = std::max(d.Sz, std::abs(o.corr.Sz - s.corr[0].Sz));
    d.C = std::max(d.C, std::abs(o.C - s.C[0]));
  }
  return d;
}

}  // namespace xychain
