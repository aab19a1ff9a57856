#include "xychain/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "xychain/error.hpp"

namespace xychain {

using cd = std::complex<double>;

std::string_view to_string(MomentumGrid grid) {
  return grid == MomentumGrid::periodic ? "periodic" : "antiperiodic";
}

MomentumGrid momentum_grid_from_string(std::string_view name) {
  if (name == "periodic") return MomentumGrid::periodic;
  if (name == "antiperiodic") return MomentumGrid::antiperiodic;
  throw ConfigError("unknown momentum grid '" + std::string(name) + "'");
}

void ChainSpec::validate() const {
  if (N < 4 || N % 2 != 0) {
    throw ConfigError("N must be even and >= 4, got " + std::to_string(N));
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ConfigError("gamma must lie in [0, 1]");
  }
  if (!(kT >= 0.0)) {
    throw ConfigError("kT must be non-negative");
  }
  j_profile.validate();
  h_profile.validate();
  if (h_profile.kind == ProfileKind::proportional) {
    throw ConfigError("the field profile cannot be proportional; declare J(t) = lambda h(t) instead");
  }
}

double ChainSpec::field(double t) const { return evaluate_profile(h_profile, t); }

double ChainSpec::coupling(double t) const {
  if (proportional()) return evaluate_profile(j_profile, t, field(t));
  return evaluate_profile(j_profile, t);
}

double ChainSpec::field_integral(double t) const { return profile_antiderivative(h_profile, t); }

double ChainSpec::coupling_integral(double t) const {
  if (proportional()) return profile_antiderivative(j_profile, t, field_integral(t));
  return profile_antiderivative(j_profile, t);
}

double ChainSpec::max_abs_field() const { return h_profile.max_abs(); }

double ChainSpec::max_abs_coupling() const {
  if (proportional()) return std::abs(j_profile.lambda) * h_profile.max_abs();
  return j_profile.max_abs();
}

double ChainSpec::max_rate() const {
  double rate = 0.0;
  if (h_profile.time_dependent()) rate = std::max(rate, h_profile.K);
  if (j_profile.time_dependent() && !proportional()) rate = std::max(rate, j_profile.K);
  return rate;
}

double ChainSpec::rate_after(double t) const {
  double rate = 0.0;
  if (h_profile.time_dependent() && t < h_profile.settle_time()) rate = std::max(rate, h_profile.K);
  if (j_profile.time_dependent() && !proportional() && t < j_profile.settle_time()) {
    rate = std::max(rate, j_profile.K);
  }
  return rate;
}

double ModeBlock::mean_cos() const { return 0.5 * (std::cos(phi) + std::cos(partner_phi)); }

ModeBlock mode_block(const ChainSpec& spec, int p) {
  const int half = spec.N / 2;
  if (p < 1 || p > half) {
    throw PreconditionError("mode index " + std::to_string(p) + " outside 1.." +
                            std::to_string(half));
  }
  ModeBlock m;
  m.p = p;
  if (spec.grid == MomentumGrid::periodic) {
    if (p == half) {
      m.phi = std::numbers::pi;
      m.partner_phi = 0.0;
      m.delta = 0.0;
      return m;
    }
    m.phi = 2.0 * std::numbers::pi * p / spec.N;
  } else {
    m.phi = (2.0 * p - 1.0) * std::numbers::pi / spec.N;
  }
  m.partner_phi = -m.phi;
  m.delta = 2.0 * spec.gamma * std::sin(m.phi);
  return m;
}

std::vector<ModeBlock> mode_blocks(const ChainSpec& spec) {
  std::vector<ModeBlock> out;
  out.reserve(spec.N / 2);
  for (int p = 1; p <= spec.N / 2; ++p) out.push_back(mode_block(spec, p));
  return out;
}

Mat4 hamiltonian_block(const ChainSpec& spec, const ModeBlock& mode, double t) {
  const double J = spec.coupling(t);
  const double h = spec.field(t);
  const cd i(0.0, 1.0);
  Mat4 H = Mat4::Zero();
  H(0, 0) = 2.0 * h;
  H(0, 1) = -i * J * mode.delta;
  H(1, 0) = i * J * mode.delta;
  H(1, 1) = -2.0 * J * (std::cos(mode.phi) + std::cos(mode.partner_phi)) - 2.0 * h;
  H(2, 2) = -2.0 * J * std::cos(mode.phi);
  H(3, 3) = -2.0 * J * std::cos(mode.partner_phi);
  return H;
}

ModeState thermal_state(const ChainSpec& spec, const ModeBlock& mode) {
  const Mat4 H = hamiltonian_block(spec, mode, 0.0);
  Eigen::SelfAdjointEigenSolver<Mat4> eig(H);
  const Eigen::Vector4d& E = eig.eigenvalues();  // ascending
  const Mat4& V = eig.eigenvectors();

  Eigen::Vector4d w;
  if (spec.kT == 0.0) {
    const double scale = std::max(1.0, E.cwiseAbs().maxCoeff());
    for (int k = 0; k < 4; ++k) {
      w(k) = (E(k) - E(0) <= kDegeneracyTolerance * scale) ? 1.0 : 0.0;
    }
  } else if (std::isinf(spec.kT)) {
    w.setOnes();
  } else {
    const double beta = 1.0 / spec.kT;
    // exp(-beta E) overflows past ~709; shift only when needed.
    const double shift = (-beta * E(0) > 600.0) ? E(0) : 0.0;
    for (int k = 0; k < 4; ++k) w(k) = std::exp(-beta * (E(k) - shift));
  }

  ModeState s;
  s.mode = mode;
  s.t = 0.0;
  s.rho = V * w.cast<cd>().asDiagonal() * V.adjoint();
  s.rho = 0.5 * (s.rho + s.rho.adjoint()).eval();
  s.trace = s.rho.trace().real();
  return s;
}

}  // namespace xychain
