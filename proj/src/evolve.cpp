#include "xychain/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "xychain/error.hpp"

namespace xychain {

using cd = std::complex<double>;

namespace {

constexpr cd kI{0.0, 1.0};

struct Sector {
  const ChainSpec& spec;
  double delta;
  double cos_sum;  // cos(phi) + cos(partner)

  // -i H(t) restricted to {|0>, |pair>}.
  Mat2 generator(double t) const {
    const double J = spec.coupling(t);
    const double h = spec.field(t);
    Mat2 A;
    A(0, 0) = -kI * (2.0 * h);
    A(0, 1) = -kI * (-kI * J * delta);
    A(1, 0) = -kI * (kI * J * delta);
    A(1, 1) = -kI * (-2.0 * J * cos_sum - 2.0 * h);
    return A;
  }

  void rk4_step(Mat2& U, double t, double dt) const {
    const Mat2 A0 = generator(t);
    const Mat2 Am = generator(t + 0.5 * dt);
    const Mat2 A1 = generator(t + dt);
    const Mat2 k1 = A0 * U;
    const Mat2 k2 = Am * (U + 0.5 * dt * k1);
    const Mat2 k3 = Am * (U + 0.5 * dt * k2);
    const Mat2 k4 = A1 * (U + dt * k3);
    U += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  // caps[g] is the step limit on [grid[g-1], grid[g]] before halving.
  std::vector<Mat2> run(std::span<const double> grid, std::span<const double> caps,
                        double scale) const {
    std::vector<Mat2> out;
    out.reserve(grid.size());
    Mat2 U = Mat2::Identity();
    out.push_back(U);
    for (std::size_t g = 1; g < grid.size(); ++g) {
      const double span = grid[g] - grid[g - 1];
      const double cap = caps[g] * scale;
      const auto n = std::max<long>(1, static_cast<long>(std::ceil(span / cap - 1e-9)));
      const double dt = span / static_cast<double>(n);
      double t = grid[g - 1];
      for (long s = 0; s < n; ++s) {
        rk4_step(U, t, dt);
        t = grid[g - 1] + static_cast<double>(s + 1) * dt;
      }
      out.push_back(U);
    }
    return out;
  }
};

double defect2(const Mat2& U) {
  return (U.adjoint() * U - Mat2::Identity()).cwiseAbs().maxCoeff();
}

void check_grid(std::span<const double> grid) {
  if (grid.empty() || grid.front() != 0.0) {
    throw PreconditionError("time grid must start at 0");
  }
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (!(grid[g] > grid[g - 1])) throw PreconditionError("time grid must be strictly ascending");
  }
}

Mat4 assemble(const Mat2& sector, cd u33, cd u44) {
  Mat4 U = Mat4::Zero();
  U.topLeftCorner<2, 2>() = sector;
  U(2, 2) = u33;
  U(3, 3) = u44;
  return U;
}

}  // namespace

double unitarity_defect(const Mat4& U) {
  return (U.adjoint() * U - Mat4::Identity()).cwiseAbs().maxCoeff();
}

std::vector<Propagator> propagate_numeric(const ChainSpec& spec, const ModeBlock& mode,
                                          std::span<const double> t_grid, double tol) {
  check_grid(t_grid);
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");

  const Sector sector{spec, mode.delta, std::cos(mode.phi) + std::cos(mode.partner_phi)};

  const double Jm = spec.max_abs_coupling();
  const double hm = spec.max_abs_field();
  const double norm = std::sqrt(std::pow(2.0 * hm, 2) + 2.0 * std::pow(Jm * mode.delta, 2) +
                                std::pow(2.0 * Jm * std::abs(sector.cos_sum) + 2.0 * hm, 2));
  double base = 0.01;
  if (norm > 0.0) base = std::min(base, 0.1 / norm);
  // The 0.1/K limit applies only on intervals where a profile still varies.
  std::vector<double> caps(t_grid.size(), base);
  double smallest = base;
  for (std::size_t g = 1; g < t_grid.size(); ++g) {
    const double rate = spec.rate_after(t_grid[g - 1]);
    if (rate > 0.0) caps[g] = std::min(base, 0.1 / rate);
    smallest = std::min(smallest, caps[g]);
  }

  const double t_end = t_grid.back();
  const double floor = 1e-13 * std::max(1.0, t_end);

  std::vector<Mat2> previous;
  std::vector<Mat2> current;
  double failing_time = 0.0;
  for (double scale = 1.0;; scale *= 0.5) {
    if (smallest * scale < floor) {
      throw IntegrationError("RK4 step underflow for mode p=" + std::to_string(mode.p),
                             failing_time);
    }
    current = sector.run(t_grid, caps, scale);
    bool ok = !previous.empty();
    for (std::size_t g = 0; g < current.size(); ++g) {
      const double unitarity = defect2(current[g]);
      const double estimate =
          previous.empty() ? 0.0 : (current[g] - previous[g]).cwiseAbs().maxCoeff() / 15.0;
      if (unitarity >= tol || estimate >= tol) {
        ok = false;
        failing_time = t_grid[g];
        break;
      }
    }
    if (ok) break;
    previous = std::move(current);
  }

  std::vector<Propagator> out;
  out.reserve(t_grid.size());
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    const double phase = spec.coupling_integral(t_grid[g]);
    out.push_back({mode, t_grid[g],
                   assemble(current[g], std::exp(2.0 * kI * std::cos(mode.phi) * phase),
                            std::exp(2.0 * kI * std::cos(mode.partner_phi) * phase))});
  }
  return out;
}

ExactAngles exact_angles(const ModeBlock& mode, double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw PreconditionError("exact angles need a finite nonzero lambda");
  }
  const double c = mode.mean_cos();
  const double d = 2.0 * c + 2.0 / lambda;
  const double R = std::hypot(mode.delta, d);

  ExactAngles a;
  a.lambda = lambda;
  if (R == 0.0) {
    a.sin_theta = a.cos_theta = std::numbers::sqrt2 / 2.0;
  } else {
    a.sin_theta = std::copysign(std::sqrt(std::max(0.0, (R - d) / (2.0 * R))), mode.delta);
    a.cos_theta = std::sqrt(std::max(0.0, (R + d) / (2.0 * R)));
  }
  a.theta = std::atan2(a.sin_theta, a.cos_theta);
  a.lambda1 = R - 2.0 * c;
  a.lambda2 = -R - 2.0 * c;
  return a;
}

Propagator propagate_exact(const ChainSpec& spec, const ModeBlock& mode, double t) {
  if (!spec.proportional()) {
    throw PreconditionError("exact propagator requires J(t) = lambda h(t)");
  }
  if (!(t >= 0.0)) throw PreconditionError("time must be non-negative");

  const ExactAngles a = exact_angles(mode, spec.j_profile.lambda);
  const double phase = spec.coupling_integral(t);
  const cd e1 = std::exp(-kI * a.lambda1 * phase);
  const cd e2 = std::exp(-kI * a.lambda2 * phase);
  const double s = a.sin_theta;
  const double c = a.cos_theta;

  Mat2 u;
  u(0, 0) = c * c * e1 + s * s * e2;
  u(0, 1) = -kI * s * c * (e1 - e2);
  u(1, 0) = -u(0, 1);
  u(1, 1) = s * s * e1 + c * c * e2;
  return {mode, t,
          assemble(u, std::exp(2.0 * kI * std::cos(mode.phi) * phase),
                   std::exp(2.0 * kI * std::cos(mode.partner_phi) * phase))};
}

ModeState evolve_state(const ModeState& init, const Propagator& U) {
  if (!(init.mode == U.mode)) {
    throw PreconditionError("state and propagator belong to different modes");
  }
  ModeState out;
  out.mode = init.mode;
  out.t = U.t;
  out.rho = U.U * init.rho * U.U.adjoint();
  out.trace = out.rho.trace().real();
  return out;
}

}  // namespace xychain
