#include "xychain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "xychain/error.hpp"

namespace xychain {

namespace {

constexpr double kPsdTolerance = 1e-7;
constexpr double kClampTolerance = 1e-10;

double clamp_diagonal(double v) {
  if (v >= 0.0) return v;
  if (v >= -kClampTolerance) return 0.0;
  throw DomainError("negative diagonal entry " + std::to_string(v) + " in two-site state");
}

ConcurrenceValue from_roots(std::array<double, 4> roots) {
  std::sort(roots.begin(), roots.end(), std::greater<>());
  ConcurrenceValue c;
  c.roots = roots;
  c.C = std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
  return c;
}

}  // namespace

TwoSiteState two_site_state(double M, double Sx, double Sy, double Sz) {
  TwoSiteState s;
  auto& r = s.rho;
  r(0, 0) = 0.25 + M + Sz;
  r(1, 1) = 0.25 - Sz;
  r(2, 2) = 0.25 - Sz;
  r(3, 3) = 0.25 - M + Sz;
  r(1, 2) = r(2, 1) = Sx + Sy;
  r(0, 3) = r(3, 0) = Sx - Sy;

  // PSD of an X-state: each 2x2 block has non-negative diagonal and determinant.
  const auto block_ok = [](double a, double d, double off) {
    const double lo = 0.5 * (a + d) - std::hypot(0.5 * (a - d), off);
    return lo >= -kPsdTolerance;
  };
  if (!block_ok(r(0, 0), r(3, 3), r(0, 3)) || !block_ok(r(1, 1), r(2, 2), r(1, 2))) {
    throw NumericalError("two-site state is not positive semidefinite (M=" + std::to_string(M) +
                         ", Sx=" + std::to_string(Sx) + ", Sy=" + std::to_string(Sy) +
                         ", Sz=" + std::to_string(Sz) + ")");
  }
  return s;
}

ConcurrenceValue concurrence_x(const TwoSiteState& state) {
  const auto& r = state.rho;
  const double a = std::sqrt(clamp_diagonal(r(0, 0)) * clamp_diagonal(r(3, 3)));
  const double b = std::sqrt(clamp_diagonal(r(1, 1)) * clamp_diagonal(r(2, 2)));
  const double x = std::abs(r(0, 3));
  const double y = std::abs(r(1, 2));
  return from_roots({a + x, std::abs(a - x), b + y, std::abs(b - y)});
}

ConcurrenceValue concurrence_general(const Eigen::Matrix4cd& rho) {
  if (std::abs(rho.trace() - 1.0) > 1e-8) throw DomainError("density matrix trace is not 1");
  const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(herm);
  if (eig.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw DomainError("density matrix is not positive semidefinite");
  }
  const Eigen::Vector4d w = eig.eigenvalues().cwiseMax(0.0);
  const Eigen::Matrix4cd sqrt_rho =
      eig.eigenvectors() * w.cwiseSqrt().cast<std::complex<double>>().asDiagonal() *
      eig.eigenvectors().adjoint();

  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const Eigen::Matrix4cd tilde = yy * herm.conjugate() * yy;

  const Eigen::Matrix4cd R = sqrt_rho * tilde * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eigR(0.5 * (R + R.adjoint()));
  std::array<double, 4> roots{};
  for (int k = 0; k < 4; ++k) roots[k] = std::sqrt(std::max(0.0, eigR.eigenvalues()(k)));
  return from_roots(roots);
}

double asymptotic_value(std::span<const std::pair<double, double>> series,
                        double window_fraction) {
  if (!(window_fraction > 0.0 && window_fraction < 1.0)) {
    throw PreconditionError("window fraction must lie in (0, 1)");
  }
  if (series.empty()) throw PreconditionError("empty series");
  const double t0 = series.front().first;
  const double t1 = series.back().first;
  const double start = t1 - window_fraction * (t1 - t0);
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& [t, c] : series) {
    if (t >= start) {
      sum += c;
      ++count;
    }
  }
  if (count < 10) {
    throw PreconditionError("only " + std::to_string(count) + " samples in the averaging window");
  }
  return sum / static_cast<double>(count);
}

}  // namespace xychain
