#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "xychain/error.hpp"
#include "xychain/evolve.hpp"
#include "xychain/kernels.hpp"

using namespace xychain;
using cd = std::complex<double>;

namespace {

// exp(-i H t) for a constant Hermitian H.
Mat4 propagator(const Mat4& H, double t) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(H);
  Eigen::Vector4cd ph;
  for (int k = 0; k < 4; ++k) ph(k) = std::exp(cd(0, -es.eigenvalues()(k) * t));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Product of midpoint exponentials, fine enough to serve as reference.
Mat4 time_ordered(const ChainSpec& s, const ModeBlock& b, double t, int steps) {
  Mat4 U = Mat4::Identity();
  const double dt = t / steps;
  for (int k = 0; k < steps; ++k) U = propagator(hamiltonian_block(s, b, (k + 0.5) * dt), dt) * U;
  return U;
}

ChainSpec driven(double gamma) {
  ChainSpec s;
  s.N = 10;
  s.gamma = gamma;
  s.j_profile = DrivingProfile::exponential(0.5, 2.0, 1.0);
  s.h_profile = DrivingProfile::constant(1.0);
  return s;
}

}  // namespace

TEST_CASE("numeric propagator for constant couplings is exp(-iHt)") {
  ChainSpec s = driven(0.6);
  s.j_profile = DrivingProfile::constant(1.3);
  const auto grid = uniform_grid(5.0, 11);
  for (const auto& b : mode_blocks(s)) {
    const auto U = propagate_numeric(s, b, grid, 1e-10);
    for (const auto& u : U) CHECK((u.U - propagator(hamiltonian_block(s, b, 0), u.t)).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("numeric propagator is time ordered") {
  const ChainSpec s = driven(1.0);
  const auto grid = uniform_grid(3.0, 4);
  const ModeBlock b = mode_block(s, 2);
  const auto U = propagate_numeric(s, b, grid, 1e-11);
  // Midpoint products converge as dt^2: extrapolate two of them.
  const Mat4 coarse = time_ordered(s, b, 3.0, 2000);
  const Mat4 fine = time_ordered(s, b, 3.0, 4000);
  const Mat4 ref = (4.0 * fine - coarse) / 3.0;
  CHECK((U.back().U - ref).cwiseAbs().maxCoeff() < 1e-8);
  // The reversed ordering gives something else.
  Mat4 reversed = Mat4::Identity();
  for (int k = 0; k < 4000; ++k) {
    reversed = reversed * propagator(hamiltonian_block(s, b, (k + 0.5) * 3.0 / 4000), 3.0 / 4000);
  }
  CHECK((U.back().U - reversed).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("exact angles diagonalize the coupled sector") {
  ChainSpec s;
  s.N = 12;
  s.gamma = 0.7;
  for (double lambda : {0.25, 1.0, -0.5, 3.0}) {
    for (const auto& b : mode_blocks(s)) {
      const ExactAngles a = exact_angles(b, lambda);
      // Sector of H / J with h = J / lambda.
      Eigen::Matrix2cd H;
      H << 2.0 / lambda, cd(0, -b.delta), cd(0, b.delta),
          -2.0 * (std::cos(b.phi) + std::cos(b.partner_phi)) - 2.0 / lambda;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(H);
      CHECK(a.lambda2 == doctest::Approx(es.eigenvalues()(0)).epsilon(1e-12));
      CHECK(a.lambda1 == doctest::Approx(es.eigenvalues()(1)).epsilon(1e-12));
      CHECK(a.sin_theta * a.sin_theta + a.cos_theta * a.cos_theta == doctest::Approx(1.0));
    }
  }
  CHECK_THROWS_AS(exact_angles(mode_block(s, 1), 0.0), PreconditionError);
}

TEST_CASE("exact and numeric propagators agree for proportional driving") {
  ChainSpec s;
  s.N = 20;
  s.gamma = 1.0;
  s.h_profile = DrivingProfile::exponential(0.5, 2.0, 1.0);
  const auto grid = uniform_grid(10.0, 50);
  for (double lambda : {0.25, 1.0, 4.0}) {
    s.j_profile = DrivingProfile::proportional(lambda);
    double worst = 0.0;
    for (const auto& b : mode_blocks(s)) {
      const auto numeric = propagate_numeric(s, b, grid, 1e-10);
      for (const auto& n : numeric) {
        worst = std::max(worst, (n.U - propagate_exact(s, b, n.t).U).cwiseAbs().maxCoeff());
      }
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("propagators are unitary") {
  const ChainSpec s = driven(0.5);
  const auto grid = uniform_grid(10.0, 21);
  for (const auto& b : mode_blocks(s))
    for (const auto& u : propagate_numeric(s, b, grid, 1e-9)) CHECK(unitarity_defect(u.U) < 1e-9);
}

TEST_CASE("evolve_state conjugates and keeps the trace") {
  ChainSpec s = driven(0.5);
  s.kT = 0.4;
  const ModeBlock b = mode_block(s, 1);
  const ModeState rho0 = thermal_state(s, b);
  const auto U = propagate_numeric(s, b, uniform_grid(2.0, 3), 1e-10);
  const ModeState rho = evolve_state(rho0, U.back());
  CHECK(rho.t == 2.0);
  CHECK(rho.trace == doctest::Approx(rho0.trace).epsilon(1e-12));
  CHECK((rho.rho - U.back().U * rho0.rho * U.back().U.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(evolve_state(rho0, propagate_numeric(s, mode_block(s, 2), uniform_grid(1, 2), 1e-9)[1]),
                  PreconditionError);
}

TEST_CASE("preconditions") {
  const ChainSpec s = driven(1.0);
  const ModeBlock b = mode_block(s, 1);
  const std::vector<double> late{1.0, 2.0};
  const std::vector<double> unsorted{0.0, 2.0, 1.0};
  CHECK_THROWS_AS(propagate_numeric(s, b, late, 1e-9), PreconditionError);
  CHECK_THROWS_AS(propagate_numeric(s, b, unsorted, 1e-9), PreconditionError);
  CHECK_THROWS_AS(propagate_exact(s, b, 1.0), PreconditionError);
  CHECK_THROWS_AS(propagate_numeric(s, b, uniform_grid(1.0, 2), 0.0), PreconditionError);
}
