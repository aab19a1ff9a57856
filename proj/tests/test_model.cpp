#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "xychain/error.hpp"
#include "xychain/model.hpp"

using namespace xychain;
using cd = std::complex<double>;

namespace {

double simpson(const DrivingProfile& p, double t, int n = 4000) {
  const double h = t / n;
  double s = evaluate_profile(p, 0.0) + evaluate_profile(p, t);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * evaluate_profile(p, k * h);
  return s * h / 3.0;
}

ChainSpec spec_with(int N, double gamma, double kT) {
  ChainSpec s;
  s.N = N;
  s.gamma = gamma;
  s.kT = kT;
  s.j_profile = DrivingProfile::constant(0.7);
  s.h_profile = DrivingProfile::constant(1.0);
  return s;
}

}  // namespace

TEST_CASE("profile formulas") {
  const double t = 1.3;
  CHECK(evaluate_profile(DrivingProfile::constant(0.4), t) == doctest::Approx(0.4));
  CHECK(evaluate_profile(DrivingProfile::exponential(0.5, 2.0, 0.7), t) ==
        doctest::Approx(2.0 + (0.5 - 2.0) * std::exp(-0.7 * t)));
  CHECK(evaluate_profile(DrivingProfile::cosine(0.5, 0.7), t) ==
        doctest::Approx(0.5 - 0.5 * std::cos(0.7 * t)));
  CHECK(evaluate_profile(DrivingProfile::sine(0.5, 0.7), t) ==
        doctest::Approx(0.5 - 0.5 * std::sin(0.7 * t)));
  CHECK(evaluate_profile(DrivingProfile::hyperbolic(0.5, 2.0, 0.7), t) ==
        doctest::Approx(0.5 + 0.75 * (std::tanh(0.7 * (t - 2.5)) + 1.0)));
  CHECK(evaluate_profile(DrivingProfile::proportional(2.0), t, 0.3) == doctest::Approx(0.6));
}

TEST_CASE("antiderivatives match quadrature") {
  const DrivingProfile profiles[] = {
      DrivingProfile::constant(0.4),           DrivingProfile::exponential(0.5, 2.0, 0.7),
      DrivingProfile::cosine(0.5, 0.7),        DrivingProfile::sine(0.5, 0.7),
      DrivingProfile::hyperbolic(0.5, 2.0, 0.7), DrivingProfile::hyperbolic(0.5, 2.0, 400.0)};
  for (const auto& p : profiles) {
    for (double t : {0.0, 0.4, 2.5, 7.0}) {
      const double exact = profile_antiderivative(p, t);
      CHECK(std::abs(exact - (t > 0 ? simpson(p, t, 200000) : 0.0)) < 1e-9);
    }
  }
  CHECK(profile_antiderivative(DrivingProfile::proportional(3.0), 1.0, 0.5) == doctest::Approx(1.5));
}

TEST_CASE("profile validation and metadata") {
  CHECK_THROWS_AS(DrivingProfile::exponential(0.5, 2.0, 0.0).validate(), ConfigError);
  CHECK_THROWS_AS(DrivingProfile::proportional(0.0).validate(), ConfigError);
  CHECK_THROWS_AS(profile_kind_from_string("square"), ConfigError);
  CHECK_THROWS_AS(evaluate_profile(DrivingProfile::proportional(1.0), 0.5), ConfigError);
  CHECK_THROWS_AS(evaluate_profile(DrivingProfile::constant(1.0), -1.0), PreconditionError);
  CHECK(DrivingProfile::cosine(1.0, 0.5).period().value() == doctest::Approx(4.0 * std::numbers::pi));
  CHECK_FALSE(DrivingProfile::exponential(0.5, 2.0, 1.0).period().has_value());
  CHECK(std::isinf(DrivingProfile::sine(1.0, 1.0).settle_time()));
  const auto e = DrivingProfile::exponential(0.5, 2.0, 10.0);
  CHECK(std::abs(evaluate_profile(e, e.settle_time()) - 2.0) < 1e-15);
  const auto h = DrivingProfile::hyperbolic(0.5, 2.0, 10.0);
  CHECK(std::abs(evaluate_profile(h, h.settle_time()) - 2.0) < 1e-15);
}

TEST_CASE("spec validation") {
  ChainSpec s = spec_with(6, 0.5, 0.0);
  CHECK_NOTHROW(s.validate());
  s.N = 5;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = spec_with(2, 0.5, 0.0);
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = spec_with(6, 1.5, 0.0);
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = spec_with(6, 0.5, -1.0);
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = spec_with(6, 0.5, 0.0);
  s.h_profile = DrivingProfile::proportional(1.0);
  CHECK_THROWS_AS(s.validate(), ConfigError);
  CHECK_THROWS_AS(mode_block(spec_with(6, 1, 0), 4), PreconditionError);
}

TEST_CASE("momentum grids") {
  const ChainSpec s = spec_with(8, 0.6, 0.0);
  const auto blocks = mode_blocks(s);
  REQUIRE(blocks.size() == 4);
  for (int p = 1; p < 4; ++p) {
    CHECK(blocks[p - 1].phi == doctest::Approx(2 * std::numbers::pi * p / 8));
    CHECK(blocks[p - 1].partner_phi == -blocks[p - 1].phi);
    CHECK(blocks[p - 1].delta == doctest::Approx(1.2 * std::sin(blocks[p - 1].phi)));
  }
  CHECK(blocks[3].self_conjugate());
  CHECK(blocks[3].delta == 0.0);

  // Together with their partners the momenta cover the N roots of unity once.
  std::vector<double> all;
  for (const auto& b : blocks) {
    all.push_back(std::remainder(b.phi, 2 * std::numbers::pi));
    all.push_back(std::remainder(b.partner_phi, 2 * std::numbers::pi));
  }
  Eigen::MatrixXcd T(8, 8);
  for (int l = 0; l < 8; ++l)
    for (int k = 0; k < 8; ++k) T(l, k) = std::exp(cd(0, -l * all[k])) / std::sqrt(8.0);
  CHECK((T.adjoint() * T - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);

  ChainSpec a = s;
  a.grid = MomentumGrid::antiperiodic;
  for (const auto& b : mode_blocks(a)) {
    CHECK(b.phi == doctest::Approx((2 * b.p - 1) * std::numbers::pi / 8));
    CHECK_FALSE(b.self_conjugate());
  }
}

TEST_CASE("thermal state is the Gibbs state of the block") {
  for (double kT : {0.0, 0.3, 1.0}) {
    const ChainSpec s = spec_with(8, 0.8, kT);
    for (const auto& b : mode_blocks(s)) {
      // Block written out by hand.
      const double J = 0.7, h = 1.0;
      Eigen::Matrix4cd H = Eigen::Matrix4cd::Zero();
      H(0, 0) = 2 * h;
      H(0, 1) = cd(0, -J * b.delta);
      H(1, 0) = cd(0, J * b.delta);
      H(1, 1) = -2 * J * (std::cos(b.phi) + std::cos(b.partner_phi)) - 2 * h;
      H(2, 2) = -2 * J * std::cos(b.phi);
      H(3, 3) = -2 * J * std::cos(b.partner_phi);
      CHECK((hamiltonian_block(s, b, 0.0) - H).cwiseAbs().maxCoeff() < 1e-14);

      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(H);
      Eigen::Vector4d w;
      for (int k = 0; k < 4; ++k) {
        const double gap = es.eigenvalues()(k) - es.eigenvalues()(0);
        w(k) = kT == 0.0 ? (gap < 1e-9 ? 1.0 : 0.0) : std::exp(-gap / kT);
      }
      Eigen::Matrix4cd rho = es.eigenvectors() * w.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
      rho /= rho.trace();
      const ModeState st = thermal_state(s, b);
      CHECK((st.rho / st.trace - rho).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("infinite temperature and deep cold stay finite") {
  ChainSpec s = spec_with(6, 1.0, std::numeric_limits<double>::infinity());
  for (const auto& b : mode_blocks(s)) {
    const ModeState st = thermal_state(s, b);
    CHECK((st.rho / st.trace - 0.25 * Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }
  s.kT = 1e-4;
  for (const auto& b : mode_blocks(s)) {
    const ModeState st = thermal_state(s, b);
    CHECK(std::isfinite(st.trace));
    CHECK(st.trace > 0.0);
  }
}
