#include <doctest.h>

#include <cmath>

#include "spin_chain.hpp"
#include "xychain/error.hpp"
#include "xychain/evolve.hpp"
#include "xychain/kernels.hpp"
#include "xychain/observables.hpp"

using namespace xychain;
using cd = std::complex<double>;

namespace {

std::vector<ModeExpectations> ground_modes(const ChainSpec& s) {
  std::vector<ModeExpectations> out;
  for (const auto& b : mode_blocks(s)) out.push_back(mode_expectations(thermal_state(s, b)));
  return out;
}

ChainSpec even_sector(int N, double gamma, double J, double h) {
  ChainSpec s;
  s.N = N;
  s.gamma = gamma;
  s.grid = MomentumGrid::antiperiodic;
  s.j_profile = DrivingProfile::constant(J);
  s.h_profile = DrivingProfile::constant(h);
  return s;
}

}  // namespace

TEST_CASE("fully polarized chain") {
  ChainSpec s = even_sector(8, 1.0, 0.0, 1.0);
  s.j_profile = DrivingProfile::constant(0.0);
  const auto modes = ground_modes(s);
  CHECK(magnetization(modes, 8) == doctest::Approx(0.5));
  const auto cs = contraction_set(modes, 8, s.grid);
  CHECK(cs.q(0) == cd(1.0));
  CHECK(cs.g(0) == cd(-1.0));
  const Correlators c = correlators(cs, 1);
  CHECK(c.Sz == doctest::Approx(0.25));
  CHECK(std::abs(c.Sx) < 1e-14);
}

TEST_CASE("ground-state correlators match the spin chain") {
  for (int N : {4, 6, 8}) {
    for (double gamma : {0.0, 0.4, 1.0}) {
      const double J = 0.6, h = 1.0;
      const ChainSpec s = even_sector(N, gamma, J, h);
      const auto H = spin_chain::hamiltonian(N, gamma, J, h);
      const auto psi = spin_chain::even_ground_state(H, N);
      const auto modes = ground_modes(s);
      const auto cs = contraction_set(modes, N, s.grid);
      CHECK(magnetization(modes, N) ==
            doctest::Approx(0.5 * spin_chain::expect(psi, spin_chain::site(N, 0, 'z'))).epsilon(1e-10));
      for (int r = 1; r <= N / 2; ++r) {
        const Correlators c = correlators(cs, r);
        CHECK(std::abs(c.Sx - spin_chain::corr(psi, N, r, 'x')) < 1e-10);
        CHECK(std::abs(c.Sy - spin_chain::corr(psi, N, r, 'y')) < 1e-10);
        CHECK(std::abs(c.Sz - spin_chain::corr(psi, N, r, 'z')) < 1e-10);
        CHECK_FALSE(c.flagged);
      }
    }
  }
}

TEST_CASE("driven correlators match the spin chain") {
  const int N = 6;
  ChainSpec s = even_sector(N, 0.7, 0.5, 1.0);
  s.j_profile = DrivingProfile::exponential(0.5, 2.0, 1.0);
  const double t_end = 2.0;

  // Spin chain: RK4 with a fixed small step.
  spin_chain::Vec psi = spin_chain::even_ground_state(spin_chain::hamiltonian(N, 0.7, 0.5, 1.0), N);
  const int steps = 4000;
  const double dt = t_end / steps;
  // H(t) = J(t) H_bond + H_field
  const spin_chain::Mat field = spin_chain::hamiltonian(N, 0.7, 0.0, 1.0);
  const spin_chain::Mat bond = spin_chain::hamiltonian(N, 0.7, 1.0, 0.0);
  auto rhs = [&](double t, const spin_chain::Vec& v) -> spin_chain::Vec {
    return cd(0, -1) * ((s.coupling(t) * bond + field) * v);
  };
  for (int k = 0; k < steps; ++k) {
    const double t = k * dt;
    const auto k1 = rhs(t, psi);
    const auto k2 = rhs(t + dt / 2, psi + dt / 2 * k1);
    const auto k3 = rhs(t + dt / 2, psi + dt / 2 * k2);
    const auto k4 = rhs(t + dt, psi + dt * k3);
    psi += dt / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  const std::vector<double> grid{0.0, t_end};
  const ModeTable table = evolve_modes_serial(s, grid, {Solver::numeric, 1e-11});
  const auto cs = contraction_set(table.at(1), N, s.grid);
  CHECK(std::abs(magnetization(table.at(1), N) - 0.5 * spin_chain::expect(psi, spin_chain::site(N, 0, 'z'))) < 1e-8);
  for (int r = 1; r <= N / 2; ++r) {
    const Correlators c = correlators(cs, r);
    CHECK(std::abs(c.Sx - spin_chain::corr(psi, N, r, 'x')) < 1e-8);
    CHECK(std::abs(c.Sy - spin_chain::corr(psi, N, r, 'y')) < 1e-8);
    CHECK(std::abs(c.Sz - spin_chain::corr(psi, N, r, 'z')) < 1e-8);
    // The cross term the X-state leaves out.
    const double sxy = 0.25 *
                       (spin_chain::expect(psi, spin_chain::site(N, 0, 'x') * spin_chain::site(N, r, 'y')) +
                        spin_chain::expect(psi, spin_chain::site(N, 0, 'y') * spin_chain::site(N, r, 'x')));
    CHECK(std::abs(c.Sxy - sxy) < 1e-8);
  }
}

TEST_CASE("string expectations reduce to two-point functions") {
  ChainSpec s = even_sector(8, 0.5, 0.8, 1.0);
  s.kT = 0.5;
  s.grid = MomentumGrid::periodic;
  const auto cs = contraction_set(ground_modes(s), 8, s.grid);
  const StringOperator ops[] = {{true, 0}, {false, 3}};
  CHECK(std::abs(string_expectation(cs, ops).value - cs.f(3)) < 1e-14);
  // Wick: <B0 A1 B2 A3> = f01 f23 - g02 q13 + f03 p12.
  const StringOperator four[] = {{true, 0}, {false, 1}, {true, 2}, {false, 3}};
  const cd wick = cs.f(1) * cs.f(1) - cs.g(2) * cs.q(2) + cs.f(3) * cs.p(1);
  CHECK(std::abs(string_expectation(cs, four).value - wick) < 1e-13);
}

TEST_CASE("truncated tables agree with the full table") {
  ChainSpec s = even_sector(12, 0.9, 1.3, 0.7);
  s.grid = MomentumGrid::periodic;
  s.kT = 0.2;
  const auto modes = ground_modes(s);
  const auto full = contraction_set(modes, 12, s.grid);
  const auto cut = contraction_set(modes, 12, s.grid, 3);
  for (int r = 0; r <= 3; ++r) {
    CHECK(std::abs(full.f(r) - cut.f(r)) < 1e-15);
    CHECK(std::abs(full.q(r) - cut.q(r)) < 1e-15);
  }
  CHECK(correlators(cut, 3).Sx == doctest::Approx(correlators(full, 3).Sx));
  CHECK_THROWS_AS(cut.f(7), PreconditionError);
}

TEST_CASE("antiperiodic contractions wrap with a sign") {
  ChainSpec s = even_sector(8, 0.5, 0.8, 1.0);
  const auto cs = contraction_set(ground_modes(s), 8, s.grid);
  CHECK(cs.wrap_sign == -1);
  CHECK(std::abs(cs.f(-3) + cs.f(5)) < 1e-15);
}

TEST_CASE("preconditions") {
  ChainSpec s = even_sector(8, 0.5, 0.8, 1.0);
  auto modes = ground_modes(s);
  CHECK_THROWS_AS(magnetization(std::span(modes).first(3), 8), PreconditionError);
  const auto cs = contraction_set(modes, 8, s.grid);
  CHECK_THROWS_AS(correlators(cs, 0), PreconditionError);
  CHECK_THROWS_AS(correlators(cs, 5), PreconditionError);
}

TEST_CASE("flipped pairing sign changes the correlators") {
  ChainSpec s = even_sector(8, 1.0, 0.8, 1.0);
  std::vector<ModeExpectations> a, b;
  for (const auto& m : mode_blocks(s)) {
    a.push_back(mode_expectations(thermal_state(s, m)));
    b.push_back(mode_expectations(thermal_state(s, m), KappaConvention::flipped));
  }
  const double sx_a = correlators(contraction_set(a, 8, s.grid), 1).Sx;
  const double sx_b = correlators(contraction_set(b, 8, s.grid), 1).Sx;
  CHECK(std::abs(sx_a - sx_b) > 1e-3);
}
