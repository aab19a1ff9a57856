#include "xychain/observables.hpp"

#include <cmath>

#include "xychain/error.hpp"
#include "xychain/pfaffian.hpp"

namespace xychain {

using cd = std::complex<double>;

namespace {

void require_complete(std::span<const ModeExpectations> modes, int N) {
  if (N < 2 || static_cast<int>(modes.size()) != N / 2) {
    throw PreconditionError("expected " + std::to_string(N / 2) + " mode blocks, got " +
                            std::to_string(modes.size()));
  }
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (modes[i].p != static_cast<int>(i) + 1) {
      throw PreconditionError("mode blocks must be ordered p = 1..N/2");
    }
  }
}

}  // namespace

ModeExpectations mode_expectations(const ModeState& state, KappaConvention convention) {
  ModeExpectations e;
  e.p = state.mode.p;
  e.phi = state.mode.phi;
  e.partner_phi = state.mode.partner_phi;
  const double tr = state.trace;
  e.n_p = (state.rho(1, 1).real() + state.rho(2, 2).real()) / tr;
  e.n_mp = (state.rho(1, 1).real() + state.rho(3, 3).real()) / tr;
  // c_p c_-p = -|0><pair|
  e.kappa = -state.rho(1, 0) / tr;
  if (convention == KappaConvention::flipped) e.kappa = -e.kappa;
  return e;
}

double magnetization(std::span<const ModeExpectations> modes, int N) {
  require_complete(modes, N);
  double sum = 0.0;
  for (const auto& m : modes) sum += m.n_p + m.n_mp - 1.0;
  return sum / N;
}

cd ContractionSet::at(const std::vector<cd>& table, int r) const {
  int q = r;
  int sign = 1;
  if (q < 0) {
    q += N;
    sign = wrap_sign;
  }
  if (q < 0 || q >= static_cast<int>(table.size())) {
    throw PreconditionError("separation " + std::to_string(r) + " not tabulated");
  }
  return static_cast<double>(sign) * table[q];
}

ContractionSet contraction_set(std::span<const ModeExpectations> modes, int N, MomentumGrid grid,
                               int max_r) {
  require_complete(modes, N);
  const int count = (max_r < 0 || max_r >= N) ? N : max_r + 1;
  ContractionSet cs;
  cs.N = N;
  cs.wrap_sign = grid == MomentumGrid::antiperiodic ? -1 : 1;
  cs.F.resize(count);
  cs.P.resize(count);
  cs.Q.resize(count);
  cs.G.resize(count);

  const cd i(0.0, 1.0);
  for (int r = 0; r < count; ++r) {
    cd T{}, U{}, S{};
    for (const auto& m : modes) {
      // <b_l^dag b_m>, <b_l b_m^dag> and <b_l b_m>, summed over both momenta.
      T += std::exp(-i * (r * m.phi)) * m.n_p + std::exp(-i * (r * m.partner_phi)) * m.n_mp;
      U += std::exp(i * (r * m.phi)) * (1.0 - m.n_p) +
           std::exp(i * (r * m.partner_phi)) * (1.0 - m.n_mp);
      S += 2.0 * i * m.kappa * std::sin(r * m.phi);
    }
    T /= N;
    U /= N;
    S /= N;
    const cd W = -std::conj(S);
    cs.F[r] = W + T - U - S;
    cs.P[r] = W - T + U - S;
    cs.Q[r] = W + T + U + S;
    cs.G[r] = W - T - U + S;
  }
  cs.Q[0] = 1.0;
  cs.G[0] = -1.0;
  return cs;
}

StringValue string_expectation(const ContractionSet& cs, std::span<const StringOperator> ops) {
  const auto n = static_cast<Eigen::Index>(ops.size());
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const int r = ops[b].site - ops[a].site;
      cd v;
      if (ops[a].is_b) {
        v = ops[b].is_b ? cs.g(r) : cs.f(r);
      } else {
        v = ops[b].is_b ? cs.p(r) : cs.q(r);
      }
      M(a, b) = v;
      M(b, a) = -v;
    }
  }
  const CheckedPfaffian pf = pfaffian_checked(M);
  return {pf.value, pf.flagged};
}

Correlators correlators(const ContractionSet& cs, int r) {
  if (r < 1 || r > cs.N / 2) {
    throw PreconditionError("separation " + std::to_string(r) + " outside 1.." +
                            std::to_string(cs.N / 2));
  }
  std::vector<StringOperator> x, y, xy, yx;
  // sx_0 sx_r = B_0 A_1 B_1 ... A_{r-1} B_{r-1} A_r
  // sy_0 sy_r = (-1)^r A_0 B_1 A_1 ... B_{r-1} A_{r-1} B_r
  x.push_back({true, 0});
  y.push_back({false, 0});
  xy.push_back({true, 0});
  yx.push_back({false, 0});
  for (int j = 1; j < r; ++j) {
    x.push_back({false, j});
    x.push_back({true, j});
    y.push_back({true, j});
    y.push_back({false, j});
    xy.push_back({false, j});
    xy.push_back({true, j});
    yx.push_back({false, j});
    yx.push_back({true, j});
  }
  x.push_back({false, r});
  y.push_back({true, r});
  xy.push_back({true, r});
  yx.push_back({false, r});
  const StringOperator z[] = {{false, 0}, {true, 0}, {false, r}, {true, r}};

  const StringValue sx = string_expectation(cs, x);
  const StringValue sy = string_expectation(cs, y);
  const StringValue sz = string_expectation(cs, z);
  const StringValue sxy = string_expectation(cs, xy);
  const StringValue syx = string_expectation(cs, yx);

  const cd ysign = (r % 2 == 0) ? 1.0 : -1.0;
  const cd vx = 0.25 * sx.value;
  const cd vy = 0.25 * ysign * sy.value;
  const cd vz = 0.25 * sz.value;
  // sx_0 sy_r = -i B_0 (A B)_1..(A B)_{r-1} B_r,  sy_0 sx_r = -i A_0 (A B)_1.. A_r
  const cd vxy = 0.25 * cd(0.0, -1.0) * (sxy.value + syx.value);

  Correlators c;
  c.Sx = vx.real();
  c.Sy = vy.real();
  c.Sz = vz.real();
  c.Sxy = vxy.real();
  c.imag_residual = std::max({std::abs(vx.imag()), std::abs(vy.imag()), std::abs(vz.imag())});
  c.flagged = sx.flagged || sy.flagged || sz.flagged || sxy.flagged || syx.flagged;
  return c;
}

}  // namespace xychain
