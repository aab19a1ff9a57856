#pragma once

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "xychain/profile.hpp"

namespace xychain {

using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

/// Momentum quantization of the Jordan-Wigner fermions on the ring.
///
/// periodic:     phi_p = 2 pi p / N, p = 1..N/2. The pair (p, -p) is used for
///               p < N/2; the last block pairs the two self-conjugate momenta
///               pi and 0, which keeps the real-space transform unitary.
/// antiperiodic: phi_p = (2p - 1) pi / N, p = 1..N/2, every block a true
///               (phi, -phi) pair. This is the even-parity sector of the
///               periodic spin ring.
enum class MomentumGrid { periodic, antiperiodic };

std::string_view to_string(MomentumGrid grid);
MomentumGrid momentum_grid_from_string(std::string_view name);

/// The experiment: ring size, anisotropy, driving and temperature.
struct ChainSpec {
  int N = 8;
  double gamma = 1.0;
  DrivingProfile j_profile = DrivingProfile::constant(1.0);
  DrivingProfile h_profile = DrivingProfile::constant(1.0);
  double kT = 0.0;  // +infinity is accepted and means beta = 0
  MomentumGrid grid = MomentumGrid::periodic;

  // Throws ConfigError unless N is even and >= 4, 0 <= gamma <= 1, kT >= 0,
  // both profiles are valid and h is not itself proportional.
  void validate() const;

  double field(double t) const;
  double coupling(double t) const;
  double field_integral(double t) const;
  double coupling_integral(double t) const;

  bool proportional() const { return j_profile.kind == ProfileKind::proportional; }
  double max_abs_field() const;
  double max_abs_coupling() const;

  // Largest K among the time-dependent profiles, 0 when both are constant.
  double max_rate() const;
  // Largest K among profiles still changing after time t.
  double rate_after(double t) const;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// One 4-dimensional invariant subspace spanned by the momenta
/// (phi, partner_phi). For every block except the self-conjugate one,
/// partner_phi == -phi.
struct ModeBlock {
  int p = 1;
  double phi = 0.0;
  double partner_phi = 0.0;
  double delta = 0.0;

  // (cos(phi) + cos(partner_phi)) / 2; equals cos(phi) for a (phi, -phi) pair.
  double mean_cos() const;
  bool self_conjugate() const { return partner_phi != -phi; }

  friend bool operator==(const ModeBlock&, const ModeBlock&) = default;
};

ModeBlock mode_block(const ChainSpec& spec, int p);
std::vector<ModeBlock> mode_blocks(const ChainSpec& spec);

/// Unnormalized density matrix of one block in the basis
/// {|0>, c_p^dag c_-p^dag |0>, c_p^dag |0>, c_-p^dag |0>}.
struct ModeState {
  ModeBlock mode;
  double t = 0.0;
  Mat4 rho = Mat4::Zero();
  double trace = 0.0;
};

/// Block Hamiltonian at time t:
///   [[2h, -iJ delta], [iJ delta, -4J cos - 2h]] (+) diag(-2J cos phi, -2J cos partner).
Mat4 hamiltonian_block(const ChainSpec& spec, const ModeBlock& mode, double t);

/// exp(-H(0)/kT), or the equal-weight projector on the ground space of H(0)
/// when kT == 0. For very low temperatures the exponential is rescaled by a
/// positive constant so it stays representable; downstream expectations
/// always divide by the trace.
ModeState thermal_state(const ChainSpec& spec, const ModeBlock& mode);

// Relative tolerance on eigenvalue gaps for ground-space degeneracy at kT = 0.
inline constexpr double kDegeneracyTolerance = 1e-9;

}  // namespace xychain
