#pragma once

#include <span>
#include <vector>

#include "xychain/model.hpp"

namespace xychain {

/// Evolution matrix U_p(t) of one block, rho(t) = U rho(0) U^dag.
struct Propagator {
  ModeBlock mode;
  double t = 0.0;
  Mat4 U = Mat4::Identity();
};

/// Rotation that diagonalizes the 2x2 sector when J(t) = lambda h(t).
struct ExactAngles {
  double lambda = 0.0;
  double theta = 0.0;
  double sin_theta = 0.0;
  double cos_theta = 1.0;
  double lambda1 = 0.0;  // larger eigenvalue of the sector in units of J
  double lambda2 = 0.0;
};

/// max_ij |(U^dag U - I)_ij|
double unitarity_defect(const Mat4& U);

/// Fixed-step RK4 on the coupled 2x2 sector of i dU/dt = H(t) U; the two
/// single-occupation phases use the closed-form coupling integral.
///
/// The step starts at min(0.01, 0.1/|H|), further limited to 0.1/K on grid
/// intervals where a profile has not yet settled, and is halved until the
/// unitarity defect and the step-doubling error estimate both stay below
/// `tol` at every grid time. Steps are adjusted to land exactly on the grid.
/// Throws IntegrationError (carrying the first failing grid time) when the
/// step underflows.
std::vector<Propagator> propagate_numeric(const ChainSpec& spec, const ModeBlock& mode,
                                          std::span<const double> t_grid, double tol);

ExactAngles exact_angles(const ModeBlock& mode, double lambda);

/// Closed-form U_p(t) for J(t) = lambda h(t). Throws PreconditionError when
/// the spec does not declare proportional driving.
Propagator propagate_exact(const ChainSpec& spec, const ModeBlock& mode, double t);

ModeState evolve_state(const ModeState& init, const Propagator& U);

}  // namespace xychain
