#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>
#include <utility>

namespace xychain {

/// Two-qubit reduced density matrix in the product basis
/// {|up up>, |up down>, |down up>, |down down>}.
struct TwoSiteState {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
};

struct ConcurrenceValue {
  double C = 0.0;
  std::array<double, 4> roots{};  // descending
};

/// X-state from translation-invariant M and the correlators at one
/// separation. Throws NumericalError if the result is not PSD within 1e-7.
TwoSiteState two_site_state(double M, double Sx, double Sy, double Sz);

/// Closed-form roots for an X-state:
///   sqrt(r11 r44) +- |r14|,  sqrt(r22 r33) +- |r23|.
ConcurrenceValue concurrence_x(const TwoSiteState& state);

/// Full Wootters construction for any two-qubit density matrix. Throws
/// DomainError for non-PSD input or trace away from 1 by more than 1e-8.
ConcurrenceValue concurrence_general(const Eigen::Matrix4cd& rho);

/// Mean of C over the last `window_fraction` of the series. Throws
/// PreconditionError when fewer than 10 samples fall in the window.
double asymptotic_value(std::span<const std::pair<double, double>> series,
                        double window_fraction = 0.3);

}  // namespace xychain
