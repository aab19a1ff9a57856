#pragma once

#include <Eigen/Dense>
#include <complex>

namespace xychain {

/// Pfaffian of a skew-symmetric matrix by Parlett-Reid elimination with
/// partial pivoting, O(n^3). Throws PreconditionError for odd or non-square
/// input and when |A + A^T|_max >= 1e-10.
std::complex<double> pfaffian(const Eigen::MatrixXcd& A);
double pfaffian(const Eigen::MatrixXd& A);

struct CheckedPfaffian {
  std::complex<double> value;
  double det_mismatch = 0.0;  // | |pf|^2 / |det| - 1 |
  bool flagged = false;       // det_mismatch > kPfaffianFlagThreshold
};

inline constexpr double kPfaffianFlagThreshold = 1e-6;

/// pfaffian() plus a consistency check against an LU determinant.
CheckedPfaffian pfaffian_checked(const Eigen::MatrixXcd& A);

}  // namespace xychain
