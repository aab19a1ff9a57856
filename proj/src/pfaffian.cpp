#include "xychain/pfaffian.hpp"

#include <cmath>

#include "xychain/error.hpp"

namespace xychain {

namespace {

constexpr double kSkewTolerance = 1e-10;

template <class Matrix>
void require_skew(const Matrix& A) {
  if (A.rows() != A.cols()) throw PreconditionError("pfaffian needs a square matrix");
  if (A.rows() % 2 != 0) throw PreconditionError("pfaffian of an odd-dimensional matrix");
  if (A.size() > 0 && (A + A.transpose()).cwiseAbs().maxCoeff() >= kSkewTolerance) {
    throw PreconditionError("pfaffian input is not skew-symmetric");
  }
}

template <class Matrix>
typename Matrix::Scalar parlett_reid(Matrix A) {
  using Scalar = typename Matrix::Scalar;
  const Eigen::Index n = A.rows();
  Scalar pf{1.0};
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = 0;
    A.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      A.row(k + 1).swap(A.row(kp));
      A.col(k + 1).swap(A.col(kp));
      pf = -pf;
    }
    if (A(k + 1, k) == Scalar{0.0}) return Scalar{0.0};
    pf *= A(k, k + 1);
    const Eigen::Index m = n - k - 2;
    if (m > 0) {
      const auto tau = (A.row(k).tail(m) / A(k, k + 1)).transpose().eval();
      const auto col = A.col(k + 1).tail(m).eval();
      A.bottomRightCorner(m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

}  // namespace

std::complex<double> pfaffian(const Eigen::MatrixXcd& A) {
  require_skew(A);
  return parlett_reid(A);
}

double pfaffian(const Eigen::MatrixXd& A) {
  require_skew(A);
  return parlett_reid(A);
}

CheckedPfaffian pfaffian_checked(const Eigen::MatrixXcd& A) {
  CheckedPfaffian out;
  out.value = pfaffian(A);
  if (A.rows() == 0) return out;
  const double det = std::abs(A.partialPivLu().determinant());
  const double pf2 = std::norm(out.value);
  if (det == 0.0) {
    out.det_mismatch = pf2 == 0.0 ? 0.0 : 1.0;
  } else {
    out.det_mismatch = std::abs(pf2 / det - 1.0);
  }
  out.flagged = out.det_mismatch > kPfaffianFlagThreshold;
  return out;
}

}  // namespace xychain
