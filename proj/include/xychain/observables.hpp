#pragma once

#include <complex>
#include <span>
#include <vector>

#include "xychain/model.hpp"

namespace xychain {

/// Sign applied to the pairing amplitude read from a block. `flipped` exists
/// only so the verification suite can show that a wrong sign is caught.
enum class KappaConvention { standard, flipped };

struct ModeExpectations {
  int p = 1;
  double phi = 0.0;
  double partner_phi = 0.0;
  double n_p = 0.0;              // <c_p^dag c_p>
  double n_mp = 0.0;             // <c_-p^dag c_-p>
  std::complex<double> kappa{};  // <c_p c_-p>
};

ModeExpectations mode_expectations(const ModeState& state,
                                   KappaConvention convention = KappaConvention::standard);

/// (1/N) sum_p (n_p + n_-p - 1). Throws PreconditionError unless there is
/// exactly one entry per p = 1..N/2.
double magnetization(std::span<const ModeExpectations> modes, int N);

/// Two-point functions of A_l = b_l^dag + b_l and B_l = b_l^dag - b_l, stored
/// by separation r = m - l in 0..N-1:
///   F(r) = <B_l A_m>, P(r) = <A_l B_m>, Q(r) = <A_l A_m>, G(r) = <B_l B_m>.
struct ContractionSet {
  int N = 0;
  // -1 on the antiperiodic grid, where f(r + N) = -f(r).
  int wrap_sign = 1;
  std::vector<std::complex<double>> F, P, Q, G;

  // Separations in -N..N-1, folded into the stored range.
  std::complex<double> f(int r) const { return at(F, r); }
  std::complex<double> p(int r) const { return at(P, r); }
  std::complex<double> q(int r) const { return at(Q, r); }
  std::complex<double> g(int r) const { return at(G, r); }

 private:
  std::complex<double> at(const std::vector<std::complex<double>>& table, int r) const;
};

/// Tabulates r = 0..max_r only when max_r >= 0 (strings up to separation R
/// never need more); negative separations then need the full table.
ContractionSet contraction_set(std::span<const ModeExpectations> modes, int N, MomentumGrid grid,
                               int max_r = -1);

/// Expectation of a product of A/B operators, in order, evaluated as the
/// pfaffian of the pairwise contractions.
struct StringOperator {
  bool is_b = false;
  int site = 0;
};

struct StringValue {
  std::complex<double> value;
  bool flagged = false;  // pfaffian/determinant disagreement
};

StringValue string_expectation(const ContractionSet& cs, std::span<const StringOperator> ops);

struct Correlators {
  double Sx = 0.0;
  double Sy = 0.0;
  double Sz = 0.0;
  // 1/4 <sx_l sy_m + sy_l sx_m>; dropped from the X-state, reported only.
  double Sxy = 0.0;
  // Largest imaginary part discarded from Sx, Sy, Sz.
  double imag_residual = 0.0;
  bool flagged = false;
};

/// <S^a_l S^a_{l+r}> for a = x, y, z. Requires 1 <= r <= N/2.
Correlators correlators(const ContractionSet& cs, int r);

struct CorrelatorRecord {
  double t = 0.0;
  int r = 1;
  double M = 0.0;
  double Sx = 0.0;
  double Sy = 0.0;
  double Sz = 0.0;
};

}  // namespace xychain
