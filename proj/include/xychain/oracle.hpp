#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "xychain/observables.hpp"

namespace xychain {

// ---------------------------------------------------------------------------
// Shared engine

/// Sparse operator on a 2^n basis: for each column, the nonzero rows.
struct SparseOperator {
  struct Entry {
    std::uint32_t row;
    std::complex<double> value;
  };
  std::uint32_t dim = 0;
  std::vector<std::uint32_t> offsets;  // size dim + 1
  std::vector<Entry> entries;

  void apply(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
};

/// Number of substeps per interval: ceil(span / dt) times 2^level.
long midpoint_substeps(double span, double dt, int level);

struct RombergResult {
  std::vector<std::vector<double>> values;  // [grid index][observable]
  int levels = 0;
  double last_change = 0.0;
};

/// Richardson extrapolation in even powers of the step. `run(level)` must
/// return the observables on the time grid computed with the base step
/// halved `level` times. Stops once two successive diagonal entries of the
/// tableau differ by less than `tol` everywhere. Throws NumericalError when
/// `max_levels` is exhausted.
RombergResult romberg_extrapolate(const std::function<std::vector<std::vector<double>>(int)>& run,
                                  double tol, int max_levels = 9);

// ---------------------------------------------------------------------------
// Fock-space oracle of the mode Hamiltonian

/// Fermion Fock space of N momentum modes (ordering: phi modes of blocks
/// p = 1..N/2, then their partners), with the mode Hamiltonian
/// sum_p H_p(t) = J(t) X + h(t) Y split into invariant sectors.
class FockOracle {
 public:
  explicit FockOracle(const ChainSpec& spec);  // ConfigError unless N <= 12

  const ChainSpec& spec() const { return spec_; }
  int modes() const { return spec_.N; }
  std::uint32_t dim() const { return 1u << spec_.N; }

  // c_k, c_k^dag as sparse operators.
  const SparseOperator& annihilator(int k) const { return c_[k]; }
  const SparseOperator& creator(int k) const { return cdag_[k]; }

  // Real-space A_l, B_l.
  const SparseOperator& site_a(int l) const { return a_[l]; }
  const SparseOperator& site_b(int l) const { return b_[l]; }

  // max |{c_p, c_q^dag} - delta_pq|, |{c_p, c_q}| over the basis.
  double anticommutation_defect() const { return anticommutation_defect_; }

  struct Sector {
    std::vector<std::uint32_t> states;
    Eigen::MatrixXcd X;  // coupling part
    Eigen::MatrixXcd Y;  // field part
  };
  const std::vector<Sector>& sectors() const { return sectors_; }

  Eigen::MatrixXcd sector_hamiltonian(std::size_t s, double t) const;

 private:
  ChainSpec spec_;
  std::vector<SparseOperator> c_, cdag_, a_, b_;
  std::vector<Sector> sectors_;
  double anticommutation_defect_ = 0.0;
};

/// Density matrix restricted to the sectors, normalized to unit trace.
struct FockState {
  double t = 0.0;
  std::vector<Eigen::MatrixXcd> blocks;
};

FockState fock_thermal_state(const FockOracle& oracle);

/// Piecewise-constant propagation with the Hamiltonian frozen at each
/// substep midpoint; every grid interval is split into equal substeps no
/// longer than dt_sub. One state per grid time.
std::vector<FockState> fock_evolve(const FockOracle& oracle, std::span<const double> t_grid,
                                   double dt_sub);

/// Everything the pipeline produces, computed by direct operator algebra.
struct FockObservables {
  double t = 0.0;
  std::vector<ModeExpectations> modes;
  ContractionSet contractions;  // r = 0..N-1
  double M = 0.0;               // (1/2) <sz_0>
  std::vector<Correlators> corr;  // index r - 1, r = 1..N/2
  std::vector<double> C;          // X-state concurrence from M and corr
  std::vector<Eigen::Matrix4cd> two_site;  // full spin reduced state of sites (0, r)
  double translation_defect = 0.0;  // anchor 0 vs anchor 1 for sx sx, sy sy, sz sz
};

/// Precomputed operator entries on the sector pattern.
class FockObservableSet {
 public:
  explicit FockObservableSet(const FockOracle& oracle);
  FockObservables evaluate(const FockState& state) const;
  std::vector<double> pack(const FockState& state) const;
  FockObservables unpack(double t, std::span<const double> packed) const;

 private:
  struct Entry {
    std::vector<Eigen::MatrixXcd> blocks;  // <i|G|j> per sector
  };
  std::complex<double> expect(const Entry& e, const FockState& state) const;

  const FockOracle* oracle_;
  std::vector<Entry> ops_;
};

FockObservables fock_expectations(const FockOracle& oracle, const FockState& state);

/// fock_evolve with Richardson extrapolation over halvings of dt_sub until
/// every observable moves by less than `tol`.
std::vector<FockObservables> fock_observe(const FockOracle& oracle, std::span<const double> t_grid,
                                          double tol = 1e-9, RombergResult* report = nullptr);

// ---------------------------------------------------------------------------
// Spin-chain oracle of the original Hamiltonian (periodic ring)

class SpinOracle {
 public:
  // ConfigError unless N <= 10. With `even_parity_only` the initial state is
  // restricted to the prod(sz) = +1 sector.
  explicit SpinOracle(const ChainSpec& spec, bool even_parity_only = false);

  const ChainSpec& spec() const { return spec_; }
  std::uint32_t dim() const { return 1u << spec_.N; }

  // H(t) applied to a vector.
  void apply_hamiltonian(double t, std::span<const std::complex<double>> in,
                         std::span<std::complex<double>> out) const;
  Eigen::MatrixXcd dense_hamiltonian(double t) const;

  // Thermal ensemble: weights (summing to 1) and eigenvectors of H(0).
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<Eigen::VectorXcd>& vectors() const { return vectors_; }

  struct Snapshot {
    double t = 0.0;
    double M = 0.0;
    std::vector<Correlators> corr;          // r = 1..N/2
    std::vector<Eigen::Matrix4cd> two_site;  // sites (0, r)
    std::vector<double> C;                   // general Wootters on two_site
  };

  std::vector<Snapshot> evolve(std::span<const double> t_grid, double tol = 1e-9) const;

 private:
  ChainSpec spec_;
  std::vector<double> weights_;
  std::vector<Eigen::VectorXcd> vectors_;
};

struct SpinDiscrepancy {
  double M = 0.0;
  double Sx = 0.0;
  double Sy = 0.0;
  double Sz = 0.0;
  double C = 0.0;
};

/// max over the grid (and r = 1) of |pipeline - spin oracle|.
SpinDiscrepancy spin_evolve_compare(const SpinOracle& oracle, std::span<const double> t_grid,
                                    double tol = 1e-9);

}  // namespace xychain
