#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "xychain/observables.hpp"

namespace xychain {

struct VerifyOptions {
  int max_N = 8;            // oracle sizes 4, 6, ... up to max_N (<= 12)
  double limit = 1e-7;      // pipeline vs Fock oracle
  double tol = 1e-9;        // integrator and oracle extrapolation tolerance
  KappaConvention kappa = KappaConvention::standard;  // flipped: mutation check
  std::ostream* log = nullptr;  // one line per oracle case when set
};

struct StageResult {
  std::string name;
  double worst = 0.0;
  double limit = 0.0;
  std::string where;  // case that produced `worst`
  bool pass() const { return worst < limit; }
};

struct VerifyReport {
  std::vector<StageResult> stages;
  bool pass() const;
  void print(std::ostream& out) const;
};

/// Pipeline vs Fock oracle over N, gamma in {0, 0.5, 1}, kT in {0, 0.5, 1}
/// and the four driving profiles on t in [0, 10], plus the invariant suites.
VerifyReport verify(const VerifyOptions& options = {});

/// Only the invariant suites (pfaffian, concurrence, Werner state).
std::vector<StageResult> invariant_suites();

}  // namespace xychain
