#include <algorithm>
#include <cmath>

#include "xychain/error.hpp"
#include "xychain/oracle.hpp"

namespace xychain {

void SparseOperator::apply(std::span<const std::complex<double>> in,
                           std::span<std::complex<double>> out) const {
  std::fill(out.begin(), out.end(), std::complex<double>{});
  for (std::uint32_t col = 0; col < dim; ++col) {
    const std::complex<double> x = in[col];
    if (x == std::complex<double>{}) continue;
    for (std::uint32_t e = offsets[col]; e < offsets[col + 1]; ++e) {
      out[entries[e].row] += entries[e].value * x;
    }
  }
}

long midpoint_substeps(double span, double dt, int level) {
  if (!(dt > 0.0)) throw PreconditionError("substep must be positive");
  const long base = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9)));
  return base << level;
}

RombergResult romberg_extrapolate(const std::function<std::vector<std::vector<double>>(int)>& run,
                                  double tol, int max_levels) {
  using Table = std::vector<std::vector<double>>;
  std::vector<Table> previous;
  RombergResult result;
  for (int k = 0; k < max_levels; ++k) {
    std::vector<Table> row;
    row.push_back(run(k));
    for (int j = 1; j <= k; ++j) {
      const double factor = 1.0 / (std::pow(4.0, j) - 1.0);
      Table next = row[j - 1];
      for (std::size_t g = 0; g < next.size(); ++g) {
        for (std::size_t i = 0; i < next[g].size(); ++i) {
          next[g][i] += (row[j - 1][g][i] - previous[j - 1][g][i]) * factor;
        }
      }
      row.push_back(std::move(next));
    }
    if (k > 0) {
      double change = 0.0;
      for (std::size_t g = 0; g < row[k].size(); ++g) {
        for (std::size_t i = 0; i < row[k][g].size(); ++i) {
          change = std::max(change, std::abs(row[k][g][i] - previous[k - 1][g][i]));
        }
      }
      result.last_change = change;
      if (change < tol) {
        result.values = std::move(row[k]);
        result.levels = k + 1;
        return result;
      }
    }
    previous = std::move(row);
  }
  throw NumericalError("oracle extrapolation did not converge (last change " +
                       std::to_string(result.last_change) + ")");
}

}  // namespace xychain
