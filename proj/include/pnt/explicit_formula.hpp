#pragma once

#include <cstddef>
#include <string>

#include "pnt/averaging.hpp"
#include "pnt/zeros.hpp"

namespace pnt {

/// rbar(x) + zero_sum(x, T, 1): what is left of the average error once the
/// truncated zero sum is put back.
inline double explicit_formula_residual(const IteratedAverage& avg, const ZeroSet& zeros, std::size_t x, double T) {
  if (avg.order() != 1) throw invalid_argument("explicit_formula_residual: needs the order-1 average");
  if (x < 2 || x > avg.n_max()) {
    throw invalid_argument("explicit_formula_residual: x = " + std::to_string(x) + " outside [2, " +
                           std::to_string(avg.n_max()) + "]");
  }
  return avg[x] + zero_sum(zeros, static_cast<double>(x), T, 1).value;
}

}  // namespace pnt
