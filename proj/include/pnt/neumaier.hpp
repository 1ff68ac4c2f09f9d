#pragma once

#include <cmath>

namespace pnt {

/// Neumaier's variant of Kahan summation. The running compensation is kept
/// separate; value() folds it in.
class NeumaierSum {
 public:
  constexpr NeumaierSum() = default;
  constexpr explicit NeumaierSum(double initial) : sum_(initial) {}

  NeumaierSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pnt
