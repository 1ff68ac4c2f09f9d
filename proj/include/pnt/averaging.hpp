#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pnt/error.hpp"
#include "pnt/neumaier.hpp"
#include "pnt/sieve.hpp"
#include "pnt/weights.hpp"

namespace pnt {

inline constexpr int kMaxAverageOrder = 8;

/// k-fold iterated average of r:
///   rbar^(k)(n) = S_k(n) / C(n+k-1, k),   S_0 = r,  S_l(n) = sum_{m<=n} S_{l-1}(m).
/// All lower orders are retained; the differenced statistics need them.
class IteratedAverage {
 public:
  IteratedAverage(const ErrorSeries& series, int k, std::size_t n_max, bool keep_partial_sums = false)
      : order_(k) {
    if (k < 1 || k > kMaxAverageOrder) {
      throw invalid_argument("iterated_average: order " + std::to_string(k) + " outside [1, " +
                             std::to_string(kMaxAverageOrder) + "]");
    }
    if (n_max < 1 || n_max > series.n_max()) {
      throw invalid_argument("iterated_average: n_max " + std::to_string(n_max) + " outside [1, " +
                             std::to_string(series.n_max()) + "]");
    }
    const auto r = series.values();
    std::vector<double> level(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
    level[0] = 0.0;
    averages_.push_back(level);
    if (keep_partial_sums) partial_sums_.emplace_back();
    for (int l = 1; l <= k; ++l) {
      NeumaierSum acc;
      std::vector<double> next(n_max + 1, 0.0);
      for (std::size_t n = 1; n <= n_max; ++n) {
        acc += level[n];
        next[n] = acc.value();
      }
      level = std::move(next);
      std::vector<double> avg(n_max + 1, 0.0);
      for (std::size_t n = 1; n <= n_max; ++n) avg[n] = level[n] / binomial_average_denominator(n, l);
      averages_.push_back(std::move(avg));
      if (keep_partial_sums) partial_sums_.push_back(level);
    }
  }

  int order() const { return order_; }
  std::size_t n_max() const { return averages_.front().size() - 1; }

  /// rbar^(k)(n).
  double operator[](std::size_t n) const { return averages_[order_][n]; }
  double at(std::size_t n) const { return at_order(order_, n); }

  /// rbar^(j)(n) for any 0 <= j <= k; j = 0 is r itself.
  double at_order(int j, std::size_t n) const {
    if (j < 0 || j > order_) throw invalid_argument("IteratedAverage: order out of range");
    if (n < 1 || n > n_max()) {
      throw invalid_argument("IteratedAverage: index " + std::to_string(n) + " out of range");
    }
    return averages_[j][n];
  }

  std::span<const double> values() const { return averages_[order_]; }
  std::span<const double> values(int j) const { return averages_.at(static_cast<std::size_t>(j)); }

  bool has_partial_sums() const { return !partial_sums_.empty(); }
  /// S_l(0..n_max) for 1 <= l <= k; only when constructed with keep_partial_sums.
  std::span<const double> partial_sums(int l) const {
    if (!has_partial_sums() || l < 1 || l > order_) throw invalid_argument("IteratedAverage: no such partial sum");
    return partial_sums_[l];
  }

  /// rbar^(k)(n) - rbar^(k)(n-1) for n >= 2, through the recurrence
  ///   rbar^(k)(n) = ((n-1) rbar^(k)(n-1) + k rbar^(k-1)(n)) / (n+k-1),
  /// which avoids subtracting two nearly equal averages.
  double step(std::size_t n) const {
    if (n < 2 || n > n_max()) {
      throw invalid_argument("IteratedAverage::step: index " + std::to_string(n) + " outside [2, " +
                             std::to_string(n_max()) + "]");
    }
    const double k = order_;
    return k * (averages_[order_ - 1][n] - averages_[order_][n - 1]) / (static_cast<double>(n) + k - 1.0);
  }

 private:
  int order_;
  std::vector<std::vector<double>> averages_;
  std::vector<std::vector<double>> partial_sums_;
};

inline IteratedAverage iterated_average(const ErrorSeries& series, int k, std::size_t n_max) {
  return IteratedAverage(series, k, n_max);
}

inline IteratedAverage iterated_average(const ErrorSeries& series, int k) {
  return IteratedAverage(series, k, series.n_max());
}

/// rbar^(k)(n) from the single weighted sum
///   (1 / C(n+k-1, k)) sum_{m<=n} C(n+k-m-1, k-1) r(m).
inline double average_via_weights(const ErrorSeries& series, int k, std::size_t n) {
  if (k < 1 || k > kMaxAverageOrder) throw invalid_argument("average_via_weights: order out of range");
  if (n < 1 || n > series.n_max()) {
    throw invalid_argument("average_via_weights: index " + std::to_string(n) + " out of range");
  }
  const auto nn = static_cast<double>(n);
  double denom = 1.0;
  for (int t = 1; t <= k; ++t) denom *= nn - 1.0 + t;
  NeumaierSum acc;
  for (std::size_t m = 1; m <= n; ++m) {
    double w = k;
    for (int t = 1; t <= k - 1; ++t) w *= static_cast<double>(n - m) + t;
    acc += w / denom * series[m];
  }
  return acc.value();
}

namespace detail {

inline double weighted_lambda_sum(const LambdaTable& table, const WeightScheme& scheme, std::size_t x) {
  const auto lambda = table.lambda_values();
  NeumaierSum acc;
  for (std::size_t j = 2; j <= x; ++j) {
    if (lambda[j] == 0.0) continue;
    acc += weight_value(scheme, static_cast<std::int64_t>(x), static_cast<std::int64_t>(j)) * lambda[j];
  }
  return acc.value();
}

inline void check_x(const LambdaTable& table, std::size_t x, std::size_t lo, const char* what) {
  if (x < lo || x > table.n_max()) {
    throw invalid_argument(std::string(what) + ": argument " + std::to_string(x) + " outside [" +
                           std::to_string(lo) + ", " + std::to_string(table.n_max()) + "]");
  }
}

}  // namespace detail

/// psi_i(x) = sum_{j<=x} a(i; x, j) Lambda(j); psi_0 = psi.
inline double weighted_psi(const LambdaTable& table, int i, std::size_t x) {
  if (i < 0) throw invalid_argument("weighted_psi: order must be >= 0");
  detail::check_x(table, x, 1, "weighted_psi");
  if (i == 0) return table.psi(x);
  return detail::weighted_lambda_sum(table, {WeightFamily::A, i}, x);
}

/// psi-hat_i(n) = sum_{j<=n} b(i; n, j) Lambda(j).
inline double hat_psi(const LambdaTable& table, int i, std::size_t n) {
  detail::check_x(table, n, 2, "hat_psi");
  return detail::weighted_lambda_sum(table, {WeightFamily::B, i}, n);
}

/// psi-hat'_i(n) = sum_{j<=n} C(n+i-1-j, i-1) / C(n+i-1, i) (j-1) Lambda(j).
inline double hat_prime_psi(const LambdaTable& table, int i, std::size_t n) {
  if (i < 1) throw invalid_argument("hat_prime_psi: order must be >= 1");
  detail::check_x(table, n, 2, "hat_prime_psi");
  const auto lambda = table.lambda_values();
  const auto nn = static_cast<double>(n);
  double denom = 1.0;
  for (int t = 1; t <= i; ++t) denom *= nn - 1.0 + t;
  NeumaierSum acc;
  for (std::size_t j = 2; j <= n; ++j) {
    if (lambda[j] == 0.0) continue;
    double w = static_cast<double>(i) * static_cast<double>(j - 1);
    for (int t = 1; t <= i - 1; ++t) w *= static_cast<double>(n - j) + t;
    acc += w / denom * lambda[j];
  }
  return acc.value();
}

/// psi-tilde_i(n) = sum_{j<=n} h(i; n, j) Lambda(j), i >= 2.
inline double tilde_psi(const LambdaTable& table, int i, std::size_t n) {
  if (i < 2) throw invalid_argument("tilde_psi: order must be >= 2");
  detail::check_x(table, n, 1, "tilde_psi");
  return detail::weighted_lambda_sum(table, {WeightFamily::H, i}, n);
}

/// rhat^(i)(n) = (i+1) (rbar^(i)(n) - rbar^(i)(n-1)), n >= 2.
inline double hat_r(const IteratedAverage& avg, std::size_t n) {
  if (n < 2) throw invalid_argument("hat_r: undefined at n = 1");
  return (avg.order() + 1) * avg.step(n);
}

/// rhat'^(i)(n) = (n-1) (rbar^(i)(n) - rbar^(i)(n-1)), n >= 2.
inline double hat_prime_r(const IteratedAverage& avg, std::size_t n) {
  if (n < 2) throw invalid_argument("hat_prime_r: undefined at n = 1");
  return static_cast<double>(n - 1) * avg.step(n);
}

/// rtilde^(i)(n) = (R(n) - R(n-1)) / 2 with R(n) = n (n-1) (rbar^(i)(n) - rbar^(i)(n-1));
/// needs i >= 2 and n >= 3.
inline double tilde_r(const IteratedAverage& avg, std::size_t n) {
  if (avg.order() < 2) throw invalid_argument("tilde_r: order must be >= 2");
  if (n < 3) throw invalid_argument("tilde_r: undefined for n < 3");
  const auto big_r = [&avg](std::size_t m) {
    return static_cast<double>(m) * static_cast<double>(m - 1) * avg.step(m);
  };
  return (big_r(n) - big_r(n - 1)) / 2.0;
}

/// A statistic tabulated on [first, n_max]; indices below `first` are absent.
struct Series {
  std::size_t first = 1;
  std::vector<double> values;  // indexed by n; entries below `first` are NaN

  std::size_t last() const { return values.empty() ? 0 : values.size() - 1; }
  double operator[](std::size_t n) const { return values[n]; }
};

namespace detail {

template <class F>
Series tabulate(std::size_t first, std::size_t n_max, F&& f) {
  Series s;
  s.first = first;
  s.values.assign(n_max + 1, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t n = first; n <= n_max; ++n) s.values[n] = f(n);
  return s;
}

}  // namespace detail

inline Series average_series(const IteratedAverage& avg) {
  return detail::tabulate(1, avg.n_max(), [&](std::size_t n) { return avg[n]; });
}

inline Series error_values(const ErrorSeries& series) {
  return detail::tabulate(1, series.n_max(), [&](std::size_t n) { return series[n]; });
}

inline Series hat_r_series(const IteratedAverage& avg) {
  return detail::tabulate(2, avg.n_max(), [&](std::size_t n) { return hat_r(avg, n); });
}

inline Series hat_prime_r_series(const IteratedAverage& avg) {
  return detail::tabulate(2, avg.n_max(), [&](std::size_t n) { return hat_prime_r(avg, n); });
}

inline Series tilde_r_series(const IteratedAverage& avg) {
  return detail::tabulate(3, avg.n_max(), [&](std::size_t n) { return tilde_r(avg, n); });
}

struct RangeSummary {
  std::size_t lo = 0;
  std::size_t hi = 0;
  double min = 0.0;
  double max = 0.0;
  std::size_t argmin = 0;
  std::size_t argmax = 0;
};

/// Exact min/max of values[lo..hi], with the first index attaining each.
inline RangeSummary range_summary(std::span<const double> values, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi >= values.size()) {
    throw invalid_argument("range_summary: empty or out-of-range window [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  }
  RangeSummary s{lo, hi, values[lo], values[lo], lo, lo};
  for (std::size_t n = lo + 1; n <= hi; ++n) {
    if (values[n] < s.min) {
      s.min = values[n];
      s.argmin = n;
    }
    if (values[n] > s.max) {
      s.max = values[n];
      s.argmax = n;
    }
  }
  return s;
}

/// Window is clamped below to the first defined index of the series.
inline RangeSummary range_summary(const Series& series, std::size_t lo, std::size_t hi) {
  return range_summary(std::span<const double>(series.values), std::max(lo, series.first), hi);
}

}  // namespace pnt
