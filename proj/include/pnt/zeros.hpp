#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <istream>
#include <span>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "pnt/error.hpp"
#include "pnt/neumaier.hpp"

namespace pnt {

/// Ordinates gamma > 0 of nontrivial zeta zeros rho = 1/2 + i gamma, ascending.
class ZeroSet {
 public:
  ZeroSet() = default;
  ZeroSet(std::vector<double> gammas, std::string source) : gammas_(std::move(gammas)), source_(std::move(source)) {
    for (std::size_t i = 0; i < gammas_.size(); ++i) {
      if (!(gammas_[i] > 14.0)) {
        throw format_error("zero set: ordinate " + std::to_string(gammas_[i]) + " is not above 14");
      }
      if (i > 0 && !(gammas_[i] > gammas_[i - 1])) {
        throw format_error("zero set: ordinates not strictly increasing at entry " + std::to_string(i + 1));
      }
    }
  }

  std::span<const double> gammas() const { return gammas_; }
  const std::string& source() const { return source_; }
  std::size_t size() const { return gammas_.size(); }
  bool empty() const { return gammas_.empty(); }

  /// First `count` zeros (or all of them, if fewer).
  ZeroSet prefix(std::size_t count) const {
    count = std::min(count, gammas_.size());
    return ZeroSet(std::vector<double>(gammas_.begin(), gammas_.begin() + static_cast<std::ptrdiff_t>(count)),
                   source_ + " [first " + std::to_string(count) + "]");
  }

  /// Number of ordinates <= T.
  std::size_t count_up_to(double T) const {
    return static_cast<std::size_t>(std::upper_bound(gammas_.begin(), gammas_.end(), T) - gammas_.begin());
  }

 private:
  std::vector<double> gammas_;
  std::string source_;
};

/// One decimal ordinate per line; blank lines and lines starting with '#' are
/// skipped. Anything else that fails to parse is an error.
inline ZeroSet load_zeros(std::istream& in, std::string source = "<stream>") {
  std::vector<double> gammas;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
      throw parse_error(source + ":" + std::to_string(line_no) + ": not a decimal ordinate: '" +
                        std::string(begin, end) + "'");
    }
    if (!gammas.empty() && !(value > gammas.back())) {
      throw format_error(source + ":" + std::to_string(line_no) + ": ordinate " + std::string(begin, end) +
                         " does not exceed its predecessor");
    }
    gammas.push_back(value);
  }
  return ZeroSet(std::move(gammas), std::move(source));
}

struct ZeroSumResult {
  double x = 0.0;
  double T = 0.0;
  int k = 1;
  double value = 0.0;
  std::size_t count_used = 0;
  /// 2 sum x^{1/2} / prod |rho + j|, the termwise triangle bound on |value|.
  double abs_bound = 0.0;
};

namespace detail {

inline std::complex<double> zero_term(double log_x, double gamma, int k) {
  const std::complex<double> rho(0.5, gamma);
  std::complex<double> denom = rho;
  for (int j = 1; j <= k; ++j) denom *= rho + static_cast<double>(j);
  return std::polar(std::exp(0.5 * log_x), gamma * log_x) / denom;
}

inline void check_zero_sum_args(const ZeroSet& zeros, double x, double T, int k) {
  if (!(x > 1.0)) throw invalid_argument("zero_sum: x must exceed 1");
  if (k < 1) throw invalid_argument("zero_sum: kernel order must be >= 1");
  if (!(T >= 0.0)) throw invalid_argument("zero_sum: T must be nonnegative");
  if (!zeros.empty() && T > zeros.gammas().back()) {
    throw out_of_data_error("zero_sum: T = " + std::to_string(T) + " exceeds last ordinate " +
                            std::to_string(zeros.gammas().back()) + " (" + zeros.source() + ")");
  }
}

}  // namespace detail

/// sum over 0 < gamma <= T of 2 Re[ x^rho / (rho (rho+1) ... (rho+k)) ], rho = 1/2 + i gamma,
/// accumulated in ascending gamma.
inline ZeroSumResult zero_sum(const ZeroSet& zeros, double x, double T, int k) {
  detail::check_zero_sum_args(zeros, x, T, k);
  const double log_x = std::log(x);
  const double sqrt_x = std::sqrt(x);
  ZeroSumResult result{x, T, k, 0.0, zeros.count_up_to(T), 0.0};
  NeumaierSum value;
  NeumaierSum bound;
  const auto gammas = zeros.gammas();
  for (std::size_t i = 0; i < result.count_used; ++i) {
    const auto term = detail::zero_term(log_x, gammas[i], k);
    value += 2.0 * term.real();
    double mag = 1.0;
    for (int j = 0; j <= k; ++j) mag *= std::abs(std::complex<double>(0.5 + j, gammas[i]));
    bound += 2.0 * sqrt_x / mag;
  }
  result.value = value.value();
  result.abs_bound = bound.value();
  return result;
}

/// lambda_i(x, T) = zero_sum(x, T, i) / x^{1/2}.
inline double lambda_factor(const ZeroSet& zeros, double x, double T, int i) {
  if (i < 1 || i > 3) throw invalid_argument("lambda_factor: i must be 1, 2 or 3");
  return zero_sum(zeros, x, T, i).value / std::sqrt(x);
}

/// 2 sum_{gamma <= T} 1 / gamma^2.
inline double gamma_square_tail(const ZeroSet& zeros, double T) {
  if (std::isnan(T)) throw invalid_argument("gamma_square_tail: T is NaN");
  NeumaierSum acc;
  const auto gammas = zeros.gammas();
  const std::size_t used = zeros.count_up_to(T);
  for (std::size_t i = 0; i < used; ++i) acc += 2.0 / (gammas[i] * gammas[i]);
  return acc.value();
}

}  // namespace pnt
