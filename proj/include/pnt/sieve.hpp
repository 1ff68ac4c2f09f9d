#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnt/error.hpp"
#include "pnt/neumaier.hpp"

namespace pnt {

/// Smallest prime factor of every n in [0, n_max], by the linear sieve.
/// spf[0] = 0 and spf[1] = 1 by convention.
inline std::vector<std::uint32_t> smallest_prime_factors(std::size_t n_max) {
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  std::vector<std::uint32_t> primes;
  if (n_max >= 1) spf[1] = 1;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      const std::size_t m = i * p;
      if (p > spf[i] || m > n_max) break;
      spf[m] = p;
    }
  }
  return spf;
}

/// Sieved von Mangoldt values with prefix sums for psi, theta and pi.
/// Immutable once built; index 0 is unused.
class LambdaTable {
 public:
  /// Builds the table for 1..n_max with the smallest-prime-factor sieve.
  static LambdaTable build(std::size_t n_max) {
    if (n_max == 0) throw invalid_argument("build_lambda_table: n_max must be >= 1");
    if (n_max > std::size_t{0xFFFFFFFF}) {
      throw invalid_argument("build_lambda_table: n_max exceeds 32-bit sieve range");
    }
    const auto spf = smallest_prime_factors(n_max);
    std::vector<double> lambda(n_max + 1, 0.0);
    std::vector<bool> prime(n_max + 1, false);
    for (std::size_t n = 2; n <= n_max; ++n) {
      const std::uint32_t p = spf[n];
      if (p == n) {
        prime[n] = true;
        lambda[n] = std::log(static_cast<double>(p));
        continue;
      }
      std::size_t m = n;
      while (m % p == 0) m /= p;
      if (m == 1) lambda[n] = std::log(static_cast<double>(p));
    }
    return LambdaTable(std::move(lambda), std::move(prime));
  }

  /// Rebuilds the derived prefix sums from raw Lambda values (cache path).
  /// Primality is recovered as Lambda(n) = log n.
  static LambdaTable from_lambda(std::vector<double> lambda) {
    if (lambda.size() < 2) throw invalid_argument("LambdaTable: n_max must be >= 1");
    std::vector<bool> prime(lambda.size(), false);
    for (std::size_t n = 2; n < lambda.size(); ++n) {
      if (lambda[n] > 0.0 && std::llround(std::exp(lambda[n])) == static_cast<long long>(n)) {
        prime[n] = true;
      }
    }
    return LambdaTable(std::move(lambda), std::move(prime));
  }

  std::size_t n_max() const { return lambda_.size() - 1; }

  double lambda(std::size_t n) const {
    check(n, "lambda");
    return lambda_[n];
  }
  double psi(std::size_t x) const {
    check(x, "psi");
    return psi_[x];
  }
  double theta(std::size_t x) const {
    check(x, "theta");
    return theta_[x];
  }
  std::size_t prime_pi(std::size_t x) const {
    check(x, "prime_pi");
    return pi_[x];
  }
  bool is_prime(std::size_t n) const {
    check(n, "is_prime");
    return prime_[n];
  }

  /// Lambda(0..n_max); element 0 is 0 and unused.
  std::span<const double> lambda_values() const { return lambda_; }
  std::span<const double> psi_values() const { return psi_; }

 private:
  LambdaTable(std::vector<double> lambda, std::vector<bool> prime)
      : lambda_(std::move(lambda)), prime_(std::move(prime)) {
    lambda_[0] = 0.0;
    psi_.assign(lambda_.size(), 0.0);
    theta_.assign(lambda_.size(), 0.0);
    pi_.assign(lambda_.size(), 0);
    NeumaierSum psi_acc;
    NeumaierSum theta_acc;
    std::size_t count = 0;
    for (std::size_t n = 1; n < lambda_.size(); ++n) {
      psi_acc += lambda_[n];
      if (prime_[n]) {
        theta_acc += lambda_[n];
        ++count;
      }
      psi_[n] = psi_acc.value();
      theta_[n] = theta_acc.value();
      pi_[n] = count;
    }
  }

  void check(std::size_t x, const char* what) const {
    if (x < 1 || x > n_max()) {
      throw invalid_argument(std::string(what) + ": argument " + std::to_string(x) +
                             " outside [1, " + std::to_string(n_max()) + "]");
    }
  }

  std::vector<double> lambda_;
  std::vector<bool> prime_;
  std::vector<double> psi_;
  std::vector<double> theta_;
  std::vector<std::size_t> pi_;
};

/// r(n) = psi(n) - n for 1 <= n <= n_max.
class ErrorSeries {
 public:
  ErrorSeries(const LambdaTable& table, std::size_t n_max) {
    if (n_max < 1 || n_max > table.n_max()) {
      throw invalid_argument("error_series: n_max " + std::to_string(n_max) + " outside [1, " +
                             std::to_string(table.n_max()) + "]");
    }
    r_.assign(n_max + 1, 0.0);
    const auto psi = table.psi_values();
    for (std::size_t n = 1; n <= n_max; ++n) r_[n] = psi[n] - static_cast<double>(n);
  }

  std::size_t n_max() const { return r_.size() - 1; }

  double operator[](std::size_t n) const { return r_[n]; }
  double at(std::size_t n) const {
    if (n < 1 || n > n_max()) {
      throw invalid_argument("ErrorSeries: index " + std::to_string(n) + " out of range");
    }
    return r_[n];
  }

  /// r(0..n_max); element 0 is unused.
  std::span<const double> values() const { return r_; }

 private:
  std::vector<double> r_;
};

inline LambdaTable build_lambda_table(std::size_t n_max) { return LambdaTable::build(n_max); }

inline ErrorSeries error_series(const LambdaTable& table, std::size_t n_max) {
  return ErrorSeries(table, n_max);
}

inline ErrorSeries error_series(const LambdaTable& table) { return ErrorSeries(table, table.n_max()); }

}  // namespace pnt
