#pragma once

// Numerical checks of the truncated Perron integral
//
//   I_k(a, b, T) = (1 / 2 pi i) int_{b-iT}^{b+iT} k! a^s / (s (s+1) ... (s+k)) ds
//
// against its T -> infinity limit, and of the smoothed Perron formula for
// finite Dirichlet polynomials.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "pnt/error.hpp"
#include "pnt/neumaier.hpp"
#include "pnt/quadrature.hpp"

namespace pnt {

inline constexpr int kMaxPerronOrder = 6;

struct PerronResult {
  double a = 0.0;
  double b = 0.0;
  double T = 0.0;
  int k = 1;
  std::complex<double> numeric;
  double main_term = 0.0;
  double bound = 0.0;
  double quadrature_error_estimate = 0.0;

  double gap() const { return std::abs(numeric - main_term); }
  /// gap / bound; how much of the error allowance the measurement uses.
  double ratio() const { return bound > 0.0 ? gap() / bound : 0.0; }
};

/// a^b min(1/T, 1/(T^2 |log a|)), the order-1 truncation error shape with unit constant.
inline double lemma1_error_bound(double a, double b, double T) {
  if (!(a > 0.0)) throw invalid_argument("lemma1_error_bound: a must be positive");
  if (a == 1.0) throw invalid_argument("lemma1_error_bound: a = 1 has the 1/T^3 regime instead");
  if (!(T > 0.0)) throw invalid_argument("lemma1_error_bound: T must be positive");
  return std::pow(a, b) * std::min(1.0 / T, 1.0 / (T * T * std::abs(std::log(a))));
}

/// Same shape for the order-k kernel: a^b k! min(1/T^k, 1/(T^{k+1} |log a|)).
inline double perron_error_bound(double a, double b, double T, int k) {
  if (k == 1) return lemma1_error_bound(a, b, T);
  if (!(a > 0.0) || a == 1.0 || !(T > 0.0)) throw invalid_argument("perron_error_bound: bad a or T");
  const double fact = std::tgamma(k + 1.0);
  const double tk = std::pow(T, k);
  return std::pow(a, b) * fact * std::min(1.0 / tk, 1.0 / (tk * T * std::abs(std::log(a))));
}

/// Sum of residues of k! a^s / (s (s+1) ... (s+k)) at s = 0, -1, ..., -k:
/// sum_j (-1)^j C(k, j) a^{-j}.
inline double perron_residue_sum(double a, int k) {
  NeumaierSum acc;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    acc += ((j % 2 == 0) ? binom : -binom) * std::pow(a, -j);
    binom = binom * (k - j) / (j + 1);
  }
  return acc.value();
}

/// Limit of I_k as T -> infinity, with the finite-T correction 1/(pi T) kept for a = 1, k = 1.
inline double perron_main_term(double a, double T, int k) {
  if (a > 1.0) return perron_residue_sum(a, k);
  if (a < 1.0) return 0.0;
  return k == 1 ? 1.0 / (std::numbers::pi * T) : 0.0;
}

/// Envelope for |I_k - main term| at a = 1.
inline double perron_unit_bound(double b, double T, int k) {
  if (k == 1) return std::pow(b + 1.0, 3) / (T * T * T);
  return std::tgamma(static_cast<double>(k)) / (std::numbers::pi * std::pow(T, k));
}

namespace detail {

inline std::complex<double> perron_kernel(std::complex<double> s, double log_a, int k) {
  std::complex<double> denom = s;
  for (int j = 1; j <= k; ++j) denom *= s + static_cast<double>(j);
  return std::tgamma(k + 1.0) * std::exp(s * log_a) / denom;
}

inline void check_perron_args(double a, double b, double T, int k) {
  if (!(a > 0.0)) throw invalid_argument("perron_integral: a must be positive");
  if (!(b > 0.0)) throw invalid_argument("perron_integral: b must be positive");
  if (!(T > 0.0)) throw invalid_argument("perron_integral: T must be positive");
  if (k < 1 || k > kMaxPerronOrder) throw invalid_argument("perron_integral: k must be in [1, 6]");
}

inline OscillationHint perron_hint(double a, double b) { return {std::abs(std::log(a)), b}; }

}  // namespace detail

/// I_k(a, b, T). Uses f(b - it) = conj f(b + it), so only [0, T] is integrated:
/// I_k = (1/pi) int_0^T Re f(b + it) dt.
inline PerronResult perron_integral(double a, double b, double T, int k, const QuadratureOptions& opt = {}) {
  detail::check_perron_args(a, b, T, k);
  const double log_a = std::log(a);
  auto f = [=](double t) { return detail::perron_kernel({b, t}, log_a, k).real(); };
  QuadratureOptions half = opt;
  half.abs_tol = opt.abs_tol * std::numbers::pi;
  const auto q = integrate_oscillatory<double>(f, 0.0, T, detail::perron_hint(a, b), half);
  PerronResult result;
  result.a = a;
  result.b = b;
  result.T = T;
  result.k = k;
  result.numeric = q.value / std::numbers::pi;
  result.main_term = perron_main_term(a, T, k);
  result.bound = a == 1.0 ? perron_unit_bound(b, T, k) : perron_error_bound(a, b, T, k);
  result.quadrature_error_estimate = q.error_estimate / std::numbers::pi;
  return result;
}

/// Reference evaluation over the whole segment [-T, T] with no symmetry assumed.
inline std::complex<double> perron_integral_full_range(double a, double b, double T, int k,
                                                       const QuadratureOptions& opt = {}) {
  detail::check_perron_args(a, b, T, k);
  const double log_a = std::log(a);
  auto f = [=](double t) { return detail::perron_kernel({b, t}, log_a, k); };
  QuadratureOptions full = opt;
  full.abs_tol = opt.abs_tol * 2.0 * std::numbers::pi;
  const auto q = integrate_oscillatory<std::complex<double>>(f, -T, T, detail::perron_hint(a, b), full);
  return q.value / (2.0 * std::numbers::pi);
}

/// Finite Dirichlet polynomial A(s) = sum a(n) n^{-s}.
using DirichletCoefficients = std::map<std::uint64_t, std::complex<double>>;

struct DirichletPerronCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double gap = 0.0;
  double quadrature_error_estimate = 0.0;
};

/// F(x, s0) = sum_{n<=x} sum_{m<=n} a(m) m^{-s0}.
inline std::complex<double> dirichlet_double_partial_sum(const DirichletCoefficients& coeffs, std::complex<double> s0,
                                                         std::uint64_t x) {
  std::complex<double> inner{};
  std::complex<double> total{};
  auto it = coeffs.begin();
  for (std::uint64_t n = 1; n <= x; ++n) {
    for (; it != coeffs.end() && it->first <= n; ++it) {
      inner += it->second * std::exp(-s0 * std::log(static_cast<double>(it->first)));
    }
    total += inner;
  }
  return total;
}

/// Compares F(x, s0) with (xb / 2 pi i) int_{b-iT}^{b+iT} A(s + s0) xb^s / (s (s+1)) ds, xb = x + 1.
inline DirichletPerronCheck dirichlet_perron_check(const DirichletCoefficients& coeffs, std::complex<double> s0,
                                                   double b, double T, std::uint64_t x,
                                                   const QuadratureOptions& opt = {}) {
  if (coeffs.empty()) throw invalid_argument("dirichlet_perron_check: no coefficients");
  if (coeffs.begin()->first == 0) throw invalid_argument("dirichlet_perron_check: indices start at 1");
  if (coeffs.size() > 1000) throw invalid_argument("dirichlet_perron_check: at most 1000 coefficients");
  if (!(b > 0.0) || !(b + s0.real() > 0.0)) {
    throw invalid_argument("dirichlet_perron_check: need b > 0 and b + Re(s0) > 0");
  }
  if (!(T > 0.0)) throw invalid_argument("dirichlet_perron_check: T must be positive");
  if (x < 1) throw invalid_argument("dirichlet_perron_check: x must be >= 1");

  const double x_bar = static_cast<double>(x + 1);
  const double log_xb = std::log(x_bar);
  std::vector<std::pair<double, std::complex<double>>> terms;  // (log(xb/n), a(n) n^{-s0})
  double max_freq = 0.0;
  for (const auto& [n, c] : coeffs) {
    const double log_n = std::log(static_cast<double>(n));
    terms.emplace_back(log_xb - log_n, c * std::exp(-s0 * log_n));
    max_freq = std::max(max_freq, std::abs(log_xb - log_n));
  }
  auto f = [&terms, b](double t) {
    const std::complex<double> s(b, t);
    std::complex<double> sum{};
    for (const auto& [log_ratio, c] : terms) sum += c * std::exp(s * log_ratio);
    return sum / (s * (s + 1.0));
  };
  QuadratureOptions full = opt;
  full.abs_tol = opt.abs_tol * 2.0 * std::numbers::pi;
  const auto q = integrate_oscillatory<std::complex<double>>(f, -T, T, {max_freq, b}, full);

  DirichletPerronCheck out;
  out.lhs = dirichlet_double_partial_sum(coeffs, s0, x);
  out.rhs = x_bar * q.value / (2.0 * std::numbers::pi);
  out.gap = std::abs(out.lhs - out.rhs);
  out.quadrature_error_estimate = x_bar * q.error_estimate / (2.0 * std::numbers::pi);
  return out;
}

}  // namespace pnt
