#pragma once

// Binomial weight families that express the iterated averages and their
// differences as weighted sums of Lambda:
//
//   A:  a(i; n, j) = C(n+i-j, i) / C(n+i-1, i)
//   B:  b(i; n, j) = (j-1) C(n+i-1-j, i-1) / C(n+i-1, i+1)
//   H:  h(i; n, j) = C(n+i-2-j, i-2) C(j, 2) / C(n+i-1, i)
//
// Every ratio collapses to a product of at most i+1 linear factors, which is
// how both the exact and the floating evaluators compute it.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "pnt/error.hpp"

namespace pnt {

using Rational = boost::multiprecision::cpp_rational;

enum class WeightFamily { A, B, H };

struct WeightScheme {
  WeightFamily family;
  int order;
};

/// C(n+k-1, k) in double; exact while the value stays below 2^53.
inline double binomial_average_denominator(std::uint64_t n, int k) {
  double c = 1.0;
  for (int t = 1; t <= k; ++t) c = c * static_cast<double>(n - 1 + t) / t;
  return c;
}

namespace detail {

inline void validate(const WeightScheme& s, std::int64_t n, std::int64_t j) {
  if (s.order < 0 || s.order > 64) throw invalid_argument("weight: order out of range");
  if (j < 1 || j > n) {
    throw invalid_argument("weight: need 1 <= j <= n, got n=" + std::to_string(n) + " j=" + std::to_string(j));
  }
  switch (s.family) {
    case WeightFamily::A:
      break;
    case WeightFamily::B:
      if (s.order < 1) throw invalid_argument("weight: family B needs order >= 1");
      if (n < 2) throw invalid_argument("weight: family B undefined at n = 1");
      break;
    case WeightFamily::H:
      if (s.order < 2) throw invalid_argument("weight: family H needs order >= 2");
      break;
  }
}

// Generic product evaluator: coefficient * prod(num_t) / prod(den_t) over the
// factor lists implied by the family. T is Rational or double.
template <class T>
T evaluate(const WeightScheme& s, std::int64_t n, std::int64_t j) {
  const std::int64_t i = s.order;
  T value(1);
  switch (s.family) {
    case WeightFamily::A:
      for (std::int64_t t = 1; t <= i; ++t) {
        value *= T(n - j + t);
        value /= T(n - 1 + t);
      }
      break;
    case WeightFamily::B:
      value = T((j - 1) * i * (i + 1));
      for (std::int64_t t = 1; t <= i - 1; ++t) value *= T(n - j + t);
      for (std::int64_t t = 1; t <= i + 1; ++t) value /= T(n - 2 + t);
      break;
    case WeightFamily::H:
      value = T(j * (j - 1) / 2 * i * (i - 1));
      for (std::int64_t t = 1; t <= i - 2; ++t) value *= T(n - j + t);
      for (std::int64_t t = 1; t <= i; ++t) value /= T(n - 1 + t);
      break;
  }
  return value;
}

}  // namespace detail

/// Exact weight value.
inline Rational weight(const WeightScheme& scheme, std::int64_t n, std::int64_t j) {
  detail::validate(scheme, n, j);
  return detail::evaluate<Rational>(scheme, n, j);
}

/// Same weight in binary64, for the weighted-sum forms.
inline double weight_value(const WeightScheme& scheme, std::int64_t n, std::int64_t j) {
  detail::validate(scheme, n, j);
  return detail::evaluate<double>(scheme, n, j);
}

}  // namespace pnt
