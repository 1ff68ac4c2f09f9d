#pragma once

// Composite adaptive Gauss-Kronrod integration along a line segment whose
// integrand is smooth but oscillatory. The segment is first cut into panels no
// wider than half an oscillation period (and no wider than the distance scale
// set by nearby poles); each panel is then bisected until its Kronrod-Gauss
// error estimate meets its share of the absolute tolerance.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pnt/error.hpp"

namespace pnt {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_depth = 30;
  /// Hard cap on the number of initial panels.
  std::size_t max_panels = 50'000'000;
};

/// Shape hints for the panel layout.
struct OscillationHint {
  /// Angular frequency of the oscillation in the integration variable; 0 if none.
  double frequency = 0.0;
  /// Distance from the path to the nearest singularity at t = 0.
  double pole_distance = 1.0;
};

template <class Value>
struct QuadratureResult {
  Value value{};
  double error_estimate = 0.0;
  std::size_t panels = 0;
  std::size_t evaluations = 0;
};

namespace detail {

inline constexpr unsigned kKronrodPoints = 31;

template <class F, class Value>
Value adaptive_panel(F& f, double lo, double hi, double tol, int depth, const QuadratureOptions& opt,
                     QuadratureResult<Value>& acc) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, kKronrodPoints>;
  double err = 0.0;
  const Value estimate = Rule::integrate(f, lo, hi, 0, 0.0, &err);
  // Boost reports the unadaptive error on the reference interval [-1, 1].
  err *= (hi - lo) / 2.0;
  acc.evaluations += kKronrodPoints;
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(estimate);
  if (err <= std::max(tol, roundoff)) {
    acc.error_estimate += err;
    ++acc.panels;
    return estimate;
  }
  if (depth >= opt.max_depth) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << lo << ", " << hi << "]: error estimate " << err
        << " > tolerance " << tol << " after " << depth << " bisections";
    throw numeric_failure(msg.str());
  }
  const double mid = 0.5 * (lo + hi);
  const Value left = adaptive_panel(f, lo, mid, tol / 2.0, depth + 1, opt, acc);
  const Value right = adaptive_panel(f, mid, hi, tol / 2.0, depth + 1, opt, acc);
  return left + right;
}

}  // namespace detail

/// Panel boundaries on [lo, hi] with lo >= 0: widths grow geometrically away
/// from the pole at t = 0 and are capped at half an oscillation period.
inline std::vector<double> panel_boundaries(double lo, double hi, const OscillationHint& hint,
                                            const QuadratureOptions& opt = {}) {
  const double half_period =
      hint.frequency > 0.0 ? std::numbers::pi / hint.frequency : std::numeric_limits<double>::infinity();
  std::vector<double> cuts{lo};
  double t = lo;
  while (t < hi) {
    const double width = std::min(half_period, std::max(hint.pole_distance, std::abs(t)));
    t = std::min(hi, t + width);
    cuts.push_back(t);
    if (cuts.size() > opt.max_panels) throw numeric_failure("quadrature: panel budget exceeded");
  }
  return cuts;
}

/// Integral of f over [lo, hi] (lo >= 0, or a symmetric hint), Value = double or complex<double>.
template <class Value, class F>
QuadratureResult<Value> integrate_oscillatory(F f, double lo, double hi, const OscillationHint& hint,
                                              const QuadratureOptions& opt = {}) {
  QuadratureResult<Value> acc;
  if (!(hi > lo)) return acc;
  std::vector<double> cuts;
  if (lo < 0.0 && hi > 0.0) {
    // Mirror the layout of [0, -lo] onto the negative half so that both halves
    // see the same grading near the origin.
    const auto neg = panel_boundaries(0.0, -lo, hint, opt);
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) cuts.push_back(-*it);
    const auto pos = panel_boundaries(0.0, hi, hint, opt);
    cuts.insert(cuts.end(), pos.begin() + 1, pos.end());
  } else {
    cuts = panel_boundaries(lo, hi, hint, opt);
  }
  const double length = hi - lo;
  Value total{};
  Value comp{};  // Neumaier-style compensation, componentwise for complex
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double tol = opt.abs_tol * (cuts[p + 1] - cuts[p]) / length;
    const Value piece = detail::adaptive_panel<F, Value>(f, cuts[p], cuts[p + 1], tol, 0, opt, acc);
    const Value t = total + piece;
    if constexpr (std::is_same_v<Value, double>) {
      comp += std::abs(total) >= std::abs(piece) ? (total - t) + piece : (piece - t) + total;
    } else {
      const auto fold = [](double s, double x, double sum) {
        return std::abs(s) >= std::abs(x) ? (s - sum) + x : (x - sum) + s;
      };
      comp += Value(fold(total.real(), piece.real(), t.real()), fold(total.imag(), piece.imag(), t.imag()));
    }
    total = t;
  }
  acc.value = total + comp;
  return acc;
}

}  // namespace pnt
