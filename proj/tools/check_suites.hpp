#pragma once

// Invariant suites run by `pnt check` at reduced scale.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pnt/averaging.hpp"
#include "pnt/explicit_formula.hpp"
#include "pnt/perron.hpp"
#include "pnt/sieve.hpp"
#include "pnt/testing/oracles.hpp"
#include "pnt/weights.hpp"
#include "pnt/zeros.hpp"

namespace pnt::cli {

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Suite {
  std::string name;
  std::function<std::string()> run;  // returns "" on success, else the failing invariant
};

inline std::vector<Suite> invariant_suites(const LambdaTable& table, const std::optional<ZeroSet>& zeros) {
  std::vector<Suite> suites;
  const auto series = std::make_shared<ErrorSeries>(error_series(table, std::min<std::size_t>(table.n_max(), 10000)));

  suites.push_back({"sieve.psi_equals_log_lcm", [&table] {
                      const std::size_t n_max = std::min<std::size_t>(2000, table.n_max());
                      const auto oracle = testing::log_lcm_table(n_max);
                      for (std::size_t n = 1; n <= n_max; ++n) {
                        if (std::abs(table.psi(n) - oracle[n]) > 1e-9) {
                          return "|psi(n) - log lcm(1..n)| > 1e-9 at n = " + std::to_string(n);
                        }
                      }
                      return std::string();
                    }});

  suites.push_back({"sieve.prime_count_trial_division", [&table] {
                      const std::size_t n_max = std::min<std::size_t>(10000, table.n_max());
                      std::size_t count = 0;
                      for (std::size_t n = 1; n <= n_max; ++n) {
                        count += testing::is_prime_trial_division(n);
                        if (table.prime_pi(n) != count) return "pi(n) mismatch at n = " + std::to_string(n);
                      }
                      return std::string();
                    }});

  suites.push_back({"averaging.nested_sum_oracle", [series] {
                      const std::size_t n_max = std::min<std::size_t>(100, series->n_max());
                      for (int k = 1; k <= 3; ++k) {
                        const IteratedAverage avg(*series, k, n_max);
                        for (std::size_t n = 1; n <= n_max; ++n) {
                          const auto oracle = static_cast<double>(testing::nested_sum_average(series->values(), k, n));
                          if (std::abs(avg[n] - oracle) > 1e-9) {
                            return "nested-sum mismatch k=" + std::to_string(k) + " n=" + std::to_string(n);
                          }
                        }
                      }
                      return std::string();
                    }});

  suites.push_back({"averaging.weight_form", [series] {
                      const std::size_t n_max = std::min<std::size_t>(1000, series->n_max());
                      for (int k = 1; k <= 3; ++k) {
                        const IteratedAverage avg(*series, k, n_max);
                        for (std::size_t n = 1; n <= n_max; ++n) {
                          if (std::abs(average_via_weights(*series, k, n) - avg[n]) > 1e-9) {
                            return "weight-form mismatch k=" + std::to_string(k) + " n=" + std::to_string(n);
                          }
                        }
                      }
                      return std::string();
                    }});

  suites.push_back({"weights.b_sums_to_one", [] {
                      for (int i = 1; i <= 5; ++i) {
                        for (std::int64_t n = 2; n <= 100; ++n) {
                          Rational sum = 0;
                          for (std::int64_t j = 1; j <= n; ++j) sum += weight({WeightFamily::B, i}, n, j);
                          if (sum != 1) return "sum_j b != 1 at i=" + std::to_string(i) + " n=" + std::to_string(n);
                        }
                      }
                      return std::string();
                    }});

  suites.push_back({"averaging.weighted_sum_identities", [&table, series] {
                      const std::size_t n_max = series->n_max();
                      for (int i = 1; i <= 6; ++i) {
                        const IteratedAverage avg(*series, i, n_max);
                        for (std::size_t n = 3; n <= n_max; ++n) {
                          const double nn = static_cast<double>(n);
                          if (i <= 3 && std::abs(avg[n] - (weighted_psi(table, i, n) - (nn + i) / (i + 1.0))) > 1e-7) {
                            return "psi_i identity fails at i=" + std::to_string(i) + " n=" + std::to_string(n);
                          }
                          if (i <= 5 && std::abs(hat_r(avg, n) - (hat_psi(table, i, n) - 1.0)) > 1e-7) {
                            return "psi-hat identity fails at i=" + std::to_string(i) + " n=" + std::to_string(n);
                          }
                          if (i <= 5 && std::abs(hat_prime_r(avg, n) - (hat_prime_psi(table, i, n) - (nn - 1.0) / (i + 1.0))) > 1e-7) {
                            return "psi-hat' identity fails at i=" + std::to_string(i) + " n=" + std::to_string(n);
                          }
                          if (i >= 2 && std::abs(tilde_r(avg, n) - (tilde_psi(table, i, n) - (nn - 1.0) / (i + 1.0))) > 1e-7) {
                            return "psi-tilde identity fails at i=" + std::to_string(i) + " n=" + std::to_string(n);
                          }
                        }
                      }
                      return std::string();
                    }});

  suites.push_back({"perron.kernel_envelope", [] {
                      for (const double a : {1.01, 1.5, 2.0, 5.0, 0.99, 0.5, 0.1}) {
                        for (const double b : {0.5, 1.0, 2.0}) {
                          for (const double T : {1e2, 1e3}) {
                            const auto res = perron_integral(a, b, T, 1);
                            if (res.gap() > 4.0 * lemma1_error_bound(a, b, T)) {
                              std::ostringstream msg;
                              msg << "gap " << res.gap() << " > 4 bound at a=" << a << " b=" << b << " T=" << T;
                              return msg.str();
                            }
                          }
                        }
                      }
                      return std::string();
                    }});

  suites.push_back({"perron.unit_a_regime", [] {
                      double lo = INFINITY;
                      double hi = 0.0;
                      for (const double T : {1e2, 1e3}) {
                        const auto res = perron_integral(1.0, 1.0, T, 1, {1e-16, 40});
                        const double c = std::abs(res.numeric.real() - 1.0 / (std::numbers::pi * T)) * T * T * T;
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                      }
                      if (hi > 2.0 * lo) return std::string("fitted T^-3 constant unstable");
                      return std::string();
                    }});

  suites.push_back({"perron.dirichlet_gap_shrinks", [&table] {
                      DirichletCoefficients coeffs;
                      for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(50, table.n_max()); ++n) {
                        if (table.lambda(n) > 0.0) coeffs[n] = table.lambda(n);
                      }
                      const auto coarse = dirichlet_perron_check(coeffs, 0.0, 1.0, 1e2, 30);
                      const auto fine = dirichlet_perron_check(coeffs, 0.0, 1.0, 1e3, 30);
                      if (coarse.gap < 5.0 * fine.gap) return std::string("gap did not shrink 5x for 10x T");
                      return std::string();
                    }});

  if (zeros) {
    const auto z = std::make_shared<ZeroSet>(*zeros);
    suites.push_back({"zeros.conjugate_pairing_and_additivity", [z] {
                        if (z->empty()) return std::string();
                        const double top = z->gammas().back();
                        const double split = z->gammas()[z->size() / 2];
                        for (const int k : {1, 2, 3}) {
                          const double all = zero_sum(*z, 5000.0, top, k).value;
                          std::vector<double> upper(z->gammas().begin() + static_cast<std::ptrdiff_t>(z->count_up_to(split)),
                                                    z->gammas().end());
                          const double low = zero_sum(*z, 5000.0, split, k).value;
                          const double high = upper.empty() ? 0.0 : zero_sum(ZeroSet(upper, "upper"), 5000.0, top, k).value;
                          if (std::abs(low + high - all) > 1e-12) return "additivity fails for k=" + std::to_string(k);
                          std::complex<double> separate{};
                          for (const double g : z->gammas()) {
                            for (const double sign : {1.0, -1.0}) {
                              const std::complex<double> rho(0.5, sign * g);
                              std::complex<double> den = rho;
                              for (int j = 1; j <= k; ++j) den *= rho + static_cast<double>(j);
                              separate += std::exp(rho * std::log(5000.0)) / den;
                            }
                          }
                          if (std::abs(separate.real() - all) > 1e-10) return "conjugate pairing fails for k=" + std::to_string(k);
                        }
                        return std::string();
                      }});
    suites.push_back({"zeros.gamma_square_tail_monotone", [z] {
                        double prev = 0.0;
                        for (const double g : z->gammas()) {
                          const double v = gamma_square_tail(*z, g);
                          if (v < prev) return std::string("gamma_square_tail decreased");
                          prev = v;
                        }
                        if (prev > 1.0) return std::string("gamma_square_tail not bounded");
                        return std::string();
                      }});
    suites.push_back({"zeros.residual_trend", [&table, z] {
                        if (z->size() < 21 || table.n_max() < 10000) return std::string();
                        const auto s = error_series(table, 10000);
                        const IteratedAverage avg(s, 1, 10000);
                        const auto median_abs = [&](const ZeroSet& zs) {
                          std::vector<double> v;
                          for (std::size_t i = 0; i < 100; ++i) {
                            v.push_back(std::abs(explicit_formula_residual(avg, zs, 1000 + 90 * i, zs.gammas().back())));
                          }
                          std::nth_element(v.begin(), v.begin() + 50, v.end());
                          const double upper = v[50];
                          std::nth_element(v.begin(), v.begin() + 49, v.end());
                          return 0.5 * (upper + v[49]);
                        };
                        if (!(median_abs(*z) <= median_abs(z->prefix(20)))) {
                          return std::string("median |residual| with all zeros exceeds that with 20");
                        }
                        return std::string();
                      }});
  }
  return suites;
}

}  // namespace pnt::cli
