#pragma once

// Min/max summaries of the error statistics over the ranges used by the four
// published tables:
//   1. r, rbar^(1..3)          on [1, N]
//   2. rhat^(1..5)             on [100, N]
//   3. rhat'^(1..5)            on [2, N]   (first defined index)
//   4. rtilde^(2..6)           on [3, N]   (first defined index)

#include <string>
#include <vector>

#include "pnt/averaging.hpp"
#include "pnt/sieve.hpp"

namespace pnt {

struct TableRow {
  int table = 0;
  std::string statistic;
  RangeSummary summary;
};

inline constexpr std::size_t kTableRange = 100000;
inline constexpr std::size_t kSecondTableStart = 100;

inline std::vector<TableRow> reproduce_tables(const ErrorSeries& series) {
  const std::size_t n_max = series.n_max();
  std::vector<TableRow> rows;
  rows.push_back({1, "r", range_summary(series.values(), 1, n_max)});

  std::vector<IteratedAverage> averages;
  averages.reserve(6);
  for (int k = 1; k <= 6; ++k) averages.emplace_back(series, k, n_max);

  for (int k = 1; k <= 3; ++k) {
    rows.push_back({1, "rbar" + std::to_string(k), range_summary(averages[k - 1].values(), 1, n_max)});
  }
  if (n_max >= kSecondTableStart) {
    for (int i = 1; i <= 5; ++i) {
      rows.push_back({2, "hat_r" + std::to_string(i),
                      range_summary(hat_r_series(averages[i - 1]), kSecondTableStart, n_max)});
    }
  }
  if (n_max >= 2) {
    for (int i = 1; i <= 5; ++i) {
      rows.push_back({3, "hat_prime_r" + std::to_string(i), range_summary(hat_prime_r_series(averages[i - 1]), 1, n_max)});
    }
  }
  if (n_max >= 3) {
    for (int i = 2; i <= 6; ++i) {
      rows.push_back({4, "tilde_r" + std::to_string(i), range_summary(tilde_r_series(averages[i - 1]), 1, n_max)});
    }
  }
  return rows;
}

}  // namespace pnt
