// Prints the iterated average errors at a few points and the first table.

#include <cstdio>

#include "pnt/averaging.hpp"
#include "pnt/sieve.hpp"

int main() {
  const auto table = pnt::build_lambda_table(100000);
  const auto r = pnt::error_series(table);

  std::printf("%8s %14s %14s %14s %14s\n", "n", "r(n)", "rbar1", "rbar2", "rbar3");
  const pnt::IteratedAverage a1(r, 1, r.n_max());
  const pnt::IteratedAverage a2(r, 2, r.n_max());
  const pnt::IteratedAverage a3(r, 3, r.n_max());
  for (std::size_t n = 10; n <= 100000; n *= 10) {
    std::printf("%8zu %14.6f %14.6f %14.6f %14.6f\n", n, r[n], a1[n], a2[n], a3[n]);
  }

  std::printf("\n%-10s %12s %12s\n", "", "min", "max");
  const auto show = [](const char* name, std::span<const double> v) {
    const auto s = pnt::range_summary(v, 1, v.size() - 1);
    std::printf("%-10s %12.6f %12.6f\n", name, s.min, s.max);
  };
  show("r", r.values());
  show("rbar1", a1.values());
  show("rbar2", a2.values());
  show("rbar3", a3.values());
}
