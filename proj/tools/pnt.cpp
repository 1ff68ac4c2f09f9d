// pnt: command-line front end for the prime-number-theorem average-error toolkit.
//
//   pnt sieve    --n-max N [--cache PATH]
//   pnt errors   --order K [--order K ...] [--n-max N] [--summary] [--output PATH]
//   pnt tables   [--n-max N] [--allow-partial] [--pretty] [--output PATH]
//   pnt zerosum  --zeros PATH --x X --T T --k K [--output PATH]
//   pnt perron   --a A --b B --T T [--k K] [--output PATH]
//   pnt check    [--zeros PATH] [--cache PATH]
//
// Exit status: 0 success, 1 computation or invariant failure, 2 usage error.

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "check_suites.hpp"
#include "pnt/averaging.hpp"
#include "pnt/cache.hpp"
#include "pnt/csv.hpp"
#include "pnt/perron.hpp"
#include "pnt/sieve.hpp"
#include "pnt/tables.hpp"
#include "pnt/zeros.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

enum class Command { sieve, errors, tables, zerosum, perron, check };

struct RunConfig {
  Command command = Command::check;
  std::size_t n_max = pnt::kTableRange;
  std::vector<int> orders;
  std::optional<std::string> zeros_path;
  std::optional<std::string> output_path;
  std::optional<std::string> cache_path;
  bool allow_partial = false;
  bool pretty = false;
  bool summary = false;
  double x = 0.0;
  double T = 0.0;
  double a = 0.0;
  double b = 1.0;
  int k = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where output goes: stdout, or a file opened up front so permission problems
// surface before any computation.
class Sink {
 public:
  explicit Sink(const std::optional<std::string>& path) {
    if (path) {
      file_ = std::make_unique<std::ofstream>(*path, std::ios::trunc);
      if (!*file_) throw IoError("cannot open " + *path + " for writing");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }
  void finish() {
    out().flush();
    if (!out()) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::optional<fs::path> resolve_cache(const RunConfig& cfg) {
  if (cfg.cache_path) return fs::path(*cfg.cache_path);
  if (const char* dir = std::getenv("PNT_CACHE_DIR"); dir && *dir) {
    return fs::path(dir) / ("pntsieve-" + std::to_string(cfg.n_max) + ".bin");
  }
  return std::nullopt;
}

// Reads the cache when present (and large enough), otherwise sieves and, if a
// cache location is configured, writes it.
pnt::LambdaTable obtain_table(const RunConfig& cfg) {
  const auto cache = resolve_cache(cfg);
  if (cache && fs::exists(*cache)) {
    auto table = pnt::read_cache(*cache);
    if (table.n_max() >= cfg.n_max) {
      if (table.n_max() == cfg.n_max) return table;
      auto lambda = std::vector<double>(table.lambda_values().begin(),
                                        table.lambda_values().begin() + static_cast<std::ptrdiff_t>(cfg.n_max) + 1);
      return pnt::LambdaTable::from_lambda(std::move(lambda));
    }
  }
  auto table = pnt::build_lambda_table(cfg.n_max);
  if (cache) {
    if (cache->has_parent_path()) fs::create_directories(cache->parent_path());
    pnt::write_cache(table, *cache);
  }
  return table;
}

pnt::ZeroSet load_zero_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zeros file " + path);
  return pnt::load_zeros(in, path);
}

void write_summary_header(std::ostream& out) { pnt::csv::row(out, "statistic", "lo", "hi", "min", "argmin", "max", "argmax"); }

void write_summary(std::ostream& out, const std::string& name, const pnt::RangeSummary& s) {
  pnt::csv::row(out, name, s.lo, s.hi, pnt::csv::fixed6(s.min), s.argmin, pnt::csv::fixed6(s.max), s.argmax);
}

int cmd_sieve(const RunConfig& cfg) {
  Sink sink(cfg.output_path);
  const auto table = obtain_table(cfg);
  auto& out = sink.out();
  pnt::csv::row(out, "n_max", "psi", "theta", "prime_pi", "r");
  const auto n = table.n_max();
  pnt::csv::row(out, n, pnt::csv::fixed6(table.psi(n)), pnt::csv::fixed6(table.theta(n)), table.prime_pi(n),
                pnt::csv::fixed6(table.psi(n) - static_cast<double>(n)));
  sink.finish();
  return kExitOk;
}

pnt::Series series_for_order(const pnt::ErrorSeries& series, int order) {
  if (order == 0) return pnt::error_values(series);
  return pnt::average_series(pnt::iterated_average(series, order));
}

int cmd_errors(const RunConfig& cfg) {
  std::vector<int> orders = cfg.orders.empty() ? std::vector<int>{1} : cfg.orders;
  for (const int k : orders) {
    if (k < 0 || k > pnt::kMaxAverageOrder) throw UsageError("--order must be in [0, 8]");
  }
  if (!cfg.summary && orders.size() != 1) throw UsageError("series output takes exactly one --order (or use --summary)");
  Sink sink(cfg.output_path);
  const auto table = obtain_table(cfg);
  const auto series = pnt::error_series(table);
  auto& out = sink.out();
  if (cfg.summary) {
    write_summary_header(out);
    for (const int k : orders) {
      write_summary(out, k == 0 ? "r" : "rbar" + std::to_string(k),
                    pnt::range_summary(series_for_order(series, k), 1, series.n_max()));
    }
  } else {
    const auto values = series_for_order(series, orders.front());
    pnt::csv::row(out, "n", "value");
    for (std::size_t n = values.first; n <= values.last(); ++n) pnt::csv::row(out, n, pnt::csv::fixed6(values[n]));
  }
  sink.finish();
  return kExitOk;
}

void write_pretty(std::ostream& out, const std::vector<pnt::TableRow>& rows) {
  int current = 0;
  for (const auto& row : rows) {
    if (row.table != current) {
      if (current != 0) out << '\n';
      current = row.table;
      std::ostringstream range;
      range << row.summary.lo << " <= n <= " << row.summary.hi;
      out << std::left << std::setw(20) << range.str() << std::right << std::setw(14) << "min" << std::setw(14)
          << "max" << '\n';
    }
    out << std::left << std::setw(20) << row.statistic << std::right << std::setw(14)
        << pnt::csv::fixed6(row.summary.min) << std::setw(14) << pnt::csv::fixed6(row.summary.max) << '\n';
  }
}

int cmd_tables(const RunConfig& cfg) {
  if (cfg.n_max < pnt::kTableRange) {
    if (!cfg.allow_partial) {
      throw UsageError("--n-max " + std::to_string(cfg.n_max) + " is below 100000; pass --allow-partial to proceed");
    }
    std::cerr << "warning: tables computed over n <= " << cfg.n_max << ", not the full 1 <= n <= 100000 range\n";
  }
  Sink sink(cfg.output_path);
  const auto table = obtain_table(cfg);
  const auto rows = pnt::reproduce_tables(pnt::error_series(table));
  auto& out = sink.out();
  if (cfg.pretty) {
    write_pretty(out, rows);
  } else {
    pnt::csv::row(out, "table", "statistic", "lo", "hi", "min", "argmin", "max", "argmax");
    for (const auto& r : rows) {
      pnt::csv::row(out, r.table, r.statistic, r.summary.lo, r.summary.hi, pnt::csv::fixed6(r.summary.min),
                    r.summary.argmin, pnt::csv::fixed6(r.summary.max), r.summary.argmax);
    }
  }
  sink.finish();
  return kExitOk;
}

int cmd_zerosum(const RunConfig& cfg) {
  if (!cfg.zeros_path) throw UsageError("zerosum needs --zeros PATH");
  Sink sink(cfg.output_path);
  const auto zeros = load_zero_file(*cfg.zeros_path);
  const auto res = pnt::zero_sum(zeros, cfg.x, cfg.T, cfg.k);
  auto& out = sink.out();
  pnt::csv::row(out, "x", "T", "k", "value", "count_used");
  pnt::csv::row(out, pnt::csv::exact(res.x), pnt::csv::exact(res.T), res.k, pnt::csv::exact(res.value), res.count_used);
  sink.finish();
  return kExitOk;
}

int cmd_perron(const RunConfig& cfg) {
  Sink sink(cfg.output_path);
  const auto res = pnt::perron_integral(cfg.a, cfg.b, cfg.T, cfg.k);
  auto& out = sink.out();
  pnt::csv::row(out, "a", "b", "T", "k", "numeric", "main_term", "bound", "gap", "ratio");
  pnt::csv::row(out, pnt::csv::exact(res.a), pnt::csv::exact(res.b), pnt::csv::exact(res.T), res.k,
                pnt::csv::exact(res.numeric.real()), pnt::csv::exact(res.main_term), pnt::csv::exact(res.bound),
                pnt::csv::exact(res.gap()), pnt::csv::exact(res.ratio()));
  sink.finish();
  if (res.gap() > 4.0 * res.bound + res.quadrature_error_estimate) {
    std::cerr << "error: gap exceeds 4 x bound\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_check(RunConfig cfg) {
  std::optional<pnt::LambdaTable> table;
  if (cfg.cache_path) {
    table = pnt::read_cache(*cfg.cache_path);
    if (table->n_max() < 10000) throw UsageError("check needs a cache with n_max >= 10000");
  } else {
    table = pnt::build_lambda_table(10000);
  }
  std::optional<pnt::ZeroSet> zeros;
  if (cfg.zeros_path) zeros = load_zero_file(*cfg.zeros_path);

  bool all = true;
  for (const auto& suite : pnt::cli::invariant_suites(*table, zeros)) {
    std::string failure;
    try {
      failure = suite.run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      std::cout << "PASS " << suite.name << '\n';
    } else {
      std::cout << "FAIL " << suite.name << ": " << failure << '\n';
      all = false;
    }
  }
  if (!zeros) std::cout << "SKIP zeros.*: no --zeros file given\n";
  return all ? kExitOk : kExitFailure;
}

int dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::sieve:
      return cmd_sieve(cfg);
    case Command::errors:
      return cmd_errors(cfg);
    case Command::tables:
      return cmd_tables(cfg);
    case Command::zerosum:
      return cmd_zerosum(cfg);
    case Command::perron:
      return cmd_perron(cfg);
    case Command::check:
      return cmd_check(cfg);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average error of the prime number theorem: sieve, averages, zero sums, Perron checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_n_max = [&cfg](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Sieve limit")->check(CLI::PositiveNumber);
  };
  const auto add_output = [&cfg](CLI::App* sub) { sub->add_option("--output", cfg.output_path, "Write CSV here"); };
  const auto add_cache = [&cfg](CLI::App* sub) {
    sub->add_option("--cache", cfg.cache_path, "Sieve cache file (PNT_CACHE_DIR sets a default directory)");
  };

  auto* sieve = app.add_subcommand("sieve", "Build the von Mangoldt table and print psi, theta, pi at n_max");
  add_n_max(sieve);
  add_cache(sieve);
  add_output(sieve);

  auto* errors = app.add_subcommand("errors", "Emit r (order 0) or the iterated average of the given order");
  add_n_max(errors);
  add_cache(errors);
  add_output(errors);
  errors->add_option("--order", cfg.orders, "Averaging order (repeatable)");
  errors->add_flag("--summary", cfg.summary, "Print min/max summaries instead of the series");

  auto* tables = app.add_subcommand("tables", "Reproduce the four min/max tables");
  add_n_max(tables);
  add_cache(tables);
  add_output(tables);
  tables->add_flag("--allow-partial", cfg.allow_partial, "Permit n_max below 100000");
  tables->add_flag("--pretty", cfg.pretty, "Aligned text instead of CSV");

  auto* zerosum = app.add_subcommand("zerosum", "Truncated sum over zeta zeros");
  zerosum->add_option("--zeros", cfg.zeros_path, "Zero ordinates, one per line")->required();
  zerosum->add_option("--x", cfg.x, "Point x > 1")->required();
  zerosum->add_option("--T", cfg.T, "Height cutoff")->required();
  zerosum->add_option("--k", cfg.k, "Kernel order");
  add_output(zerosum);

  auto* perron = app.add_subcommand("perron", "Truncated Perron kernel integral against its limit");
  perron->add_option("--a", cfg.a, "a > 0")->required();
  perron->add_option("--b", cfg.b, "Abscissa b > 0");
  perron->add_option("--T", cfg.T, "Half-height T > 0")->required();
  perron->add_option("--k", cfg.k, "Kernel order 1..6");
  add_output(perron);

  auto* check = app.add_subcommand("check", "Run the invariant suites at reduced scale");
  check->add_option("--zeros", cfg.zeros_path, "Zero ordinates for the zero-sum suites");
  add_cache(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (sieve->parsed()) cfg.command = Command::sieve;
  if (errors->parsed()) cfg.command = Command::errors;
  if (tables->parsed()) cfg.command = Command::tables;
  if (zerosum->parsed()) cfg.command = Command::zerosum;
  if (perron->parsed()) cfg.command = Command::perron;
  if (check->parsed()) cfg.command = Command::check;

  try {
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pnt::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
