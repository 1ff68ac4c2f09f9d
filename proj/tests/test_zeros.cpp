#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "pnt/explicit_formula.hpp"
#include "pnt/zeros.hpp"

namespace {

using boost::multiprecision::cpp_bin_float_50;

pnt::ZeroSet load_file(const std::string& name) {
  std::ifstream in(std::string(PNT_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing data file " + name);
  return pnt::load_zeros(in, name);
}

const pnt::ZeroSet& dataset() {
  static const pnt::ZeroSet zeros = load_file("zeros_2000.txt");
  return zeros;
}

// sum_{gamma <= T} 2 Re[x^rho / prod_{j=0..k} (rho + j)] in 50-digit arithmetic,
// complex products expanded by hand.
double zero_sum_oracle(const pnt::ZeroSet& zeros, double x, double T, int k) {
  const cpp_bin_float_50 lx = boost::multiprecision::log(cpp_bin_float_50(x));
  const cpp_bin_float_50 sx = boost::multiprecision::sqrt(cpp_bin_float_50(x));
  cpp_bin_float_50 total = 0;
  for (const double g : zeros.gammas()) {
    if (g > T) break;
    const cpp_bin_float_50 gamma = g;
    cpp_bin_float_50 num_re = sx * boost::multiprecision::cos(gamma * lx);
    cpp_bin_float_50 num_im = sx * boost::multiprecision::sin(gamma * lx);
    cpp_bin_float_50 den_re = 1;
    cpp_bin_float_50 den_im = 0;
    for (int j = 0; j <= k; ++j) {
      const cpp_bin_float_50 re = cpp_bin_float_50(0.5) + j;
      const cpp_bin_float_50 nr = den_re * re - den_im * gamma;
      const cpp_bin_float_50 ni = den_re * gamma + den_im * re;
      den_re = nr;
      den_im = ni;
    }
    const cpp_bin_float_50 mod2 = den_re * den_re + den_im * den_im;
    total += 2 * (num_re * den_re + num_im * den_im) / mod2;
  }
  return static_cast<double>(total);
}

TEST(LoadZeros, ParsesAndSkipsComments) {
  std::istringstream in("# header\n14.134725142\n\n21.022039639\n");
  const auto z = pnt::load_zeros(in);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_DOUBLE_EQ(z.gammas()[0], 14.134725142);
  EXPECT_DOUBLE_EQ(z.gammas()[1], 21.022039639);
}

TEST(LoadZeros, EmptyStreamGivesEmptySet) {
  std::istringstream in("");
  const auto z = pnt::load_zeros(in);
  EXPECT_TRUE(z.empty());
  EXPECT_EQ(pnt::zero_sum(z, 100.0, 1e6, 1).value, 0.0);
  EXPECT_EQ(pnt::lambda_factor(z, 100.0, 50.0, 2), 0.0);
}

TEST(LoadZeros, RejectsDisorderAndJunk) {
  std::istringstream disorder("21.0\n14.1\n");
  EXPECT_THROW(pnt::load_zeros(disorder), pnt::format_error);
  std::istringstream repeat("21.0\n21.0\n");
  EXPECT_THROW(pnt::load_zeros(repeat), pnt::format_error);
  std::istringstream junk("14.13\nabc\n");
  EXPECT_THROW(pnt::load_zeros(junk), pnt::parse_error);
  std::istringstream trailing("14.13 x\n");
  EXPECT_THROW(pnt::load_zeros(trailing), pnt::parse_error);
  std::istringstream too_small("3.0\n");
  EXPECT_THROW(pnt::load_zeros(too_small), pnt::format_error);
}

TEST(Dataset, LooksLikeZetaZeros) {
  const auto& z = dataset();
  ASSERT_EQ(z.size(), 2000u);
  EXPECT_NEAR(z.gammas()[0], 14.134725141734693, 1e-12);
  EXPECT_NEAR(z.gammas()[1], 21.022039638771555, 1e-12);
  // Riemann-von Mangoldt: N(T) ~ (T/2pi) log(T/2pi e) + 7/8
  const double T = z.gammas().back();
  const double tp = T / (2.0 * M_PI);
  EXPECT_NEAR(static_cast<double>(z.size()), tp * std::log(tp / M_E) + 7.0 / 8.0, 3.0);
}

TEST(ZeroSum, MatchesHighPrecisionOracle) {
  const auto& z = dataset();
  for (int k = 1; k <= 3; ++k) {
    for (const double x : {2.5, 1e4, 99991.0}) {
      for (const double T : {100.0, 500.0, 2500.0}) {
        const auto res = pnt::zero_sum(z, x, T, k);
        const double oracle = zero_sum_oracle(z, x, T, k);
        EXPECT_NEAR(res.value, oracle, 1e-12 * (1.0 + std::sqrt(x))) << "k=" << k << " x=" << x << " T=" << T;
        EXPECT_LE(std::abs(res.value), res.abs_bound + 1e-15);
        EXPECT_EQ(res.count_used, z.count_up_to(T));
      }
    }
  }
  const auto one = pnt::zero_sum(z, 1e4, 100.0, 1);
  EXPECT_EQ(one.count_used, 29u);
}

TEST(ZeroSum, ConjugatePairingAgreesWithSeparateTerms) {
  const auto& z = dataset();
  for (const double x : {10.0, 5000.0, 1e5}) {
    for (int k = 1; k <= 3; ++k) {
      std::complex<double> separate{};
      for (const double g : z.gammas()) {
        for (const double sign : {1.0, -1.0}) {
          const std::complex<double> rho(0.5, sign * g);
          std::complex<double> den = rho;
          for (int j = 1; j <= k; ++j) den *= rho + static_cast<double>(j);
          separate += std::exp(rho * std::log(x)) / den;
        }
      }
      const auto paired = pnt::zero_sum(z, x, z.gammas().back(), k).value;
      EXPECT_NEAR(paired, separate.real(), 1e-12 * (1.0 + std::sqrt(x)));
      EXPECT_NEAR(separate.imag(), 0.0, 1e-12 * (1.0 + std::sqrt(x)));
    }
  }
}

TEST(ZeroSum, AdditiveOverDisjointRanges) {
  const auto& z = dataset();
  const double T1 = 700.0;
  const double T2 = 2400.0;
  const auto low = pnt::zero_sum(z, 31337.0, T1, 2).value;
  const auto all = pnt::zero_sum(z, 31337.0, T2, 2).value;
  std::vector<double> upper;
  for (const double g : z.gammas()) {
    if (g > T1 && g <= T2) upper.push_back(g);
  }
  const pnt::ZeroSet band(upper, "band");
  const auto mid = pnt::zero_sum(band, 31337.0, band.gammas().back(), 2).value;
  EXPECT_NEAR(low + mid, all, 1e-12);
}

TEST(ZeroSum, TermwiseBounds) {
  const auto& z = dataset();
  for (const double T : {50.0, 400.0, 2000.0}) {
    double paired_inv_gamma_sq = 0.0;
    double paired_inv_rho = 0.0;
    double paired_inv_gamma4 = 0.0;
    for (const double g : z.gammas()) {
      if (g > T) break;
      paired_inv_gamma_sq += 2.0 / (g * g);
      paired_inv_rho += 2.0 / (std::abs(std::complex<double>(0.5, g)) * std::abs(std::complex<double>(1.5, g)));
      paired_inv_gamma4 += 2.0 / std::pow(g, 4);
    }
    for (const double x : {100.0, 12345.0}) {
      EXPECT_LE(std::abs(pnt::zero_sum(z, x, T, 1).value), std::sqrt(x) * paired_inv_gamma_sq + 1e-12);
      EXPECT_LE(std::abs(pnt::lambda_factor(z, x, T, 1)), paired_inv_rho + 1e-15);
      EXPECT_LE(std::abs(pnt::lambda_factor(z, x, T, 3)), paired_inv_gamma4 + 1e-15);
    }
  }
}

TEST(ZeroSum, Errors) {
  const auto& z = dataset();
  EXPECT_THROW(pnt::zero_sum(z, 1.0, 100.0, 1), pnt::invalid_argument);
  EXPECT_THROW(pnt::zero_sum(z, 10.0, 100.0, 0), pnt::invalid_argument);
  EXPECT_THROW(pnt::zero_sum(z, 10.0, 1e5, 1), pnt::out_of_data_error);
  EXPECT_THROW(pnt::lambda_factor(z, 10.0, 100.0, 4), pnt::invalid_argument);
}

TEST(GammaSquareTail, ValuesAndMonotonicity) {
  const auto& z = dataset();
  EXPECT_EQ(pnt::gamma_square_tail(z, 0.0), 0.0);
  EXPECT_NEAR(pnt::gamma_square_tail(z, 15.0), 2.0 / (14.134725141734693 * 14.134725141734693), 1e-15);
  EXPECT_NEAR(pnt::gamma_square_tail(z, 15.0), 0.0100105, 1e-7);
  double prev = 0.0;
  for (double T = 0.0; T <= z.gammas().back(); T += 25.0) {
    const double v = pnt::gamma_square_tail(z, T);
    ASSERT_GE(v, prev);
    prev = v;
  }
  EXPECT_LE(pnt::gamma_square_tail(z, 100.0), pnt::gamma_square_tail(z, 1000.0));
  // The full sum over all zeros is about 0.0462; the partial sums stay below it.
  EXPECT_LT(prev, 0.0462);
}

TEST(ExplicitFormula, ResidualBehaviour) {
  const auto table = pnt::build_lambda_table(10000);
  const auto series = pnt::error_series(table);
  const auto avg = pnt::iterated_average(series, 1);
  const auto& z = dataset();
  EXPECT_EQ(pnt::explicit_formula_residual(avg, z, 5000, 10.0), avg[5000]);
  EXPECT_THROW(pnt::explicit_formula_residual(avg, z, 1, 100.0), pnt::invalid_argument);
  const auto avg2 = pnt::iterated_average(series, 2);
  EXPECT_THROW(pnt::explicit_formula_residual(avg2, z, 100, 100.0), pnt::invalid_argument);

  // The oscillation around the constant term shrinks as zeros are added.
  const auto spread = [&](double T) {
    std::vector<double> v;
    for (std::size_t x = 4000; x <= 6000; x += 20) v.push_back(pnt::explicit_formula_residual(avg, z, x, T));
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double ss = 0.0;
    for (const double r : v) ss += (r - mean) * (r - mean);
    return std::sqrt(ss / static_cast<double>(v.size()));
  };
  EXPECT_LT(spread(2000.0), spread(100.0));
}

}  // namespace
