#include "cotcoord/cotangent.hpp"
#include "cotcoord/arith.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace cotcoord;

namespace {

constexpr double kPi = std::numbers::pi;

// d^l/dx^l cot x = (-1)^l l! sum_k (x - k pi)^-(l+1), l >= 1, truncated symmetrically.
double cot_derivative_partial_fractions(long l, double x) {
  long double sum = 0;
  for (long k = -200000; k <= 200000; ++k) sum += std::pow(static_cast<long double>(x) - k * kPi, -(l + 1));
  double fact = std::tgamma(static_cast<double>(l) + 1);
  return static_cast<double>((l % 2 == 0 ? 1 : -1) * fact * sum);
}

// i^j as a complex number.
std::complex<double> ipow(long j) {
  static const std::complex<double> table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[j % 4];
}

// Rank of rational row vectors by Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rat>> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(IcotValue, Examples) {
  EXPECT_TRUE(icot_value(2).is_zero());
  EXPECT_EQ(icot_value(4), CycElem::root_of_unity(4, 1));
  auto v = complex_eval(icot_value(3));
  EXPECT_NEAR(static_cast<double>(v.imag()), 1 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(v.real()), 0.0, 1e-12);
  EXPECT_THROW(icot_value(1), std::invalid_argument);
  EXPECT_THROW(icot_value(6, 2), std::invalid_argument);
}

TEST(IcotValue, MatchesFloatingCotangent) {
  for (long n = 3; n <= 40; ++n)
    for (long k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      auto v = complex_eval(icot_value(n, k));
      EXPECT_NEAR(static_cast<double>(v.imag()), 1 / std::tan(kPi * k / n), 1e-9);
      EXPECT_NEAR(static_cast<double>(v.real()), 0.0, 1e-9);
    }
}

TEST(IcotValue, GaloisActionAndConjugation) {
  for (long n = 2; n <= 30; ++n) {
    CycElem base = icot_value(n, 1);
    EXPECT_EQ(conjugate(base), neg(base));
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1) EXPECT_EQ(galois(base, k), icot_value(n, k)) << n << " " << k;
  }
}

TEST(IcotPower, Examples) {
  EXPECT_EQ(icot_power(2, 4), CycElem::rational(4, -1));
  for (long r = 1; r <= 5; ++r) EXPECT_TRUE(icot_power(r, 2).is_zero());
  EXPECT_EQ(icot_power(1, 4), CycElem::root_of_unity(4, 1));
  EXPECT_EQ(icot_power(0, 7), CycElem::one(7));
  EXPECT_THROW(icot_power(-1, 5), std::invalid_argument);
}

TEST(IcotPower, LinearlyIndependentForPrimes) {
  // The minimal polynomial of i cot(pi/p) has degree p - 1, so its powers
  // 0..p-2 are independent over Q.
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    std::vector<std::vector<Rat>> rows;
    for (long j = 0; j <= p - 2; ++j) rows.push_back(icot_power(j, p).coeffs());
    EXPECT_EQ(rank(rows), static_cast<std::size_t>(p - 1)) << p;
  }
}

TEST(CotDerivPoly, Examples) {
  EXPECT_EQ(cot_derivative_poly(0).coeffs, (std::vector<Rat>{Rat(0), Rat(1)}));
  EXPECT_EQ(cot_derivative_poly(1).coeffs, (std::vector<Rat>{Rat(-1), Rat(0), Rat(-1)}));
  EXPECT_EQ(cot_derivative_poly(2).coeffs, (std::vector<Rat>{Rat(0), Rat(2), Rat(0), Rat(2)}));
  EXPECT_THROW(cot_derivative_poly(-1), std::invalid_argument);
}

TEST(CotangentNumber, Examples) {
  EXPECT_TRUE(cotangent_number(1, 2).is_zero());
  EXPECT_EQ(cotangent_number(2, 4), CycElem::rational(4, 2));
  EXPECT_EQ(cotangent_number(3, 4), mul(CycElem::rational(4, -4), CycElem::root_of_unity(4, 1)));
  EXPECT_EQ(cotangent_number(1, 9), icot_value(9));
  EXPECT_THROW(cotangent_number(0, 5), std::invalid_argument);
}

TEST(CotangentNumber, MatchesPartialFractions) {
  for (long n : {3L, 5L, 8L, 12L}) {
    for (long j = 2; j <= 5; ++j) {
      auto exact = std::complex<double>(complex_eval(cotangent_number(j, n)));
      auto numeric = ipow(j) * cot_derivative_partial_fractions(j - 1, kPi / n);
      EXPECT_LT(std::abs(exact - numeric), 1e-5 * std::max(1.0, std::abs(numeric))) << n << " " << j;
    }
  }
}
