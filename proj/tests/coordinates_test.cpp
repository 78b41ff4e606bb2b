#include "cotcoord/coordinates.hpp"
#include "cotcoord/arith.hpp"
#include "cotcoord/cotangent.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace cotcoord;

namespace {

// y(chi | a) in floating point straight from the definition:
// sum_k conj(chi)(k) sigma_k(a) / tau(conj(chi)_f), every piece evaluated numerically.
std::complex<double> float_coordinate(const DirichletCharacter& chi, const CycElem& a) {
  long n = chi.modulus();
  std::complex<double> sum = 0;
  auto chi_bar = chi.conj();
  for (long k = 1; k <= n; ++k) {
    auto t = chi_bar.value_exponent(k);
    if (!t) continue;
    std::complex<double> sigma = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
      sigma += a.coeffs()[i].get_d() * cotcoord::testing::zeta(n, static_cast<long>(i) * k);
    sum += cotcoord::testing::zeta(chi.order(), *t) * sigma;
  }
  auto prim = primitive_part(chi_bar);
  long f = prim.modulus();
  std::complex<double> tau = 0;
  for (long k = 1; k <= f; ++k)
    if (auto t = prim.value_exponent(k)) tau += cotcoord::testing::zeta(prim.order(), *t) * cotcoord::testing::zeta(f, k);
  return sum / tau;
}

}  // namespace

TEST(CoordDefinitional, Examples) {
  for (long n : {2L, 6L, 12L, 13L}) {
    auto chars = enumerate(n);
    EXPECT_EQ(coord_definitional(chars[0], CycElem::one(n)), CycElem::rational(1, euler_phi(n)));
    for (std::size_t i = 1; i < chars.size(); ++i) EXPECT_TRUE(coord_definitional(chars[i], CycElem::one(n)).is_zero());
  }
  EXPECT_EQ(coord_definitional(character(4, 1), icot_value(4)), CycElem::one(2));
  EXPECT_THROW(coord_definitional(character(4, 1), CycElem::one(5)), std::invalid_argument);
}

TEST(CoordDefinitional, MatchesFloatingDefinition) {
  std::mt19937 rng(17);
  for (long n = 3; n <= 16; ++n) {
    CycElem a = cotcoord::testing::random_elem(n, rng, 5);
    for (const auto& chi : enumerate(n)) {
      CycElem y = coord_definitional(chi, a);
      EXPECT_EQ(y.order(), chi.order());
      auto want = float_coordinate(chi, a);
      EXPECT_LT(std::abs(std::complex<double>(complex_eval(y)) - want), 1e-8) << n << " " << chi.index();
    }
  }
}

TEST(CoordDefinitional, LinearAndGaloisEquivariant) {
  std::mt19937 rng(23);
  for (long n = 3; n <= 20; ++n) {
    CycElem a = cotcoord::testing::random_elem(n, rng), b = cotcoord::testing::random_elem(n, rng);
    for (const auto& chi : enumerate(n)) {
      EXPECT_EQ(coord_definitional(chi, add(a, b)), add(coord_definitional(chi, a), coord_definitional(chi, b)));
      CycElem ya = coord_definitional(chi, a);
      for (long k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        EXPECT_EQ(coord_definitional(chi, galois(a, k)), mul(eval(chi, k), ya)) << n << " " << chi.index() << " " << k;
      }
    }
  }
}

TEST(CoordDefinitional, ParityVanishing) {
  for (long n = 3; n <= 20; ++n)
    for (const auto& chi : enumerate(n)) {
      if (parity(chi) == -1) {
        EXPECT_TRUE(coord_definitional(chi, CycElem::one(n)).is_zero());
        EXPECT_TRUE(coord_definitional(chi, icot_power(2, n)).is_zero());
      } else {
        EXPECT_TRUE(coord_definitional(chi, icot_value(n)).is_zero());
      }
    }
}

TEST(CoordCotangentClosed, Examples) {
  EXPECT_EQ(coord_cotangent_closed(character(4, 1), 1), CycElem::one(2));
  EXPECT_TRUE(coord_cotangent_closed(character(4, 1), 2).is_zero());
  EXPECT_TRUE(coord_cotangent_closed(character(5, 0), 1).is_zero());
  auto chars5 = enumerate(5);
  for (const auto& chi : chars5)
    if (chi.order() == 2) EXPECT_EQ(coord_cotangent_closed(chi, 2), coord_definitional(chi, cotangent_number(2, 5)));
  // conductor 4 inside mod 12: Euler factors at 2 and 3
  for (const auto& chi : enumerate(12))
    for (long j = 1; j <= 4; ++j) EXPECT_EQ(coord_cotangent_closed(chi, j), coord_definitional(chi, cotangent_number(j, 12)));
}

TEST(CoordOne, Examples) {
  EXPECT_EQ(coord_one(enumerate(6)[0]), CycElem::rational(1, 2));
  EXPECT_EQ(coord_one(enumerate(4)[0]), CycElem::rational(1, 2));
  for (const auto& chi : enumerate(7))
    if (!chi.is_principal()) EXPECT_TRUE(coord_one(chi).is_zero());
}

TEST(CoordPowerClosed, Examples) {
  EXPECT_EQ(coord_power_closed(character(4, 1), 1), CycElem::one(2));
  EXPECT_EQ(coord_power_closed(character(4, 0), 2), CycElem::rational(1, -2));
  EXPECT_EQ(coord_definitional(character(4, 0), icot_power(2, 4)), CycElem::rational(1, -2));
  EXPECT_TRUE(coord_power_closed(character(4, 1), 2).is_zero());
  for (const auto& chi : enumerate(5))
    EXPECT_EQ(coord_power_closed(chi, 3), coord_definitional(chi, icot_power(3, 5)));
}

TEST(CoordPowerEq42, Examples) {
  EXPECT_EQ(coord_power_eq42(character(4, 1), 1), CycElem::one(2));
  EXPECT_EQ(coord_power_eq42(character(4, 1), 3), coord_definitional(character(4, 1), icot_power(3, 4)));
  EXPECT_TRUE(coord_power_eq42(character(4, 1), 2).is_zero());
  for (const auto& chi : enumerate(7))
    if (chi.order() == 6) EXPECT_EQ(coord_power_eq42(chi, 3), coord_definitional(chi, icot_power(3, 7)));
  EXPECT_THROW(coord_power_eq42(character(12, 1), 1), std::invalid_argument);
}

TEST(Reconstruct, Examples) {
  for (long n : {3L, 4L, 10L}) {
    auto coords = all_coordinates(CycElem::one(n));
    EXPECT_EQ(reconstruct(coords, n), CycElem::one(n));
  }
  EXPECT_EQ(reconstruct(all_coordinates(icot_value(4)), 4), CycElem::root_of_unity(4, 1));
  EXPECT_EQ(reconstruct(all_coordinates(icot_power(2, 5)), 5), icot_power(2, 5));
  std::vector<CycElem> too_few(3, CycElem::zero(1));
  EXPECT_THROW(reconstruct(too_few, 5), std::invalid_argument);
}

TEST(Reconstruct, RandomCombinationsOfCotangentPowers) {
  std::mt19937 rng(31);
  for (long n = 2; n <= 20; ++n) {
    CycElem a = CycElem::zero(n);
    for (long r = 0; r <= 4; ++r) a = add(a, mul(CycElem::rational(n, cotcoord::testing::random_rat(rng)), icot_power(r, n)));
    EXPECT_EQ(reconstruct(all_coordinates(a), n), a) << n;
  }
}

TEST(DirectSumFloat, Examples) {
  for (long r = 1; r <= 4; ++r) EXPECT_LT(std::abs(direct_sum_float(enumerate(2)[0], r, 2)), 1e-15L);
  for (const auto& chi : enumerate(13))
    if (parity(chi) == 1) EXPECT_LT(std::abs(direct_sum_float(chi, 3, 13)), 1e-9L);
  // sum over k in {1, 3} of (i cot(pi k / 4))^2 = -2
  auto v = direct_sum_float(enumerate(4)[0], 2, 4);
  EXPECT_NEAR(static_cast<double>(v.real()), -2.0, 1e-12);
}

TEST(Method, ParseAndName) {
  EXPECT_EQ(parse_method("def"), Method::definitional);
  EXPECT_EQ(parse_method("t1"), Method::theorem1);
  EXPECT_EQ(parse_method("eq42"), Method::eq42);
  EXPECT_EQ(parse_method("c28"), Method::closed_28);
  EXPECT_EQ(parse_method(to_string(Method::coord_one)), Method::coord_one);
  EXPECT_THROW(parse_method("nope"), std::invalid_argument);
}
