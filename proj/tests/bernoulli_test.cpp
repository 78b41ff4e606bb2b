#include "cotcoord/bernoulli.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cotcoord;

namespace {

// Akiyama-Tanigawa; yields the B_1 = +1/2 convention.
std::vector<Rat> akiyama_tanigawa(long count) {
  std::vector<Rat> out, a(count + 1);
  for (long m = 0; m <= count; ++m) {
    a[m] = frac(1, m + 1);
    for (long j = m; j >= 1; --j) a[j - 1] = Rat(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

DirichletCharacter odd_quadratic(long f) {
  for (const auto& chi : enumerate(f))
    if (chi.order() == 2 && is_primitive(chi) && parity(chi) == -1) return chi;
  throw std::logic_error("no odd quadratic character");
}

}  // namespace

TEST(BernoulliNumber, Examples) {
  EXPECT_EQ(bernoulli_number(0), Rat(1));
  EXPECT_EQ(bernoulli_number(1), Rat(-1, 2));
  EXPECT_EQ(bernoulli_number(2), Rat(1, 6));
  EXPECT_EQ(bernoulli_number(12), Rat(-691, 2730));
  for (long m = 3; m <= 41; m += 2) EXPECT_EQ(bernoulli_number(m), Rat(0));
}

TEST(BernoulliNumber, MatchesAkiyamaTanigawa) {
  auto ref = akiyama_tanigawa(60);
  for (long m = 0; m <= 60; ++m) {
    Rat want = m == 1 ? Rat(-1, 2) : ref[m];
    EXPECT_EQ(bernoulli_number(m), want) << m;
  }
  EXPECT_THROW(bernoulli_number(-1), std::invalid_argument);
}

TEST(BernoulliPolynomial, Examples) {
  EXPECT_EQ(bernoulli_polynomial(0).coeffs, std::vector<Rat>{Rat(1)});
  EXPECT_EQ(bernoulli_polynomial(1).coeffs, (std::vector<Rat>{Rat(-1, 2), Rat(1)}));
  EXPECT_EQ(bernoulli_polynomial(2).coeffs, (std::vector<Rat>{Rat(1, 6), Rat(-1), Rat(1)}));
}

TEST(BernoulliPolynomial, Identities) {
  for (long r = 0; r <= 20; ++r) {
    auto b = bernoulli_polynomial(r);
    EXPECT_EQ(b.degree, r);
    EXPECT_EQ(b(Rat(0)), bernoulli_number(r));
    if (r >= 2) EXPECT_EQ(b(Rat(1)) - b(Rat(0)), Rat(0)) << r;
    if (r >= 1) {
      auto d = b.derivative();
      auto prev = bernoulli_polynomial(r - 1);
      ASSERT_EQ(d.coeffs.size(), prev.coeffs.size());
      for (std::size_t i = 0; i < d.coeffs.size(); ++i) EXPECT_EQ(d.coeffs[i], Rat(r) * prev.coeffs[i]);
    }
    // B_r(x + 1) - B_r(x) = r x^(r-1), sampled
    for (long num = -3; num <= 3; ++num) {
      Rat x = frac(num, 3);
      Rat want = r == 0 ? Rat(0) : Rat(r) * pow(x, r - 1);
      EXPECT_EQ(b(x + 1) - b(x), want);
    }
  }
}

TEST(GeneralizedBernoulli, Examples) {
  EXPECT_EQ(generalized_bernoulli(1, character(4, 1)), CycElem::rational(2, Rat(-1, 2)));
  EXPECT_EQ(generalized_bernoulli(1, CharacterGroup::of(1)->character(0)), CycElem::rational(1, Rat(1, 2)));
  EXPECT_THROW(generalized_bernoulli(1, character(12, 1)), std::invalid_argument);
}

TEST(GeneralizedBernoulli, ClassNumbers) {
  // B_{1, chi_D} = -2 h(D) / w(D) for the odd quadratic character of conductor |D|.
  struct Row {
    long f, h, w;
  };
  for (auto [f, h, w] : std::vector<Row>{{3, 1, 6}, {4, 1, 4}, {7, 1, 2}, {8, 1, 2}, {11, 1, 2}, {23, 3, 2}, {31, 3, 2}}) {
    CycElem b = generalized_bernoulli(1, odd_quadratic(f));
    EXPECT_EQ(b.as_rational(), frac(-2 * h, w)) << f;
  }
}

TEST(GeneralizedBernoulli, RealQuadraticFieldFive) {
  // zeta_{Q(sqrt 5)}(-1) = zeta(-1) L(-1, chi_5) = 1/30 gives B_{2,chi_5} = 4/5.
  auto chars = enumerate(5);
  auto it = std::find_if(chars.begin(), chars.end(), [](const auto& c) { return c.order() == 2; });
  EXPECT_EQ(generalized_bernoulli(2, *it).as_rational(), Rat(4, 5));
}

TEST(GeneralizedBernoulli, FirstMomentFormula) {
  // B_{1,chi} = (1/f) sum_a chi(a) a for nonprincipal primitive chi.
  for (long f = 3; f <= 25; ++f)
    for (const auto& chi : enumerate(f)) {
      if (!is_primitive(chi)) continue;
      CycElem want = CycElem::zero(chi.order());
      for (long a = 1; a < f; ++a) want += eval(chi, a) * frac(a, f);
      EXPECT_EQ(generalized_bernoulli(1, chi), want) << f << " " << chi.index();
    }
}

TEST(GeneralizedBernoulli, ParityVanishingAndConjugation) {
  for (long f = 3; f <= 20; ++f)
    for (const auto& chi : enumerate(f)) {
      if (!is_primitive(chi)) continue;
      for (long r = 1; r <= 6; ++r) {
        CycElem b = generalized_bernoulli(r, chi);
        if (parity(chi) != (r % 2 == 0 ? 1 : -1)) EXPECT_TRUE(b.is_zero()) << f << " " << chi.index() << " " << r;
        EXPECT_EQ(conjugate(b), generalized_bernoulli(r, chi.conj()));
      }
    }
}
