#include <gtest/gtest.h>

#include <random>

#include "brauer/central.hpp"

using namespace brauer;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

// The defining product, evaluated term by term without any cancellation.
Rational literal_central_character(const Partition& lambda, const Rational& delta, const Rational& u) {
  Rational value = (Rational(1, 2) - u) * (Rational(1, 2) + u);
  for (const Box& b : boxes(lambda)) {
    const Rational x = (delta - 1) / 2 + b.content();
    const Rational plus = u + x, minus = u - x;
    value *= (plus * plus - 1) / (minus * minus - 1) * (minus * minus) / (plus * plus);
  }
  return value;
}

OmegaVector omega_sum(OmegaVector a, const OmegaVector& b, std::int64_t sign) {
  for (auto [k, v] : b) a[k] += sign * v;
  return a;
}

}  // namespace

TEST(GammaFactor, Examples) {
  EXPECT_TRUE(gamma_factor(0).is_constant());
  EXPECT_EQ(gamma_factor(0).constant(), 1);

  FactoredRational half;
  half.multiply_factor(Rational(-3, 2), 1);
  half.multiply_factor(Rational(1, 2), 3);
  half.multiply_factor(Rational(3, 2), -1);
  half.multiply_factor(Rational(-1, 2), -3);
  EXPECT_EQ(gamma_factor(Rational(1, 2)), half);

  FactoredRational one;
  one.multiply_factor(-2, 1);
  one.multiply_factor(1, 2);
  one.multiply_factor(2, -1);
  one.multiply_factor(-1, -2);
  EXPECT_EQ(gamma_factor(1), one);
}

TEST(GammaFactor, NegatedArgumentIsInverse) {
  for (int num = -9; num <= 9; ++num) {
    const Rational c(num, 2);
    EXPECT_EQ(gamma_factor(c) * gamma_factor(-c), FactoredRational());
  }
}

TEST(CentralCharacter, Examples) {
  EXPECT_EQ(central_character(Partition{}, Rational(7, 3)).str(), "-(u-1/2)(u+1/2)");
  EXPECT_EQ(central_character(Partition{2, 2}, 1).str(), "-(u-1/2)(u+1/2)");
  EXPECT_EQ(central_character(Partition{1}, 2).str(), "-(u-1/2)^4(u+3/2)/((u-3/2)(u+1/2)^2)");
}

TEST(CentralCharacter, RenderingOfConstantsAndRootZero) {
  FactoredRational f(Rational(3, 2));
  f.multiply_factor(0, 2);
  f.multiply_factor(1, -1);
  EXPECT_EQ(f.str(), "(3/2)u^2/(u-1)");
  EXPECT_EQ(FactoredRational(Rational(-4)).str(), "-4");
  EXPECT_EQ(FactoredRational().str(), "1");
}

TEST(CentralCharacter, EvaluationRejectsRoots) {
  EXPECT_THROW(central_character(Partition{}, 1).evaluate(Rational(1, 2)), std::domain_error);
}

TEST(CentrallyEquivalent, Examples) {
  EXPECT_TRUE(centrally_equivalent(Partition{2, 2}, Partition{2, 1}, 1));
  EXPECT_TRUE(centrally_equivalent(Partition{3, 1}, Partition{3, 1}, Rational(5, 7)));
  EXPECT_FALSE(centrally_equivalent(Partition{1}, Partition{}, 2));
}

TEST(CentralProperties, FactoredFormMatchesLiteralProduct) {
  std::mt19937 rng(4242);
  // denominators coprime to 2 keep the points away from every half-integer root
  std::uniform_int_distribution<int> num(-400, 400);
  const int denominators[] = {97, 101, 103, 107, 109, 113, 127};
  for (std::int64_t delta = -3; delta <= 5; ++delta)
    for (const auto& lambda : enumerate_partitions(8)) {
      const FactoredRational f = central_character(lambda, delta);
      for (int den : denominators) {
        int n = num(rng);
        if (n % den == 0) ++n;
        const Rational u(n, den);
        ASSERT_EQ(f.evaluate(u), literal_central_character(lambda, delta, u)) << lambda << " delta=" << delta;
      }
    }
}

TEST(CentralProperties, FactoredFormMatchesLiteralProductAtRationalDelta) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-300, 300);
  for (const Rational& delta : {Rational(1, 3), Rational(-7, 5), Rational(7, 2)})
    for (const auto& lambda : enumerate_partitions(5))
      for (int k = 0; k < 7; ++k) {
        int n = num(rng);
        if (n == 0) n = 1;
        const Rational u(n, 1009);
        EXPECT_EQ(central_character(lambda, delta).evaluate(u), literal_central_character(lambda, delta, u));
      }
}

TEST(WeightOfRational, Examples) {
  EXPECT_TRUE(weight_of_rational(FactoredRational(Rational(5))).empty());
  auto w = weight_of_rational(gamma_factor(Rational(1, 2)));
  EXPECT_EQ(w, (std::map<Rational, std::int64_t>{
                   {Rational(-3, 2), 1}, {Rational(1, 2), 3}, {Rational(3, 2), -1}, {Rational(-1, 2), -3}}));
}

TEST(WeightOfRational, GammaWeightIsAlphaDifference) {
  for (std::int64_t t = -9; t <= 9; ++t) {
    const HalfInt a = h(t);
    const OmegaVector expected = omega_sum(alpha_in_omega(a), alpha_in_omega(-a), -1);
    EXPECT_EQ(weight_of_rational(gamma_factor(to_rational(a))), omega_as_rational_map(expected)) << "a=" << a;
  }
}

TEST(OSeries, Examples) {
  auto o1 = o_series(1, 5);
  EXPECT_EQ(o1.coefficients(), (std::map<int, Rational>{{1, 1}, {0, Rational(1, 2)}}));
  auto o3 = o_series(3, 3);
  EXPECT_EQ(o3.coefficients(), (std::map<int, Rational>{{1, 1}, {0, Rational(5, 2)}, {-1, 3}, {-2, 3}, {-3, 3}}));
  for (int delta = -4; delta <= 4; ++delta) EXPECT_EQ(o_series(delta, 2).coefficient(0), Rational(delta) - Rational(1, 2));
  EXPECT_THROW(o_series(1, -1), std::invalid_argument);
  EXPECT_THROW(o3.coefficient(-4), std::out_of_range);
}

TEST(TruncatedLaurent, ProductKeepsOnlyExactDegrees) {
  TruncatedLaurent a(-2), b(-2);
  a.add(1, 1);
  a.add(-2, 5);
  b.add(0, 1);
  b.add(-1, 2);
  auto p = a * b;
  // known down to max(-2 + 0, -2 + 1) = -1
  EXPECT_EQ(p.lowest(), -1);
  EXPECT_EQ(p.coefficient(1), 1);
  EXPECT_EQ(p.coefficient(0), 2);
  EXPECT_EQ(p.coefficient(-1), 0);
}

TEST(CheckLemmaO, Examples) {
  EXPECT_TRUE(check_lemma_o(brauer_gammas(3, 21), 20));
  EXPECT_TRUE(check_lemma_o(brauer_gammas(1, 21), 20));
  auto bad = brauer_gammas(3, 21);
  bad[1] = 0;
  EXPECT_FALSE(check_lemma_o(bad, 20));
  EXPECT_THROW(check_lemma_o(brauer_gammas(3, 5), 20), std::invalid_argument);
}

TEST(CheckAdmissible, Examples) {
  EXPECT_TRUE(check_admissible(brauer_gammas(3, 20), 19));
  std::vector<Rational> planted{3, 1};
  EXPECT_FALSE(check_admissible(planted, 1));
  EXPECT_TRUE(check_admissible(std::vector<Rational>(10, Rational(0)), 9));
  EXPECT_THROW(check_admissible(planted, 5), std::invalid_argument);
}

TEST(SeriesProperties, BrauerGammasSatisfyBothIdentities) {
  for (int delta = -5; delta <= 6; ++delta) {
    const auto gammas = brauer_gammas(delta, 25);
    EXPECT_TRUE(check_lemma_o(gammas, 24)) << "delta=" << delta;
    EXPECT_TRUE(check_admissible(gammas, 24)) << "delta=" << delta;
  }
  for (const Rational& delta : {Rational(1, 2), Rational(-7, 3)}) {
    const auto gammas = brauer_gammas(delta, 17);
    EXPECT_TRUE(check_lemma_o(gammas, 16));
    EXPECT_TRUE(check_admissible(gammas, 16));
  }
}

TEST(SeriesProperties, EveryLowCoefficientPerturbationIsCaught) {
  for (int delta = -5; delta <= 6; ++delta)
    for (int a = 0; a < 12; ++a) {  // gamma_K only reaches degrees below the exact range when K is even
      auto gammas = brauer_gammas(delta, 13);
      // +1 on gamma_0 at delta = 0 is exactly the delta = 1 family
      gammas[static_cast<std::size_t>(a)] += Rational(1, 3);
      EXPECT_FALSE(check_lemma_o(gammas, 12)) << "delta=" << delta << " a=" << a;
    }
}

TEST(CentralProperties, BarWeightClassesAreCentral) {
  auto all = enumerate_partitions(7);
  for (std::int64_t delta = -3; delta <= 5; ++delta) {
    std::vector<FactoredRational> chars;
    std::vector<SymWeight> weights;
    for (const auto& lambda : all) {
      chars.push_back(central_character(lambda, delta));
      weights.push_back(bar_weight(lambda, delta));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool same_weight = weights[i] == weights[j];
        const bool central = chars[i] == chars[j];
        if (same_weight) EXPECT_TRUE(central) << all[i] << " " << all[j] << " delta=" << delta;
        if (delta % 2 == 0 && central) EXPECT_TRUE(same_weight) << all[i] << " " << all[j] << " delta=" << delta;
      }
  }
}
