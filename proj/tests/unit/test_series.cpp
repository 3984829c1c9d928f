#include <gtest/gtest.h>

#include <random>

#include "kmforms/errors.hpp"
#include "kmforms/series.hpp"

using namespace kmforms;

namespace {

SeriesLayout layout2(std::int64_t bound) {
  return SeriesLayout::make(2, std::array<std::int64_t, 2>{1, 1}, std::array<std::int64_t, 2>{2, 1},
                            bound);
}

SeriesLayout layout1(std::int64_t bound) {
  return SeriesLayout::make(1, std::array<std::int64_t, 1>{1}, std::array<std::int64_t, 1>{1}, bound);
}

// Random series with small integer coefficients and positive-grade support.
GradedSeries random_series(std::mt19937& rng, const SeriesLayout& l, Rational constant) {
  std::uniform_int_distribution<int> coef(-5, 5), x(0, 4), y(-3, 6);
  std::vector<std::pair<Exponent, Rational>> t{{Exponent{0, 0}, constant}};
  for (int i = 0; i < 12; ++i) {
    const Exponent e{x(rng), y(rng)};
    if (l.grade(e) > 0) t.emplace_back(e, coef(rng));
  }
  return GradedSeries::from_terms(l, std::move(t));
}

}  // namespace

TEST(Series, EtaNinthPowerOracle) {
  std::vector<ProductFactor> f;
  for (std::int64_t k = 1; k <= 8; ++k) f.push_back({Exponent{k}, 9});
  const GradedSeries p = product_expand(layout1(8), f);
  const std::vector<int> want{1, -9, 27, -12, -90, 135, 54, -99, -189};
  for (std::int64_t k = 0; k <= 8; ++k) EXPECT_EQ(p.coefficient(Exponent{k}), want[k]) << k;
}

TEST(Series, ProductExpandMatchesBinomialMultiplication) {
  const SeriesLayout l = layout2(10);
  const std::vector<ProductFactor> f{{Exponent{1, 0}, 3}, {Exponent{0, 1}, 2}, {Exponent{2, -1}, 5},
                                     {Exponent{1, 2}, -2}};
  GradedSeries direct = GradedSeries::one(l);
  for (const auto& pf : f) {
    if (pf.multiplicity >= 0) {
      direct = direct * binomial_factor(l, pf.exponent, pf.multiplicity.get_si());
    } else {
      direct = series_divide(direct, binomial_factor(l, pf.exponent, -pf.multiplicity.get_si()));
    }
  }
  EXPECT_EQ(product_expand(l, f), direct);
}

TEST(Series, MultiplicationIsCommutativeAndAssociative) {
  std::mt19937 rng(7);
  const SeriesLayout l = layout2(14);
  for (int round = 0; round < 20; ++round) {
    const auto a = random_series(rng, l, 1), b = random_series(rng, l, -2), c = random_series(rng, l, 3);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Series, DivisionInvertsMultiplication) {
  std::mt19937 rng(11);
  const SeriesLayout l = layout2(12);
  for (int round = 0; round < 20; ++round) {
    const auto a = random_series(rng, l, 4), b = random_series(rng, l, -1);
    EXPECT_EQ(series_divide(a * b, b), a);
  }
}

TEST(Series, ExpOfLogIsIdentity) {
  std::mt19937 rng(3);
  const SeriesLayout l = layout2(12);
  for (int round = 0; round < 20; ++round) {
    const auto a = random_series(rng, l, 1);
    EXPECT_EQ(formal_exp(formal_log(a)), a);
    const auto z = a - GradedSeries::one(l);
    EXPECT_EQ(formal_log(formal_exp(z)), z);
  }
}

TEST(Series, ExtractionRecoversExponents) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> m(-4, 4), x(0, 3), y(-2, 4);
  const SeriesLayout l = layout2(10);
  for (int round = 0; round < 20; ++round) {
    std::map<Exponent, Integer> want;
    for (int i = 0; i < 8; ++i) {
      const Exponent e{x(rng), y(rng)};
      if (l.grade(e) > 0) want[e] += m(rng);
    }
    std::vector<ProductFactor> f;
    for (auto it = want.begin(); it != want.end();) {
      if (it->second == 0) {
        it = want.erase(it);
      } else {
        f.push_back({it->first, it->second});
        ++it;
      }
    }
    EXPECT_EQ(extract_product_exponents(product_expand(l, f)), want);
  }
}

TEST(Series, ExtractionRejectsNonIntegralExponent) {
  const SeriesLayout l = layout1(4);
  // 1 + q/2 has exponent -1/2 at q
  const auto s = GradedSeries::from_terms(l, {{Exponent{0}, 1}, {Exponent{1}, Rational(1, 2)}});
  EXPECT_THROW(extract_product_exponents(s), IdentityViolation);
}

TEST(Series, MixedLayoutsAreRejected) {
  const auto a = GradedSeries::one(layout2(4));
  const auto b = GradedSeries::one(SeriesLayout::make(2, std::array<std::int64_t, 2>{2, 1},
                                                      std::array<std::int64_t, 2>{2, 1}, 4));
  EXPECT_THROW(a * b, ConfigurationError);
  EXPECT_THROW(a + b, ConfigurationError);
}

TEST(Series, MultiplicationTakesTheSmallerBound) {
  const auto a = GradedSeries::one(layout2(4)), b = GradedSeries::one(layout2(9));
  EXPECT_EQ((a * b).bound(), 4);
}

TEST(Series, NegativeGradeIsADomainError) {
  EXPECT_THROW(GradedSeries::from_terms(layout2(4), {{Exponent{0, -1}, 1}}), DomainError);
}

TEST(Series, TermsAboveBoundAreDropped) {
  const auto s = GradedSeries::from_terms(layout1(3), {{Exponent{2}, 1}, {Exponent{4}, 7}});
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.level(2).size(), 1u);
  EXPECT_TRUE(s.level(3).empty());
}

TEST(Series, RescaleRoundTrip) {
  std::mt19937 rng(9);
  const SeriesLayout l = layout2(10);
  const auto a = random_series(rng, l, 1);
  const std::array<std::int64_t, 2> s4{4, 2}, s1{1, 1}, w{2, 1};
  const auto up = a.rescaled(s4, std::array<std::int64_t, 2>{1, 1}, 1000);
  EXPECT_EQ(up.rescaled(s1, w, 10), a);
  const auto half = GradedSeries::from_terms(
      SeriesLayout::make(1, std::array<std::int64_t, 1>{2}, std::array<std::int64_t, 1>{1}, 4),
      {{Exponent{1}, 1}});
  EXPECT_THROW(half.rescaled(std::array<std::int64_t, 1>{1}, std::array<std::int64_t, 1>{1}, 2),
               DomainError);
}

TEST(Series, LogAndExpPreconditions) {
  const auto two = GradedSeries::one(layout1(3)).scaled(2);
  EXPECT_THROW(formal_log(two), DomainError);
  EXPECT_THROW(formal_exp(two), DomainError);
  EXPECT_THROW(series_divide(two, GradedSeries(layout1(3))), DomainError);
}
