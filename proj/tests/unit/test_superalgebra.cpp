#include <gtest/gtest.h>

#include <vector>

#include "kmforms/errors.hpp"
#include "kmforms/lattice.hpp"
#include "kmforms/superalgebra.hpp"
#include "kmforms/theta.hpp"

using namespace kmforms;

namespace {

SeriesLayout one_var(std::int64_t bound) {
  const std::int64_t s[] = {1}, w[] = {1};
  return SeriesLayout::make(1, s, w, bound);
}

}  // namespace

TEST(Superalgebra, SingleOddIsotropicRootGivesGeometricSeries) {
  // one odd isotropic root of grade 1: sum_j x^j
  const std::vector<EnumRoot> roots{{Exponent{1}, 0, Integer(-1)}};
  const std::vector<std::vector<std::int64_t>> pairing{{0}};
  const auto s = epsilon_enumerate(one_var(6), roots, pairing, EpsilonSign::kSuper);
  for (std::int64_t j = 0; j <= 6; ++j) EXPECT_EQ(s.coefficient(Exponent{j}), 1) << j;
  const auto p = epsilon_enumerate(one_var(6), roots, pairing, EpsilonSign::kPlain);
  for (std::int64_t j = 0; j <= 6; ++j) EXPECT_EQ(p.coefficient(Exponent{j}), j % 2 ? -1 : 1);
}

TEST(Superalgebra, EvenIsotropicCopiesGiveBinomial) {
  const std::vector<EnumRoot> roots{{Exponent{1}, 0, Integer(3)}};
  const std::vector<std::vector<std::int64_t>> pairing{{0}};
  const auto s = epsilon_enumerate(one_var(5), roots, pairing, EpsilonSign::kSuper);
  const int want[] = {1, -3, 3, -1, 0, 0};
  for (std::int64_t j = 0; j <= 5; ++j) EXPECT_EQ(s.coefficient(Exponent{j}), want[j]) << j;
}

TEST(Superalgebra, DiagonalSystems) {
  const std::int64_t diag[] = {0, -2, 0};
  const bool odd[] = {true, false, false};
  EXPECT_TRUE(diagonal_denominator_check(diag, odd, 8).passed);
  const auto sweep = diagonal_sweep(3, 8);
  EXPECT_TRUE(sweep.passed) << sweep.first_failure();
}

TEST(Superalgebra, ConstructedSystems) {
  const auto m1 = extract_simple_multiplicities(delta5(Truncation{TruncationKind::kLambda, 8}), 1);
  const auto s1 = build_simple_roots(m1, 1);
  EXPECT_EQ(s1.real_roots.size(), 3u);
  EXPECT_EQ(s1.imaginary.at({0, 0, 2}), 9);
  EXPECT_EQ(s1.imaginary.at({2, -1, 2}), -93);
  // isotropic multiples carry tau, not m(a)
  EXPECT_EQ(s1.imaginary.at({0, 0, 4}), 9);
  EXPECT_EQ(s1.imaginary.at({0, 0, 8}), 9);
  EXPECT_FALSE(s1.imaginary.count({0, 0, 10}));
  EXPECT_EQ(s1.imaginary.at({4, -2, 4}), -540);
}

TEST(Superalgebra, PerpendicularPairOffRayIsUnexpected) {
  // (2,0,0) and (0,1,0) are perpendicular and not on one isotropic ray
  SimpleRootSystem bad;
  bad.example = 1;
  bad.bound = 8;
  bad.imaginary[{2, 0, 0}] = 1;
  bad.imaginary[{0, 1, 0}] = 1;
  EXPECT_THROW(epsilon_correction_sum(bad, 8), UnexpectedGeometry);
}

TEST(Superalgebra, CorrectionFactors) {
  const auto r1 = correction_factor_check(1, 12, 9);
  EXPECT_TRUE(r1.passed) << r1.first_failure();
  const auto r2 = correction_factor_check(2, 12, 3);
  EXPECT_TRUE(r2.passed) << r2.first_failure();
}

TEST(Superalgebra, DenominatorIdentities) {
  for (int ex = 1; ex <= 2; ++ex) {
    const auto r = denominator_identity_verify(ex, 12);
    EXPECT_TRUE(r.passed) << r.first_failure();
  }
}
