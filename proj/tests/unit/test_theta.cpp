#include <gtest/gtest.h>

#include "kmforms/errors.hpp"
#include "kmforms/jacobi.hpp"
#include "kmforms/theta.hpp"

using namespace kmforms;

TEST(Theta, TenEvenCharacteristics) {
  const auto c = even_characteristics();
  ASSERT_EQ(c.size(), 10u);
  for (const auto& x : c) EXPECT_TRUE(x.is_even());
  EXPECT_THROW(theta_constant(ThetaCharacteristic{{1, 0}, {1, 0}}, Truncation{TruncationKind::kTrace, 4}),
               DomainError);
}

TEST(Theta, ThetaConstantLeadingTerms) {
  // x = +-(1,0) and x = +-(1,1)
  const auto th = theta_constant(ThetaCharacteristic{{0, 0}, {0, 0}}, Truncation{TruncationKind::kTrace, 2});
  EXPECT_EQ(th.constant_term(), 1);
  EXPECT_EQ(th.coefficient(Exponent{4, 0, 0}), 2);
  EXPECT_EQ(th.coefficient(Exponent{4, 8, 4}), 2);
  EXPECT_EQ(th.coefficient(Exponent{4, 4, 4}), 0);
}

TEST(Theta, Delta5FrozenCoefficients) {
  const auto t = delta5(12);
  const std::vector<std::pair<Triple, int>> want{
      {{1, 1, 1}, 64},     {{1, -1, 1}, -64},   {{3, 1, 1}, -576},  {{3, -1, 1}, 576},
      {{3, 3, 1}, -64},    {{1, 1, 3}, -576},   {{3, 1, 3}, -5760}, {{3, 3, 3}, 5952},
      {{3, -3, 3}, -5952}, {{5, 1, 1}, 1728},   {{3, 5, 3}, -576},  {{5, 3, 3}, -3456},
      {{5, 5, 3}, -5760}};
  for (const auto& [e, c] : want) EXPECT_EQ(t.at(e), c) << triple_str(e);
}

TEST(Theta, Delta5TermCounts) {
  EXPECT_EQ(delta5(Truncation{TruncationKind::kLambda, 6}).entries.size(), 57u);
  EXPECT_EQ(delta5(Truncation{TruncationKind::kLambda, 14}).entries.size(), 425u);
  EXPECT_EQ(delta5(Truncation{TruncationKind::kLambda, 24}).entries.size(), 1797u);
  EXPECT_EQ(delta5(16).entries.size(), 332u);
}

TEST(Theta, Delta5SupportAndDivisibility) {
  for (const auto& [e, c] : delta5(16).entries) {
    const auto [n, l, m] = e;
    EXPECT_TRUE(n % 2 && l % 2 && m % 2 && 4 * n * m - l * l > 0) << triple_str(e);
    EXPECT_EQ(c.get_num() % 64, 0) << triple_str(e);
  }
  EXPECT_THROW(delta5(2), DomainError);
}

TEST(Theta, TraceAndLambdaTablesAgree) {
  const auto a = delta5(16), b = delta5(Truncation{TruncationKind::kLambda, 12});
  EXPECT_FALSE(first_mismatch(a, b).has_value());
}

TEST(Theta, SliceMatchesPsi5) {
  const auto slice = fourier_jacobi_slice(delta5(14), 1).scaled(Rational(1, 64));
  const auto psi = psi_half_forms(PsiKind::kPsi5Half, 8);
  EXPECT_EQ(slice, psi.series.truncated(slice.bound()));
  EXPECT_THROW(fourier_jacobi_slice(delta5(4), 6), ConfigurationError);
}

TEST(Theta, SymmetryAuditCleanOnBothTruncations) {
  const auto w = weyl_enumerate(1, 2);
  EXPECT_TRUE(symmetry_audit(delta5(14), example_data(1), w).passed);
  EXPECT_TRUE(symmetry_audit(delta5(Truncation{TruncationKind::kLambda, 10}), example_data(1), w).passed);
}

TEST(Theta, SymmetryAuditFindsPlantedViolation) {
  auto t = delta5(10);
  t.set({3, 1, 1}, t.at({3, 1, 1}) + 64);
  const auto r = symmetry_audit(t, example_data(1), weyl_enumerate(1, 1));
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.first_failure().find("(3,1,1)"), std::string::npos);
}
