#include <gtest/gtest.h>

#include "kmforms/errors.hpp"
#include "kmforms/jacobi.hpp"
#include "kmforms/lift.hpp"
#include "kmforms/theta.hpp"

using namespace kmforms;

TEST(Lift, KroneckerMinus4) {
  const int want[] = {0, 1, 0, -1, 0, 1, 0, -1, 0};
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(kronecker_minus4(d), want[d]) << d;
  EXPECT_THROW(kronecker_minus4(0), DomainError);
  EXPECT_EQ(kronecker_minus4(13), 1);
  EXPECT_EQ(kronecker_minus4(15), -1);
}

TEST(Lift, Support) {
  const auto s = maass_lift_spec();
  EXPECT_TRUE(s.in_support({1, 1, 1}));
  EXPECT_TRUE(s.in_support({3, -3, 1}));
  EXPECT_FALSE(s.in_support({1, 2, 1}));
  EXPECT_FALSE(s.in_support({1, 2, 3}));
  EXPECT_FALSE(s.in_support({2, 1, 1}));
  const auto p = paramodular_lift_spec();
  EXPECT_TRUE(p.in_support({1, 1, 1}));
  EXPECT_TRUE(p.in_support({1, -1, 1}));
  EXPECT_FALSE(p.in_support({3, 1, 1}));
  EXPECT_TRUE(p.in_support({1, 3, 5}));
  EXPECT_FALSE(p.in_support({1, 3, 3}));
  EXPECT_FALSE(p.in_support({1, 2, 5}));
}

TEST(Lift, MaassLiftOfPsi5IsDelta5) {
  const auto spec = maass_lift_spec();
  const Truncation t{TruncationKind::kTrace, 12};
  const auto psi = psi_half_forms(PsiKind::kPsi5Half, (lift_input_depth(spec, t) + 1) / 2);
  const auto lift = arithmetic_lift(psi, spec, t);
  EXPECT_FALSE(first_mismatch(delta5(12).scaled(Rational(1, 64)), lift).has_value());
  // gcd 1 exponents take the input coefficient directly
  EXPECT_EQ(lift.at({1, 1, 3}), psi.at(3, 1));
}

TEST(Lift, MissingDepthIsConfigurationError) {
  const auto psi = psi_half_forms(PsiKind::kPsi5Half, 2);
  EXPECT_THROW(arithmetic_lift(psi, maass_lift_spec(), Truncation{TruncationKind::kTrace, 16}),
               ConfigurationError);
  EXPECT_THROW(arithmetic_lift(psi, paramodular_lift_spec(), Truncation{TruncationKind::kTrace, 4}),
               ConfigurationError);
}

TEST(Lift, F2LeadingTermsAndSymmetry) {
  const auto f2 = f2_table(Truncation{TruncationKind::kLambda, 12});
  EXPECT_EQ(f2.unit, kUnitOrthogonal);
  EXPECT_EQ(f2.at({1, -1, 1}), 1);
  EXPECT_EQ(f2.at({1, 1, 1}), -1);
  EXPECT_TRUE(f2.all_integral());
  for (const auto& [e, c] : f2.entries) {
    const Triple swapped{e[2], e[1], e[0]};
    if (f2.covers(swapped)) EXPECT_EQ(f2.at(swapped), c) << triple_str(e);
  }
}
