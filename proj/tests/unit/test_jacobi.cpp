#include <gtest/gtest.h>

#include "kmforms/errors.hpp"
#include "kmforms/jacobi.hpp"

using namespace kmforms;

namespace {

std::vector<Rational> row(const JacobiSeries& s, std::int64_t n, std::int64_t l0, std::int64_t l1,
                          std::int64_t step = 1) {
  std::vector<Rational> out;
  for (std::int64_t l = l0; l <= l1; l += step) out.push_back(s.at(n, l));
  return out;
}

std::vector<Rational> R(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Jacobi, CohenNumbers) {
  EXPECT_EQ(cohen_number(3, 0), Rational(-1, 252));
  EXPECT_EQ(cohen_number(5, 0), Rational(-1, 132));
  EXPECT_EQ(cohen_number(3, 3), Rational(-2, 9));
  EXPECT_EQ(cohen_number(3, 4), Rational(-1, 2));
  EXPECT_EQ(cohen_number(5, 3), Rational(2, 3));
  EXPECT_EQ(cohen_number(5, 4), Rational(5, 2));
  EXPECT_EQ(cohen_number(3, 1), 0);
  EXPECT_EQ(cohen_number(3, -4), 0);
  EXPECT_THROW(cohen_number(4, 3), DomainError);
}

TEST(Jacobi, EisensteinRows) {
  const auto e4 = jacobi_eisenstein(4, 10), e6 = jacobi_eisenstein(6, 10);
  EXPECT_EQ(row(e4, 0, -1, 1), R({0, 1, 0}));
  EXPECT_EQ(row(e4, 1, -2, 2), R({1, 56, 126, 56, 1}));
  EXPECT_EQ(row(e6, 1, -2, 2), R({1, -88, -330, -88, 1}));
  for (const auto& t : e6.series.terms()) EXPECT_TRUE(is_integral(t.coefficient));
}

TEST(Jacobi, ClassicalSeries) {
  const auto d = classical_qseries(QSeriesKind::kDelta12, 6);
  std::vector<Rational> got;
  for (std::int64_t n = 1; n <= 6; ++n) got.push_back(d.coefficient(Exponent{n}));
  EXPECT_EQ(got, R({1, -24, 252, -1472, 4830, -6048}));
  const auto e4 = classical_qseries(QSeriesKind::kE4, 3);
  EXPECT_EQ(e4.coefficient(Exponent{2}), 2160);
  // eta^3 = sum_{m = 1 mod 4} m q^(m^2/8), scale 24
  const auto eta3 = classical_qseries(QSeriesKind::kEtaPower, 6, 3);
  EXPECT_EQ(eta3.coefficient(Exponent{3}), 1);
  EXPECT_EQ(eta3.coefficient(Exponent{27}), -3);
  EXPECT_EQ(eta3.coefficient(Exponent{75}), 5);
  EXPECT_EQ(eta3.size(), 3u);
}

TEST(Jacobi, ThetaSumEqualsProduct) {
  for (std::int64_t order = 1; order <= 12; ++order) {
    EXPECT_EQ(theta11(order, ThetaForm::kSum).series, theta11(order, ThetaForm::kProduct).series) << order;
  }
}

TEST(Jacobi, Phi12Rows) {
  const auto phi = weak_jacobi(WeakJacobiKind::kPhi12_1, 3);
  EXPECT_TRUE(phi.series.level(0).empty());
  EXPECT_EQ(row(phi, 1, -2, 2), R({0, 1, 10, 1, 0}));
  // evenness-corrected: the printed row has its last entry at r^-2
  EXPECT_EQ(row(phi, 2, -3, 3), R({0, 10, -88, -132, -88, 10, 0}));
}

TEST(Jacobi, Phi01Rows) {
  const auto phi = weak_jacobi(WeakJacobiKind::kPhi0_1, 3);
  EXPECT_EQ(row(phi, 0, -2, 2), R({0, 1, 10, 1, 0}));
  EXPECT_EQ(row(phi, 1, -2, 2), R({10, -64, 108, -64, 10}));
  EXPECT_EQ(row(phi, 2, -3, 3), R({1, 108, -513, 808, -513, 108, 1}));
}

TEST(Jacobi, Phi02Rows) {
  const auto phi = weak_jacobi(WeakJacobiKind::kPhi0_2, 3);
  EXPECT_EQ(row(phi, 0, -2, 2), R({0, 1, 4, 1, 0}));
  EXPECT_EQ(row(phi, 1, -3, 3), R({1, -8, -1, 16, -1, -8, 1}));
  EXPECT_EQ(row(phi, 2, -4, 4), R({4, -1, -32, 1, 56, 1, -32, -1, 4}));
}

TEST(Jacobi, WeakFormsAreEvenInL) {
  for (auto k : {WeakJacobiKind::kPhi0_1, WeakJacobiKind::kPhi0_2}) {
    const auto phi = weak_jacobi(k, 6);
    for (const auto& t : phi.series.terms()) {
      EXPECT_EQ(phi.at(t.exponent[0], -t.exponent[1]), t.coefficient);
    }
  }
}

TEST(Jacobi, Psi5Rows) {
  const auto g = psi_half_forms(PsiKind::kPsi5Half, 4);
  EXPECT_EQ(row(g, 1, -1, 1, 2), R({-1, 1}));
  EXPECT_EQ(row(g, 3, -3, 3, 2), R({1, 9, -9, -1}));
  EXPECT_EQ(row(g, 5, -5, 5, 2), R({0, -9, -27, 27, 9, 0}));
}

TEST(Jacobi, Psi2Rows) {
  const auto c = psi_half_forms(PsiKind::kPsi2Half, 4);
  EXPECT_EQ(row(c, 1, -1, 1, 2), R({1, -1}));
  EXPECT_EQ(row(c, 5, -3, 3, 2), R({-1, -3, 3, 1}));
  for (const auto& t : c.series.terms()) {
    EXPECT_EQ(positive_mod(t.exponent[0], 4), 1);
    EXPECT_EQ(positive_mod(t.exponent[1], 2), 1);
  }
}

TEST(Jacobi, ElliptricReductionMatchesDirectCoefficients) {
  const auto phi = weak_jacobi(WeakJacobiKind::kPhi0_2, 8);
  const JacobiCoefficients jc(phi, 2);
  for (const auto& t : phi.series.terms()) {
    EXPECT_EQ(Rational(jc.at(t.exponent[0], t.exponent[1])), t.coefficient) << t.exponent.str();
  }
  EXPECT_EQ(jc.at(3, 100), 0);
  EXPECT_THROW(jc.at(40, 1), ConfigurationError);
  EXPECT_EQ(depth_for_discriminant(1, 40), 11);
}

TEST(Jacobi, HeckeAndLogIdentity) {
  const JacobiCoefficients phi(weak_jacobi(WeakJacobiKind::kPhi0_1, depth_for_discriminant(1, 64)), 1);
  EXPECT_EQ(phi.at(4, 2), 4016);
  EXPECT_EQ(phi.at(1, 1), -64);
  const auto r = log_identity_check(phi, 8);
  EXPECT_TRUE(r.passed) << r.first_failure();
  bool found = false;
  for (const auto& l : r.lines) found = found || l == "coefficient at (2,2,2): 3984";
  EXPECT_TRUE(found);
}
