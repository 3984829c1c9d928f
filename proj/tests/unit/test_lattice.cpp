#include <gtest/gtest.h>

#include "kmforms/errors.hpp"
#include "kmforms/lattice.hpp"
#include "kmforms/theta.hpp"

using namespace kmforms;

TEST(Lattice, RootGramsAndWeylVector) {
  const auto& e1 = example_data(1);
  EXPECT_EQ(e1.fundamental.roots.size(), 3u);
  EXPECT_EQ(e1.fundamental.root_gram[0][1], -2);
  EXPECT_EQ(e1.lattice.signature(), std::make_pair(2, 1));
  const auto& e2 = example_data(2);
  EXPECT_EQ(e2.fundamental.roots.size(), 4u);
  EXPECT_EQ(e2.fundamental.root_gram[0][2], -12);
  for (int ex = 1; ex <= 2; ++ex) {
    const auto& d = example_data(ex);
    for (const auto& r : d.fundamental.roots)
      EXPECT_EQ(d.lattice.pair(d.fundamental.rho, r), -d.lattice.pair(r, r) / 2);
  }
}

TEST(Lattice, ReflectionIsInvolution) {
  for (int ex = 1; ex <= 2; ++ex) {
    const auto& d = example_data(ex);
    for (const auto& r : d.fundamental.roots) {
      const auto s = reflection(d.lattice, r);
      EXPECT_EQ(s.det, -1);
      const LatticeVector v{Rational(3), Rational(-1, 2), Rational(5)};
      EXPECT_EQ(s.apply(s.apply(v)), v);
      EXPECT_EQ(d.lattice.pair(s.apply(v), s.apply(v)), d.lattice.pair(v, v));
      const LatticeVector neg{-r[0], -r[1], -r[2]};
      EXPECT_EQ(s.apply(r), neg);
    }
  }
}

TEST(Lattice, WeylCounts) {
  EXPECT_EQ(weyl_enumerate(1, 0).size(), 1u);
  EXPECT_EQ(weyl_enumerate(1, 1).size(), 4u);
  EXPECT_EQ(weyl_enumerate(1, 3).size(), 22u);
  EXPECT_EQ(weyl_enumerate(2, 3).size(), 53u);
}

TEST(Lattice, ConeCertificates) {
  for (int ex = 1; ex <= 2; ++ex) {
    const auto r = cone_inclusion_check(ex);
    EXPECT_TRUE(r.passed) << r.first_failure();
  }
}

TEST(Lattice, ExponentMapRoundTrip) {
  for (int ex = 1; ex <= 2; ++ex) {
    const auto map = exponent_map(ex);
    const auto& d = example_data(ex);
    for (const auto& a : cone_points(d, 8)) {
      EXPECT_TRUE(in_m2(d, a));
      EXPECT_EQ(map.from_product_exponent(map.to_product_exponent(a)), a);
      const LatticeVector v = to_rational(a);
      EXPECT_EQ(map.from_exponent(map.to_exponent(v)), v);
    }
  }
  EXPECT_EQ(exponent_map(1).to_exponent(example_data(1).fundamental.rho), (Triple{1, 1, 1}));
}

TEST(Lattice, Example1Multiplicities) {
  const auto m = extract_simple_multiplicities(delta5(Truncation{TruncationKind::kLambda, 6}), 1);
  const std::vector<std::pair<IntVector, int>> want{
      {{0, 0, 0}, -1}, {{0, 0, 2}, 9},  {{0, 0, 4}, -27},  {{0, 0, 6}, 12},   {{2, -2, 4}, 90},
      {{2, -1, 2}, -93}, {{2, -2, 2}, 9}, {{2, 0, 0}, 9}, {{4, -2, 4}, -540}, {{6, 0, 0}, 12}};
  for (const auto& [a, v] : want) EXPECT_EQ(m.mult(a), v) << vector_str(a);
  EXPECT_EQ(m.mult({0, 0, 8}), 0);
}

TEST(Lattice, SumSideMatchesProduct) {
  const std::int64_t b = 12;
  const auto t = delta5(Truncation{TruncationKind::kLambda, b});
  const auto sum = sum_side_reconstruct(extract_simple_multiplicities(t, 1), 1, b);
  EXPECT_FALSE(first_mismatch(t.scaled(Rational(1, 64)), sum).has_value());
}

TEST(Lattice, WedgeSquare) {
  const auto r = wedge_square_check();
  EXPECT_TRUE(r.passed) << r.first_failure();
}
