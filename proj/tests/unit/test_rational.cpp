#include <gtest/gtest.h>

#include "kmforms/errors.hpp"
#include "kmforms/exponent.hpp"
#include "kmforms/rational.hpp"

using namespace kmforms;

TEST(Rational, StringRoundTrip) {
  for (const char* s : {"0", "64", "-64", "-1/252", "5/66", "123456789012345678901234567890"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
}

TEST(Rational, MalformedInput) {
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational("1.5"), DomainError);
}

TEST(Rational, FracIsCanonical) {
  const Rational a = frac(30, 2);
  EXPECT_EQ(a, Rational(15));
  EXPECT_TRUE(is_integral(a));
  EXPECT_EQ(to_string(frac(-6, 4)), "-3/2");
  EXPECT_THROW(frac(1, 0), DomainError);
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(15), 3);
  EXPECT_EQ(isqrt(16), 4);
  EXPECT_EQ(positive_mod(-3, 4), 1);
  EXPECT_EQ(floor_div(-3, 2), -2);
  EXPECT_EQ(binomial(9, 2), 36);
  EXPECT_EQ(ipow(2, 10), 1024);
  EXPECT_THROW(to_integer(Rational(1, 2), "test"), IdentityViolation);
}

TEST(Exponent, ArithmeticAndOrder) {
  const Exponent a{1, -2, 3}, b{0, 1, 1};
  EXPECT_EQ(a + b, (Exponent{1, -1, 4}));
  EXPECT_EQ(a - a, Exponent::zero(3));
  EXPECT_EQ(a * 2, (Exponent{2, -4, 6}));
  EXPECT_TRUE((a * 3).divisible_by(3));
  EXPECT_FALSE(a.divisible_by(2));
  EXPECT_EQ((a * 3).divided_by(3), a);
  EXPECT_LT(b, a);
  EXPECT_EQ(a.str(), "(1,-2,3)");
  EXPECT_THROW(Exponent::zero(5), DomainError);
}
