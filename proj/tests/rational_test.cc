#include "fsq/rational.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace fsq {
namespace {

TEST(Rational, ReducedOnConstruction) {
  const Rational r(Integer(1681), Integer(144));
  EXPECT_EQ(r.num(), 1681);
  EXPECT_EQ(r.den(), 144);
  const Rational s(Integer(-82), Integer(12));
  EXPECT_EQ(s.num(), -41);
  EXPECT_EQ(s.den(), 6);
  const Rational zero(Integer(0), Integer(7));
  EXPECT_EQ(zero.num(), 0);
  EXPECT_EQ(zero.den(), 1);
}

TEST(Rational, RejectsBadDenominators) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
  EXPECT_THROW(Rational(Integer(1), Integer(-2)), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, RandomConstructionIsCanonical) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 5000; ++i) {
    const Rational q(Integer(num(rng)), Integer(den(rng)));
    ASSERT_GT(q.den(), 0);
    ASSERT_EQ(gcd(q.num(), q.den()), 1);
    const Rational r = q * Rational(Integer(den(rng)), Integer(den(rng))) - q / Rational(3);
    ASSERT_GT(r.den(), 0);
    ASSERT_EQ(gcd(r.num(), r.den()), 1);
  }
}

TEST(Rational, Arithmetic) {
  const Rational a(Integer(31), Integer(12));
  const Rational b(Integer(41), Integer(12));
  EXPECT_EQ(b * b - a * a, Rational(5));
  EXPECT_EQ(a / b, Rational(Integer(31), Integer(41)));
  EXPECT_EQ(-a + a, Rational(0));
  EXPECT_LT(a, b);
  EXPECT_GT(Rational(-1), Rational(Integer(-3), Integer(2)));
  // Division by a negative value keeps the denominator positive.
  const Rational c = Rational(1) / Rational(-2);
  EXPECT_EQ(c.num(), -1);
  EXPECT_EQ(c.den(), 2);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("25/4"), Rational(Integer(25), Integer(4)));
  EXPECT_EQ(parse_rational("-6/4").to_string(), "-3/2");
  EXPECT_EQ(parse_rational("7").to_string(), "7");
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("1/-2"), std::domain_error);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x/2"), std::invalid_argument);
}

TEST(Rational, Sqrt) {
  EXPECT_EQ(rational_sqrt(Rational(Integer(1681), Integer(144))), Rational(Integer(41), Integer(12)));
  EXPECT_FALSE(rational_sqrt(Rational(Integer(73), Integer(4))).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-1)).has_value());
  EXPECT_EQ(rational_sqrt(Rational(0)), Rational(0));
}

}  // namespace
}  // namespace fsq
