#include "fsq/integer.h"

#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

namespace fsq {
namespace {

// Independent check: trial division of k by every p <= sqrt(k).
bool squarefree_by_trial_division(const Integer& k) {
  for (Integer p = 2; p * p <= k; ++p) {
    if (mpz_divisible_p(k.get_mpz_t(), Integer(p * p).get_mpz_t())) return false;
  }
  return true;
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(40, 16), 8);
  EXPECT_EQ(gcd(0, 5), 5);
  EXPECT_EQ(gcd(720, 1681), 1);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(-12, 18), 6);
}

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(2401), 49);
  EXPECT_EQ(isqrt(48), 6);
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(1), 1);
  EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Isqrt, FloorPropertyAgainstGmp) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240101);
  const Integer limit = Integer("1000000000000000000000000000000");  // 10^30
  for (int i = 0; i < 10000; ++i) {
    const Integer n = rng.get_z_range(limit);
    const Integer r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
    Integer oracle;
    mpz_sqrt(oracle.get_mpz_t(), n.get_mpz_t());
    ASSERT_EQ(r, oracle) << n;
  }
}

TEST(IsPerfectSquare, Examples) {
  EXPECT_EQ(is_perfect_square(1681), Integer(41));
  EXPECT_FALSE(is_perfect_square(65).has_value());
  EXPECT_FALSE(is_perfect_square(-4).has_value());
  EXPECT_EQ(is_perfect_square(0), Integer(0));
}

TEST(IsPerfectSquare, RemultiplicationOnRandomInputs) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  const Integer limit = Integer("1000000000000000000000000000000");
  const Integer root_limit = Integer("1000000000000000");
  for (int i = 0; i < 10000; ++i) {
    // Alternate between arbitrary values and exact squares (and their
    // neighbours) so both outcomes get exercised.
    Integer n;
    if (i % 3 == 0) {
      n = rng.get_z_range(limit);
    } else {
      const Integer r = rng.get_z_range(root_limit);
      n = r * r + (i % 3 == 1 ? 0 : 1);
    }
    const auto root = is_perfect_square(n);
    const bool oracle = mpz_perfect_square_p(n.get_mpz_t()) != 0;
    ASSERT_EQ(root.has_value(), oracle) << n;
    if (root) ASSERT_EQ(*root * *root, n);
  }
}

TEST(SquarefreeSplit, Examples) {
  auto s = squarefree_split(180);
  EXPECT_EQ(s.k, 5);
  EXPECT_EQ(s.m, 6);
  s = squarefree_split(1);
  EXPECT_EQ(s.k, 1);
  EXPECT_EQ(s.m, 1);
  s = squarefree_split(48);
  EXPECT_EQ(s.k, 3);
  EXPECT_EQ(s.m, 4);
  EXPECT_THROW(squarefree_split(0), std::domain_error);
  EXPECT_THROW(squarefree_split(-3), std::domain_error);
}

TEST(SquarefreeSplit, ProductAndSquarefreeness) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<unsigned long> dist(1, 1000000000UL);
  for (int i = 0; i < 2000; ++i) {
    const Integer n = dist(rng);
    const auto [k, m] = squarefree_split(n);
    ASSERT_EQ(k * m * m, n);
    ASSERT_TRUE(squarefree_by_trial_division(k)) << n;
  }
}

TEST(SquarefreeSplit, LargeSquareCofactor) {
  // 30 * (10^9 + 7)^2 exercises the residual prime-squared branch.
  const Integer p = 1000000007;
  const auto s = squarefree_split(Integer(30 * p * p));
  EXPECT_EQ(s.k, 30);
  EXPECT_EQ(s.m, p);
  // Two distinct large primes stay in k.
  const Integer q = 998244353;
  const auto t = squarefree_split(Integer(4 * p * q));
  EXPECT_EQ(t.k, p * q);
  EXPECT_EQ(t.m, 2);
}

TEST(FastPaths, AgreeWithInteger) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = rng() >> (i % 64);
    ASSERT_EQ(Integer(static_cast<unsigned long>(isqrt_u64(n))), isqrt(Integer(static_cast<unsigned long>(n))));
    const std::uint64_t r = n >> 33;
    ASSERT_EQ(square_root_u64(r * r), r);
    if (r > 1) ASSERT_FALSE(square_root_u64(r * r - 1).has_value());
  }
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  EXPECT_EQ(isqrt_u64(max), 4294967295ULL);
  const u128 big = (u128{1} << 126) + 12345;
  EXPECT_EQ(from_u128(isqrt_u128(big)), isqrt(from_u128(big)));
  const u128 r = (u128{1} << 63) + 11;
  EXPECT_EQ(square_root_u128(r * r), r);
  EXPECT_FALSE(square_root_u128(r * r + 1).has_value());
}

TEST(ParseInteger, StrictDecimal) {
  EXPECT_EQ(parse_integer("123456789012345678901234567890"), Integer("123456789012345678901234567890"));
  EXPECT_EQ(parse_integer("-17"), -17);
  EXPECT_EQ(parse_integer("+4"), 4);
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
  EXPECT_THROW(parse_integer(" 1"), std::invalid_argument);
  EXPECT_THROW(parse_integer("1/2"), std::invalid_argument);
}

}  // namespace
}  // namespace fsq
