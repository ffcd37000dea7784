#include "fsq/descent.h"

#include <gtest/gtest.h>

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fsq {
namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

const Refutation& refutation_of(const auto& outcome) {
  EXPECT_TRUE(std::holds_alternative<Refutation>(outcome));
  return std::get<Refutation>(outcome);
}

TEST(ClearDenominators, Examples) {
  const std::array<Rational, 4> bad{q(1, 4), q(25, 4), q(49, 4), q(73, 4)};
  const auto r = refutation_of(clear_denominators(bad));
  EXPECT_EQ(r.condition, Condition::kNotSquare);
  EXPECT_EQ(r.value, 73);
  EXPECT_TRUE(r.replay());

  const std::array<Rational, 4> ones{Rational(1), Rational(1), Rational(1), Rational(1)};
  EXPECT_EQ(std::get<0>(clear_denominators(ones)), (std::array<Integer, 4>{1, 1, 1, 1}));

  const std::array<Rational, 4> quarters{q(1, 4), q(1, 4), q(1, 4), q(1, 4)};
  EXPECT_EQ(std::get<0>(clear_denominators(quarters)), (std::array<Integer, 4>{1, 1, 1, 1}));
}

TEST(ClearDenominators, RejectsNonProgression) {
  const std::array<Rational, 4> squares{q(1, 4), q(25, 4), q(49, 4), q(81, 4)};
  const auto r = refutation_of(clear_denominators(squares));
  EXPECT_EQ(r.condition, Condition::kNotProgression);
  EXPECT_TRUE(r.replay());
}

TEST(ClearDenominators, ConstantWindowScalesByRootDenominator) {
  const std::array<Rational, 4> squares{q(961, 144), q(961, 144), q(961, 144), q(961, 144)};
  EXPECT_EQ(std::get<0>(clear_denominators(squares)), (std::array<Integer, 4>{961, 961, 961, 961}));
}

TEST(NormalizeWindow, Examples) {
  const std::array<Integer, 4> fours{4, 4, 4, 4};
  EXPECT_EQ(std::get<FourApCandidate>(normalize_window(fours)), FourApCandidate::make(1, 0));
  const std::array<Integer, 4> nines{9, 9, 9, 9};
  EXPECT_EQ(std::get<FourApCandidate>(normalize_window(nines)), FourApCandidate::make(1, 0));

  const std::array<Integer, 4> bad{1, 9, 17, 25};
  const auto r = refutation_of(normalize_window(bad));
  EXPECT_EQ(r.condition, Condition::kNotSquare);
  EXPECT_EQ(r.value, 17);
  EXPECT_EQ(r.describe(), "17 not a square (term[2])");
}

TEST(NormalizeWindow, ValidationFailures) {
  const std::array<Integer, 4> zeros{0, 0, 0, 0};
  EXPECT_EQ(refutation_of(normalize_window(zeros)).condition, Condition::kZeroWindow);
  const std::array<Integer, 4> not_ap{1, 1, 1, 4};
  EXPECT_EQ(refutation_of(normalize_window(not_ap)).condition, Condition::kNotProgression);
  const std::array<Integer, 4> even{4, 4, 4, 4 * 4};
  EXPECT_FALSE(succeeded(normalize_window(even)));
  const std::array<Integer, 4> descending{49, 25, 1, 1};
  EXPECT_EQ(refutation_of(normalize_window(descending)).condition, Condition::kNotProgression);
}

TEST(QuarticRhs, Examples) {
  EXPECT_EQ(quartic_rhs(1, 0).value, 1);
  const auto r = quartic_rhs(7, 2);
  EXPECT_EQ(r.value, -3135);
  EXPECT_EQ(r.product_form, Integer(33) * -95);
  EXPECT_EQ(r.square_form, Integer(961) - 4096);
  EXPECT_EQ(quartic_rhs(41, 0).value, Integer(41) * 41 * 41 * 41);
}

TEST(QuarticRhs, IdentityFuzz) {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long long> dist(-1000000000000000LL, 1000000000000000LL);
  for (int i = 0; i < 10000; ++i) {
    const Integer x = static_cast<long>(dist(rng));
    const Integer n = static_cast<long>(dist(rng));
    const auto r = quartic_rhs(x, n);
    // Expanded polynomial: x^4 - 40x^2n^2 + 144n^4.
    const Integer expanded = x * x * x * x - 40 * x * x * n * n + 144 * n * n * n * n;
    ASSERT_EQ(r.product_form, expanded);
    ASSERT_EQ(r.square_form, expanded);
  }
}

TEST(ForwardToAd, Examples) {
  const auto deg = forward_to_ad(FourApCandidate::make(1, 0));
  ASSERT_TRUE(succeeded(deg));
  const auto& fw = std::get<ForwardWitness>(deg);
  EXPECT_EQ(fw.pair, (AdPair{0, 1}));
  EXPECT_EQ(fw.witness.y, 1);
  EXPECT_EQ(fw.witness.u, 0);
  EXPECT_EQ(fw.witness.v, 1);
  EXPECT_FALSE(validate(fw.witness, fw.candidate).has_value());

  const auto seven = refutation_of(forward_to_ad(Integer(7), Integer(1)));
  EXPECT_EQ(seven.subject, "x-2n");
  EXPECT_EQ(seven.value, 5);

  const auto big = refutation_of(forward_to_ad(Integer(49), Integer(4)));
  EXPECT_EQ(big.subject, "x-2n");
  EXPECT_EQ(big.value, 41);
}

TEST(ForwardToAd, WindowDefectsRefute) {
  EXPECT_EQ(refutation_of(forward_to_ad(Integer(4), Integer(1))).condition, Condition::kNotOdd);
  EXPECT_EQ(refutation_of(forward_to_ad(Integer(9), Integer(3))).condition, Condition::kNotCoprime);
  EXPECT_EQ(refutation_of(forward_to_ad(Integer(-1), Integer(0))).condition, Condition::kNotPositive);
}

TEST(ForwardToAd, TraceRecordsChain) {
  Trace trace;
  ASSERT_TRUE(succeeded(forward_to_ad(FourApCandidate::make(1, 0), &trace)));
  std::map<std::string, Integer> seen;
  for (const auto& s : trace) seen[s.label] = s.value;
  EXPECT_EQ(seen.at("y"), 1);
  EXPECT_EQ(seen.at("u"), 0);
  EXPECT_EQ(seen.at("v"), 1);
  EXPECT_EQ(seen.at("A"), 0);
  EXPECT_EQ(seen.at("D"), 1);
  EXPECT_EQ(seen.at("16A^2+D^2"), 1);
}

TEST(DescentWitness, TamperingIsDetected) {
  const auto c = FourApCandidate::make(1, 0);
  const DescentWitness good{1, 0, 1, 0, 1, false};
  EXPECT_FALSE(validate(good, c).has_value());
  auto bad = good;
  bad.y = 3;
  EXPECT_TRUE(validate(bad, c).has_value());
  bad = good;
  bad.odd_leg_positive = true;
  EXPECT_TRUE(validate(bad, c).has_value());
  bad = good;
  bad.d = 3;
  EXPECT_TRUE(validate(bad, c).has_value());
}

TEST(AdToAp, Examples) {
  EXPECT_EQ(std::get<FourApCandidate>(ad_to_ap({0, 1})), FourApCandidate::make(1, 0));

  const auto one = refutation_of(ad_to_ap({1, 1}));
  EXPECT_EQ(one.value, 17);
  EXPECT_EQ(one.subject, "16A^2+D^2");

  const auto six = refutation_of(ad_to_ap({6, 1}));
  EXPECT_EQ(six.value, 577);

  EXPECT_THROW(ad_to_ap({2, 2}), std::domain_error);
  EXPECT_THROW(ad_to_ap({3, 9}), std::domain_error);
}

TEST(Composition, ForwardAfterReverseIsIdentityOnCertifiedPairs) {
  // Executed over the whole grid; it only fires where ad_to_ap succeeds.
  int certified = 0;
  for (long a = 0; a <= 60; ++a) {
    for (long d = 1; d <= 121; d += 2) {
      if (std::gcd(a, d) != 1) continue;
      const AdPair p{a, d};
      const auto back = ad_to_ap(p);
      if (!succeeded(back)) continue;
      ++certified;
      const auto fw = forward_to_ad(std::get<FourApCandidate>(back));
      ASSERT_TRUE(succeeded(fw));
      EXPECT_EQ(std::get<ForwardWitness>(fw).pair, p);
    }
  }
  EXPECT_EQ(certified, 1);
}

TEST(Reconstruction, MatchesFormsProduct) {
  EXPECT_EQ(reconstruction({0, 1}), (std::pair<Integer, Integer>{1, 0}));
  const auto [x, n] = reconstruction({3, 5});
  EXPECT_EQ(n, 15);
  EXPECT_EQ(x, isqrt(Integer(169 * 61)));
}

TEST(SplitFactorizations, Examples) {
  EXPECT_EQ(split_factorizations(30, 6, 5, 10, 3), (SplitWitness{6, 5, 10, 3, 1, 3, 5, 1}));
  EXPECT_EQ(split_factorizations(2, 2, 1, 2, 1), (SplitWitness{2, 1, 2, 1, 1, 1, 1, 1}));
  EXPECT_EQ(split_factorizations(0, 0, 1, 0, 1), (SplitWitness{0, 1, 0, 1, 0, 1, 1, 1}));
}

TEST(SplitFactorizations, InconsistentInputsThrow) {
  EXPECT_THROW(split_factorizations(30, 6, 5, 10, 4), std::domain_error);
  EXPECT_THROW(split_factorizations(30, 5, 6, 10, 3), std::domain_error);  // U odd
  EXPECT_THROW(split_factorizations(36, 6, 6, 4, 9), std::domain_error);   // gcd(U, V) = 6
  EXPECT_THROW(split_factorizations(30, 6, 5, 15, 2), std::domain_error);  // V' even
}

// Factors A by trial division; A <= 10^9 keeps this cheap.
std::vector<std::pair<long, int>> factor(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

TEST(SplitFactorizations, RandomCoprimeFactorizations) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(1, 500000000L);
  for (int i = 0; i < 10000; ++i) {
    const long big_a = 2 * dist(rng);
    // Deal prime powers into a, b, c, d with the whole power of 2 in 2a.
    long a = 1, b = 1, c = 1, d = 1;
    for (auto [p, e] : factor(big_a)) {
      long pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      if (p == 2) {
        a *= pe / 2;
        continue;
      }
      switch (rng() % 4) {
        case 0: a *= pe; break;
        case 1: b *= pe; break;
        case 2: c *= pe; break;
        default: d *= pe; break;
      }
    }
    ASSERT_EQ(2 * a * b * c * d, big_a);
    const Integer u = 2 * a * b, v = c * d, up = 2 * a * c, vp = b * d;
    const auto s = split_factorizations(big_a, u, v, up, vp);
    ASSERT_EQ(s.a, a);
    ASSERT_EQ(s.b, b);
    ASSERT_EQ(s.c, c);
    ASSERT_EQ(s.d, d);
    ASSERT_EQ(s.u, 2 * s.a * s.b);
    ASSERT_EQ(s.v, s.c * s.d);
    ASSERT_EQ(s.u_prime, 2 * s.a * s.c);
    ASSERT_EQ(s.v_prime, s.b * s.d);
  }
}

TEST(Descend, Examples) {
  const auto fix = descend(0, 1);
  ASSERT_TRUE(succeeded(fix));
  EXPECT_TRUE(std::get<DescentOutcome>(fix).fixpoint);
  EXPECT_EQ(std::get<DescentOutcome>(fix).next, (AdPair{0, 1}));
  EXPECT_EQ(descent_step({0, 1}), (AdPair{0, 1}));

  const auto two = refutation_of(descend(2, 1));
  EXPECT_EQ(two.value, 65);
  EXPECT_EQ(two.step, "descend");
  const auto three = refutation_of(descend(3, 5));
  EXPECT_EQ(three.value, 61);
  EXPECT_EQ(three.subject, "4A^2+D^2");

  EXPECT_THROW(descent_step({2, 1}), DescentPreconditionError);
  try {
    descent_step({3, 5});
  } catch (const DescentPreconditionError& e) {
    EXPECT_EQ(e.refutation().value, 61);
  }
}

TEST(Descend, SignsAndDefects) {
  EXPECT_TRUE(std::get<DescentOutcome>(descend(0, -1)).fixpoint);
  EXPECT_EQ(refutation_of(descend(1, 2)).condition, Condition::kNotOdd);
  EXPECT_EQ(refutation_of(descend(3, 9)).condition, Condition::kNotCoprime);
}

TEST(SumIdentity, Examples) {
  EXPECT_TRUE(sum_identity_check(0, 1, 0, 1));
  EXPECT_THROW(sum_identity_check(1, 1, 0, 3), std::domain_error);
  EXPECT_THROW(sum_identity_check(1, 1, 1, 5), std::domain_error);
}

TEST(SumIdentity, SampledConstruction) {
  // n^2 = uv/4 with u = 4s^2, v = t^2; keep the cases where (4u+v)(u+v) is a square.
  for (long s = 0; s <= 300; ++s) {
    for (long t = 1; t <= 300; t += 2) {
      const Integer u = 4 * s * s, v = t * t, n = s * t;
      const auto x = is_perfect_square(Integer((4 * u + v) * (u + v)));
      if (!x) continue;
      if (4 * u * u + v * v != *x * *x - 20 * n * n) continue;
      EXPECT_TRUE(sum_identity_check(u, v, n, *x));
    }
  }
}

TEST(Refutations, ReplayAcrossPipeline) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(0, 2000);
  for (int i = 0; i < 2000; ++i) {
    const std::array<Integer, 4> squares{dist(rng), dist(rng), dist(rng), dist(rng)};
    const auto out = verify_window(std::span<const Integer, 4>(squares));
    if (const auto* r = std::get_if<Refutation>(&out)) {
      ASSERT_TRUE(r->replay()) << r->describe();
      ASSERT_EQ(condition_from_name(condition_name(r->condition)), r->condition);
    }
  }
  for (long a = 0; a < 50; ++a) {
    for (long d = 1; d < 50; d += 2) {
      const auto out = descend(a, d);
      if (const auto* r = std::get_if<Refutation>(&out)) ASSERT_TRUE(r->replay());
    }
  }
}

}  // namespace
}  // namespace fsq
