#include "fsq/congruent.h"

#include <gtest/gtest.h>

#include <stdexcept>

namespace fsq {
namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

TEST(ApFromTriangle, Examples) {
  EXPECT_EQ(ap_from_triangle({40, 9, 41}), (ThreeSquareAP{q(31, 12), q(41, 12), q(49, 12), 5}));
  EXPECT_EQ(ap_from_triangle({4, 3, 5}), (ThreeSquareAP{q(1, 2), q(5, 2), q(7, 2), 6}));
  EXPECT_EQ(ap_from_triangle({12, 5, 13}), (ThreeSquareAP{q(7, 2), q(13, 2), q(17, 2), 30}));
}

TEST(ApFromTriangle, MiddleSquareOfTheFortyOneTriangle) {
  const auto ap = ap_from_triangle({40, 9, 41});
  EXPECT_EQ(ap.square_b(), q(1681, 144));
  EXPECT_EQ(ap.square_a(), ap.square_b() - Rational(5));
  EXPECT_EQ(ap.square_c(), ap.square_b() + Rational(5));
}

TEST(ApFromTriangle, RejectsDegenerate) {
  EXPECT_THROW(ap_from_triangle({0, 1, 1}), std::domain_error);
  EXPECT_THROW(ap_from_triangle({8, 6, 10}), std::domain_error);
}

TEST(TriangleFromAp, Examples) {
  const auto a = triangle_from_ap({q(1, 2), q(5, 2), q(7, 2), 6});
  EXPECT_EQ(a.leg1, Rational(3));
  EXPECT_EQ(a.leg2, Rational(4));
  EXPECT_EQ(a.hyp, Rational(5));
  EXPECT_EQ(a.primitive, (PrimitiveTriple{4, 3, 5}));

  const auto b = triangle_from_ap({q(31, 12), q(41, 12), q(49, 12), 5});
  EXPECT_EQ(b.leg1, q(3, 2));
  EXPECT_EQ(b.leg2, q(20, 3));
  EXPECT_EQ(b.hyp, q(41, 6));
  EXPECT_EQ(b.leg1 * b.leg2 / Rational(2), Rational(5));
  EXPECT_EQ(b.primitive, (PrimitiveTriple{40, 9, 41}));

  EXPECT_EQ(triangle_from_ap(ap_from_triangle({12, 5, 13})).primitive, (PrimitiveTriple{12, 5, 13}));
}

TEST(TriangleFromAp, RejectsInvalidProgressions) {
  EXPECT_THROW(triangle_from_ap({q(1, 2), q(5, 2), q(7, 2), 5}), std::domain_error);
  EXPECT_THROW(triangle_from_ap({q(1, 1), q(1, 1), q(1, 1), 1}), std::domain_error);
  EXPECT_THROW(triangle_from_ap({Rational(2), Rational(4), Rational(Integer(28), Integer(1)), 12}), std::domain_error);
}

TEST(Correspondence, InvariantsAndRoundTripUpToTenThousand) {
  for (const auto& t : enumerate_primitive_triples(10000)) {
    const auto ap = ap_from_triangle(t);
    const auto [k, m] = squarefree_split(area(t));
    ASSERT_EQ(ap.k, k);
    ASSERT_EQ(ap.square_b() - ap.square_a(), Rational(k));
    ASSERT_EQ(ap.square_c() - ap.square_b(), Rational(k));
    ASSERT_EQ(triangle_from_ap(ap).primitive, t);
  }
}

TEST(CertifyCongruent, Examples) {
  const auto five = certify_congruent(5, 50);
  ASSERT_TRUE(five.certificate.has_value());
  EXPECT_EQ(five.certificate->triple, (PrimitiveTriple{40, 9, 41}));
  EXPECT_EQ(five.certificate->m, 6);
  EXPECT_EQ(five.certificate->ap.square_b(), q(1681, 144));

  const auto six = certify_congruent(6, 10);
  ASSERT_TRUE(six.certificate.has_value());
  EXPECT_EQ(six.certificate->triple, (PrimitiveTriple{4, 3, 5}));
  EXPECT_EQ(six.certificate->m, 1);

  const auto one = certify_congruent(1, 10000);
  EXPECT_FALSE(one.certificate.has_value());
  EXPECT_EQ(one.hyp_bound, 10000);
  EXPECT_EQ(one.triangles_scanned, enumerate_primitive_triples(10000).size());
}

TEST(CertifyCongruent, Errors) {
  EXPECT_THROW(certify_congruent(4, 100), std::domain_error);
  EXPECT_THROW(certify_congruent(0, 100), std::domain_error);
  EXPECT_THROW(certify_congruent(5, 4), std::domain_error);
}

TEST(CertifyCongruent, AgreesWithSquarefreeSplitScan) {
  const long bound = 3000;
  const auto triples = enumerate_primitive_triples(bound);
  for (long k = 1; k <= 60; ++k) {
    if (!is_squarefree(k)) continue;
    std::optional<PrimitiveTriple> oracle;
    for (const auto& t : triples) {
      if (squarefree_split(area(t)).k == k) {
        oracle = t;
        break;
      }
    }
    const auto got = certify_congruent(k, bound);
    ASSERT_EQ(got.certificate.has_value(), oracle.has_value()) << k;
    if (oracle) {
      EXPECT_EQ(got.certificate->triple, *oracle) << k;
      EXPECT_FALSE(verify_certificate(*got.certificate).has_value()) << k;
    }
  }
}

TEST(CertifyCongruent, PartitionCountDoesNotChangeResult) {
  for (long k : {5L, 6L, 7L, 1L, 34L}) {
    const auto one = certify_congruent(k, 5000, 1);
    for (unsigned parts : {2u, 3u, 7u}) {
      const auto many = certify_congruent(k, 5000, parts);
      ASSERT_EQ(many.triangles_scanned, one.triangles_scanned) << k;
      ASSERT_EQ(many.certificate.has_value(), one.certificate.has_value()) << k;
      if (one.certificate) ASSERT_EQ(many.certificate->triple, one.certificate->triple);
    }
  }
}

TEST(VerifyCertificate, DetectsTampering) {
  auto cert = *certify_congruent(5, 50).certificate;
  EXPECT_FALSE(verify_certificate(cert).has_value());
  auto bad = cert;
  bad.m = 5;
  EXPECT_TRUE(verify_certificate(bad).has_value());
  bad = cert;
  bad.ap.b = q(40, 12);
  EXPECT_TRUE(verify_certificate(bad).has_value());
  bad = cert;
  bad.triple.odd_leg = 11;
  EXPECT_TRUE(verify_certificate(bad).has_value());
}

}  // namespace
}  // namespace fsq
