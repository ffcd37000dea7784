#include "fsq/pythagoras.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace fsq {
namespace {

using Tuple = std::tuple<Integer, Integer, Integer>;

// Brute-force inverse: scan u, v <= limit for 4uv = even leg, 4u^2 + v^2 = hyp.
std::optional<ParamPair> grid_params(const PrimitiveTriple& t, int limit) {
  for (int u = 1; u <= limit; ++u) {
    for (int v = 1; v <= limit; ++v) {
      if (4 * u * v == t.even_leg && 4 * u * u + v * v == t.hyp) return ParamPair{u, v};
    }
  }
  return std::nullopt;
}

// Euclid's parametrization (2mn, m^2 - n^2, m^2 + n^2), m > n >= 1 coprime of
// opposite parity; independent of the (u, v) form.
std::set<Tuple> euclid_oracle(long bound) {
  std::set<Tuple> out;
  for (long m = 2; m * m + 1 <= bound; ++m) {
    for (long n = 1; n < m && m * m + n * n <= bound; ++n) {
      if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
      out.emplace(Integer(2 * m * n), Integer(m * m - n * n), Integer(m * m + n * n));
    }
  }
  return out;
}

TEST(TripleFromParams, Examples) {
  EXPECT_EQ(triple_from_params({1, 1}), (PrimitiveTriple{4, 3, 5}));
  EXPECT_EQ(triple_from_params({2, 5}), (PrimitiveTriple{40, 9, 41}));
  EXPECT_EQ(triple_from_params({1, 3}), (PrimitiveTriple{12, 5, 13}));
  EXPECT_EQ(triple_from_params({0, 1}), (PrimitiveTriple{0, 1, 1}));
}

TEST(TripleFromParams, RejectsNonCoprime) {
  EXPECT_THROW(triple_from_params({1, 2}), std::domain_error);  // v even
  EXPECT_THROW(triple_from_params({3, 3}), std::domain_error);
  EXPECT_THROW(triple_from_params({0, 3}), std::domain_error);
  EXPECT_THROW(triple_from_params({-1, 1}), std::domain_error);
}

TEST(ParamsFromTriple, ExamplesMatchGridOracle) {
  for (const PrimitiveTriple t : {PrimitiveTriple{40, 9, 41}, PrimitiveTriple{4, 3, 5}, PrimitiveTriple{12, 5, 13}}) {
    const auto oracle = grid_params(t, 10);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(params_from_triple(t), *oracle);
  }
  EXPECT_EQ(params_from_triple({40, 9, 41}), (ParamPair{2, 5}));
  EXPECT_EQ(params_from_triple({0, 1, 1}), (ParamPair{0, 1}));
}

TEST(ParamsFromTriple, RejectsBadTriples) {
  EXPECT_THROW(params_from_triple({8, 6, 10}), std::domain_error);   // not primitive
  EXPECT_THROW(params_from_triple({4, 3, 6}), std::domain_error);    // not Pythagorean
  EXPECT_THROW(params_from_triple({6, 8, 10}), std::domain_error);   // even leg not 0 mod 4
  EXPECT_THROW(params_from_triple({-4, 3, 5}), std::domain_error);
}

TEST(ParamsFromTriple, RoundTripOnGrid) {
  for (long u = 1; u <= 200; ++u) {
    for (long v = 1; v <= 200; ++v) {
      if (std::gcd(2 * u, v) != 1) continue;
      const ParamPair p{u, v};
      ASSERT_EQ(params_from_triple(triple_from_params(p)), p) << u << "," << v;
    }
  }
}

TEST(Enumerate, SmallBounds) {
  EXPECT_EQ(enumerate_primitive_triples(5), (std::vector<PrimitiveTriple>{{4, 3, 5}}));
  EXPECT_EQ(enumerate_primitive_triples(13), (std::vector<PrimitiveTriple>{{4, 3, 5}, {12, 5, 13}}));
  const auto upto41 = enumerate_primitive_triples(41);
  EXPECT_NE(std::find(upto41.begin(), upto41.end(), PrimitiveTriple{40, 9, 41}), upto41.end());
}

TEST(Enumerate, MatchesEuclidOracleAndIsSorted) {
  const long bound = 20000;
  const auto triples = enumerate_primitive_triples(bound);
  EXPECT_TRUE(std::is_sorted(triples.begin(), triples.end()));
  EXPECT_EQ(std::adjacent_find(triples.begin(), triples.end()), triples.end());
  std::set<Tuple> got;
  for (const auto& t : triples) {
    ASSERT_NO_THROW(validate_triple(t));
    // Oracle orders legs as (2mn, m^2 - n^2): the even leg is 2mn.
    got.emplace(t.even_leg, t.odd_leg, t.hyp);
  }
  EXPECT_EQ(got, euclid_oracle(bound));
}

TEST(Enumerate, PartitionedRangesUnionToWhole) {
  const auto whole = enumerate_primitive_triples(5000);
  std::vector<PrimitiveTriple> pieces;
  for (const auto& [lo, hi] : {std::pair{1, 1000}, std::pair{1001, 1001}, std::pair{1002, 5000}}) {
    auto part = enumerate_primitive_triples_in(lo, hi);
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  EXPECT_EQ(pieces, whole);
}

TEST(Area, Examples) {
  EXPECT_EQ(area({40, 9, 41}), 180);
  EXPECT_EQ(area({4, 3, 5}), 6);
  EXPECT_EQ(area({12, 5, 13}), 30);
}

}  // namespace
}  // namespace fsq
