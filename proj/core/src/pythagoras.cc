#include "fsq/pythagoras.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fsq {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::domain_error(what); }

std::string show(const PrimitiveTriple& t) {
  return "(" + t.even_leg.get_str() + ", " + t.odd_leg.get_str() + ", " + t.hyp.get_str() + ")";
}

}  // namespace

std::strong_ordering operator<=>(const PrimitiveTriple& a, const PrimitiveTriple& b) {
  if (int c = cmp(a.hyp, b.hyp); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a.even_leg, b.even_leg); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c = cmp(a.odd_leg, b.odd_leg);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

void validate_params(const ParamPair& p) {
  if (sgn(p.u) < 0 || sgn(p.v) < 1) {
    fail("parameters need u >= 0 and v >= 1, got u=" + p.u.get_str() + " v=" + p.v.get_str());
  }
  if (gcd(Integer(2 * p.u), p.v) != 1) {
    fail("parameters need gcd(2u, v) = 1, got u=" + p.u.get_str() + " v=" + p.v.get_str());
  }
}

void validate_triple(const PrimitiveTriple& t) {
  if (sgn(t.even_leg) < 0 || sgn(t.odd_leg) < 1 || sgn(t.hyp) < 1) {
    fail("triple sides must be positive: " + show(t));
  }
  if (!mpz_divisible_ui_p(t.even_leg.get_mpz_t(), 4)) fail("even leg not divisible by 4: " + show(t));
  if (t.even_leg * t.even_leg + t.odd_leg * t.odd_leg != t.hyp * t.hyp) {
    fail("not a Pythagorean triple: " + show(t));
  }
  if (gcd(t.even_leg, t.odd_leg) != 1) fail("triple not primitive: " + show(t));
}

bool odd_leg_sign_positive(const ParamPair& p) { return 4 * p.u * p.u > p.v * p.v; }

PrimitiveTriple triple_from_params(const ParamPair& p) {
  validate_params(p);
  const Integer four_u2 = 4 * p.u * p.u;
  const Integer v2 = p.v * p.v;
  return {Integer(4 * p.u * p.v), abs(Integer(four_u2 - v2)), Integer(four_u2 + v2)};
}

ParamPair params_from_triple(const PrimitiveTriple& t) {
  validate_triple(t);
  // (2u + v)^2 = hyp + even_leg and (2u - v)^2 = hyp - even_leg.
  const auto sum = is_perfect_square(Integer(t.hyp + t.even_leg));
  const auto diff = is_perfect_square(Integer(t.hyp - t.even_leg));
  if (!sum || !diff) fail("no integral parameters for " + show(t));
  // Either 2u - v = +diff or -diff; exactly one choice makes v odd.
  for (const Integer& signed_diff : {*diff, Integer(-*diff)}) {
    const Integer four_u = *sum + signed_diff;
    const Integer two_v = *sum - signed_diff;
    if (!mpz_divisible_ui_p(four_u.get_mpz_t(), 4) || !mpz_divisible_ui_p(two_v.get_mpz_t(), 2)) continue;
    ParamPair p{four_u / 4, two_v / 2};
    if (sgn(p.v) < 1 || is_even(p.v)) continue;
    if (triple_from_params(p) == t) return p;
  }
  fail("no integral parameters for " + show(t));
}

std::vector<PrimitiveTriple> enumerate_primitive_triples_in(const Integer& hyp_lo,
                                                            const Integer& hyp_hi) {
  std::vector<PrimitiveTriple> out;
  for (Integer u = 1; 4 * u * u + 1 <= hyp_hi; ++u) {
    const Integer four_u2 = 4 * u * u;
    for (Integer v = 1; four_u2 + v * v <= hyp_hi; v += 2) {
      const Integer hyp = four_u2 + v * v;
      if (hyp < hyp_lo || gcd(u, v) != 1) continue;
      out.push_back({Integer(4 * u * v), abs(Integer(four_u2 - v * v)), hyp});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimitiveTriple> enumerate_primitive_triples(const Integer& hyp_bound) {
  return enumerate_primitive_triples_in(Integer(1), hyp_bound);
}

Integer area(const PrimitiveTriple& t) { return t.even_leg * t.odd_leg / 2; }

}  // namespace fsq
