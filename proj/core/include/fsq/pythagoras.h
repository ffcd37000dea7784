#ifndef FSQ_PYTHAGORAS_H_
#define FSQ_PYTHAGORAS_H_

#include <compare>
#include <vector>

#include "fsq/integer.h"

namespace fsq {

// Parameters of a primitive triple in the form (4uv, |4u^2 - v^2|, 4u^2 + v^2).
// Requires gcd(2u, v) == 1, so v is odd. u == 0 (which forces v == 1) is the
// degenerate pair behind the triple (0, 1, 1).
struct ParamPair {
  Integer u;
  Integer v;

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

// A primitive right triangle, even leg first. The even leg is divisible by 4.
// (0, 1, 1) is representable as a degenerate form; it never comes out of
// enumeration.
struct PrimitiveTriple {
  Integer even_leg;
  Integer odd_leg;
  Integer hyp;

  bool is_degenerate() const { return sgn(even_leg) == 0; }

  friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;
  // Orders by (hyp, even_leg), the enumeration order.
  friend std::strong_ordering operator<=>(const PrimitiveTriple& a, const PrimitiveTriple& b);
};

// Throws std::domain_error naming the first violated condition.
void validate_params(const ParamPair& p);
void validate_triple(const PrimitiveTriple& t);

// True when 4u^2 > v^2, i.e. 4u^2 - v^2 is positive.
bool odd_leg_sign_positive(const ParamPair& p);

PrimitiveTriple triple_from_params(const ParamPair& p);

// Inverse of triple_from_params. Throws std::domain_error for non-Pythagorean
// or non-primitive input.
ParamPair params_from_triple(const PrimitiveTriple& t);

// All primitive triples with hyp <= hyp_bound, ordered by (hyp, even_leg).
std::vector<PrimitiveTriple> enumerate_primitive_triples(const Integer& hyp_bound);

// Primitive triples with hyp_lo <= hyp <= hyp_hi, in enumeration order. The
// union over a partition of [5, bound] equals enumerate_primitive_triples.
std::vector<PrimitiveTriple> enumerate_primitive_triples_in(const Integer& hyp_lo,
                                                            const Integer& hyp_hi);

// even_leg * odd_leg / 2.
Integer area(const PrimitiveTriple& t);

}  // namespace fsq

#endif  // FSQ_PYTHAGORAS_H_
