#ifndef FSQ_CONGRUENT_H_
#define FSQ_CONGRUENT_H_

// The correspondence between rational right triangles of area k and three
// rational squares in arithmetic progression with common difference k.

#include <cstdint>
#include <optional>
#include <string>

#include "fsq/integer.h"
#include "fsq/pythagoras.h"
#include "fsq/rational.h"

namespace fsq {

// Square roots a < b < c of three rational squares with
// b^2 - a^2 == c^2 - b^2 == k, k squarefree. The squares themselves are
// derived on demand.
struct ThreeSquareAP {
  Rational a;
  Rational b;
  Rational c;
  Integer k;

  Rational square_a() const { return a * a; }
  Rational square_b() const { return b * b; }
  Rational square_c() const { return c * c; }

  friend bool operator==(const ThreeSquareAP&, const ThreeSquareAP&) = default;
};

// Throws std::domain_error naming the violated condition.
void validate(const ThreeSquareAP& ap);

// With area(t) = k * m^2: a = |p - q| / 2m, b = hyp / 2m, c = (p + q) / 2m.
ThreeSquareAP ap_from_triangle(const PrimitiveTriple& t);

struct RationalTriangle {
  Rational leg1;  // c - a
  Rational leg2;  // c + a
  Rational hyp;   // 2b
  PrimitiveTriple primitive;
};

RationalTriangle triangle_from_ap(const ThreeSquareAP& ap);

struct CongruentCertificate {
  Integer k;
  PrimitiveTriple triple;
  Integer m;  // area(triple) == k * m^2
  ThreeSquareAP ap;
};

// Re-derives every claim of the certificate from its raw integers. Returns the
// first failed check, or nullopt when the certificate is sound.
std::optional<std::string> verify_certificate(const CongruentCertificate& cert);

// Outcome of a bounded search. An empty certificate means only "no triangle
// with hyp <= hyp_bound", never "k is not congruent".
struct CongruentSearch {
  Integer k;
  Integer hyp_bound;
  std::uint64_t triangles_scanned = 0;
  std::optional<CongruentCertificate> certificate;
};

// Smallest-hypotenuse primitive triangle (ties by even leg) whose area has
// squarefree part k. Throws std::domain_error if k is not squarefree or
// hyp_bound < 5.
CongruentSearch certify_congruent(const Integer& k, const Integer& hyp_bound, unsigned partitions = 1);

}  // namespace fsq

#endif  // FSQ_CONGRUENT_H_
