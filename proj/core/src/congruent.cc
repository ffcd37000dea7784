#include "fsq/congruent.h"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "fsq/partition.h"

namespace fsq {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::domain_error(what); }

// Clears denominators of three rationals and divides out the common factor.
std::array<Integer, 3> primitive_integers(const Rational& x, const Rational& y, const Rational& z) {
  const Integer l = lcm(lcm(x.den(), y.den()), z.den());
  std::array<Integer, 3> out{x.num() * (l / x.den()), y.num() * (l / y.den()), z.num() * (l / z.den())};
  const Integer g = gcd(gcd(out[0], out[1]), out[2]);
  for (auto& v : out) v /= g;
  return out;
}

}  // namespace

void validate(const ThreeSquareAP& ap) {
  if (sgn(ap.k) < 1 || !is_squarefree(ap.k)) fail("common difference " + ap.k.get_str() + " is not a squarefree positive integer");
  if (ap.a.sign() < 0) fail("root a is negative");
  if (!(ap.a < ap.b && ap.b < ap.c)) fail("roots are not strictly increasing");
  const Rational k(ap.k);
  if (ap.square_b() - ap.square_a() != k) fail("b^2 - a^2 differs from k");
  if (ap.square_c() - ap.square_b() != k) fail("c^2 - b^2 differs from k");
}

ThreeSquareAP ap_from_triangle(const PrimitiveTriple& t) {
  validate_triple(t);
  if (t.is_degenerate()) fail("degenerate triple has no congruent-number progression");
  const auto [k, m] = squarefree_split(area(t));
  const Integer two_m = 2 * m;
  ThreeSquareAP ap{Rational(abs(Integer(t.even_leg - t.odd_leg)), two_m), Rational(t.hyp, two_m),
                   Rational(Integer(t.even_leg + t.odd_leg), two_m), k};
  validate(ap);
  return ap;
}

RationalTriangle triangle_from_ap(const ThreeSquareAP& ap) {
  validate(ap);
  RationalTriangle tri{ap.c - ap.a, ap.c + ap.a, ap.b + ap.b, {}};
  auto [p, q, h] = primitive_integers(tri.leg1, tri.leg2, tri.hyp);
  if (is_odd(p)) std::swap(p, q);
  tri.primitive = {p, q, h};
  validate_triple(tri.primitive);
  if (tri.leg1 * tri.leg2 != Rational(2 * ap.k)) fail("triangle area differs from k");
  return tri;
}

std::optional<std::string> verify_certificate(const CongruentCertificate& cert) {
  const auto& t = cert.triple;
  if (sgn(t.even_leg) < 1 || sgn(t.odd_leg) < 1) return "triangle legs must be positive";
  if (t.even_leg * t.even_leg + t.odd_leg * t.odd_leg != t.hyp * t.hyp) return "Pythagorean identity fails";
  if (gcd(t.even_leg, t.odd_leg) != 1) return "triangle is not primitive";
  if (sgn(cert.k) < 1 || !is_squarefree(cert.k)) return "k is not squarefree";
  if (sgn(cert.m) < 1) return "scale m must be positive";
  if (t.even_leg * t.odd_leg != 2 * cert.k * cert.m * cert.m) return "area differs from k*m^2";
  if (cert.ap.k != cert.k) return "progression difference differs from k";
  // The squares, cleared of the common denominator 4m^2, must be integers in
  // arithmetic progression with difference 4k m^2.
  const Rational scale(4 * cert.m * cert.m);
  const Rational sa = cert.ap.square_a() * scale;
  const Rational sb = cert.ap.square_b() * scale;
  const Rational sc = cert.ap.square_c() * scale;
  if (!sa.is_integer() || !sb.is_integer() || !sc.is_integer()) return "squares do not share denominator 4m^2";
  const Integer diff = 4 * cert.k * cert.m * cert.m;
  if (sb.num() - sa.num() != diff || sc.num() - sb.num() != diff) return "squares are not in progression with difference k";
  const Integer p = t.even_leg;
  const Integer q = t.odd_leg;
  if (sa.num() != (p - q) * (p - q) || sb.num() != t.hyp * t.hyp || sc.num() != (p + q) * (p + q)) {
    return "roots do not match the triangle";
  }
  if (cert.ap.a.sign() < 0 || !(cert.ap.a < cert.ap.b && cert.ap.b < cert.ap.c)) return "roots are not increasing";
  return std::nullopt;
}

CongruentSearch certify_congruent(const Integer& k, const Integer& hyp_bound, unsigned partitions) {
  if (sgn(k) < 1 || !is_squarefree(k)) fail("k = " + k.get_str() + " is not a squarefree positive integer");
  if (hyp_bound < 5) fail("hyp bound must be at least 5");
  if (!hyp_bound.fits_ulong_p()) fail("hyp bound too large");

  struct Partial {
    std::uint64_t scanned = 0;
    std::optional<CongruentCertificate> best;
  };
  // Squarefree part of the area is k exactly when k | area and area / k is a
  // square.
  auto scan = [&k](Range r) {
    Partial out;
    for (const auto& t : enumerate_primitive_triples_in(Integer(r.lo), Integer(r.hi))) {
      ++out.scanned;
      const Integer a = area(t);
      if (!mpz_divisible_p(a.get_mpz_t(), k.get_mpz_t())) continue;
      if (auto m = is_perfect_square(Integer(a / k))) {
        out.best = CongruentCertificate{k, t, *m, ap_from_triangle(t)};
        break;
      }
    }
    return out;
  };
  const auto parts = run_partitioned(5, hyp_bound.get_ui(), partitions, scan);

  CongruentSearch result{k, hyp_bound, 0, std::nullopt};
  for (const auto& part : parts) {
    // Scan counts stop at the first hit in each piece; report the count a
    // sequential scan would have needed so output is partition-independent.
    if (result.certificate) break;
    result.triangles_scanned += part.scanned;
    if (part.best) result.certificate = part.best;
  }
  return result;
}

}  // namespace fsq
