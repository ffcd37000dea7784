#include "fsq/curves.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fsq/partition.h"

namespace fsq {
namespace {

Rational cubic(const Rational& x) {
  return x * x * x + Rational(Weierstrass::kA2) * x * x + Rational(Weierstrass::kA4) * x +
         Rational(Weierstrass::kA6);
}

void require_on_e(const EPoint& p) {
  if (!on_e(p)) throw std::domain_error("point " + p.to_string() + " is not on y^2 = x^3 + 5x^2 + 4x");
}

// Positive divisors of |n|, n != 0.
std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  const Integer m = abs(n);
  for (Integer d = 1; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

// Integer roots of x^3 + a2 x^2 + a4 x + a6 - c.
std::vector<Integer> cubic_integer_roots(const Integer& c) {
  const Integer a2 = Weierstrass::kA2;
  const Integer a4 = Weierstrass::kA4;
  const Integer constant = Integer(Weierstrass::kA6) - c;
  std::set<Integer> candidates;
  if (sgn(constant) != 0) {
    for (const auto& d : divisors(constant)) {
      candidates.insert(d);
      candidates.insert(-d);
    }
  } else {
    // x * (x^2 + a2 x + a4)
    candidates.insert(0);
    if (sgn(a4) != 0) {
      for (const auto& d : divisors(a4)) {
        candidates.insert(d);
        candidates.insert(-d);
      }
    } else {
      candidates.insert(-a2);
    }
  }
  std::vector<Integer> roots;
  for (const auto& x : candidates) {
    if (x * x * x + a2 * x * x + a4 * x + constant == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace

Integer cubic_discriminant() {
  const Integer a = Weierstrass::kA2;
  const Integer b = Weierstrass::kA4;
  const Integer c = Weierstrass::kA6;
  return a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
}

std::strong_ordering operator<=>(const EPoint& a, const EPoint& b) {
  if (a.infinity_ || b.infinity_) {
    if (a.infinity_ && b.infinity_) return std::strong_ordering::equal;
    return a.infinity_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  return a.y_ <=> b.y_;
}

std::string EPoint::to_string() const {
  if (infinity_) return "O";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

Rational quartic_residual(const Rational& x, const Rational& y) {
  return y * y - (x * x - Rational(5)) * y + Rational(4);
}

Rational e_residual(const Rational& x, const Rational& y) { return y * y - cubic(x); }

bool on_quartic(const Rational& x, const Rational& y) { return quartic_residual(x, y).is_zero(); }
bool on_quartic(const QuarticPoint& q) { return on_quartic(q.x, q.y); }

bool on_e(const EPoint& p) { return p.is_infinity() || e_residual(p.x(), p.y()).is_zero(); }

EPoint quartic_to_e(const QuarticPoint& q) {
  if (!on_quartic(q)) {
    throw std::domain_error("point (" + q.x.to_string() + ", " + q.y.to_string() +
                            ") is not on Y^2 - (X^2 - 5)Y + 4 = 0");
  }
  EPoint p = EPoint::affine(q.y, q.x * q.y);
  if (!on_e(p)) throw std::logic_error("image of a quartic point is off E");
  return p;
}

QuarticPoint e_to_quartic(const EPoint& p) {
  if (p.is_infinity()) throw std::domain_error("the point at infinity has no quartic image");
  require_on_e(p);
  if (p.x().is_zero()) throw std::domain_error("x = 0 has no quartic image");
  QuarticPoint q{p.y() / p.x(), p.x()};
  if (!on_quartic(q)) throw std::logic_error("image of a point of E is off the quartic");
  return q;
}

QuarticPoint conjugate(const QuarticPoint& q) {
  if (!on_quartic(q)) throw std::domain_error("conjugate of an off-curve point");
  // Y is never zero on C: the constant term is 4.
  return {q.x, Rational(4) / q.y};
}

Rational window_abscissa(const Rational& x, const Rational& n) {
  if (n.is_zero()) throw std::domain_error("degenerate window (n = 0) has no curve point");
  return x / (Rational(2) * n);
}

QuarticPoint window_to_quartic(const Rational& x, const Rational& n, const Rational& y) {
  if (n.is_zero()) throw std::domain_error("degenerate window (n = 0) has no curve point");
  const Rational x2 = x * x;
  const Rational n2 = n * n;
  if (y * y != (x2 - Rational(4) * n2) * (x2 - Rational(36) * n2)) {
    throw std::domain_error("y^2 != (x^2-4n^2)(x^2-36n^2)");
  }
  const Rational eight_n2 = Rational(8) * n2;
  QuarticPoint q{window_abscissa(x, n), (x2 - Rational(20) * n2 + y) / eight_n2};
  // The numerator over 8n^2 may cancel further but never grows the
  // denominator.
  if (!(eight_n2 / Rational(q.y.den())).is_integer()) throw std::logic_error("Y denominator does not divide 8n^2");
  if (!on_quartic(q)) throw std::logic_error("window image is off the quartic");
  return q;
}

Window quartic_to_window(const QuarticPoint& q) {
  if (!on_quartic(q)) throw std::domain_error("preimage of an off-curve point");
  const Rational x = Rational(2) * q.x;
  return {x, Rational(1), Rational(8) * q.y - x * x + Rational(20)};
}

bool window_is_degenerate(const Window& w) {
  if (w.n.is_zero()) return true;
  const Rational x2 = w.x * w.x;
  const Rational n2 = w.n * w.n;
  if ((x2 - Rational(4) * n2).is_zero() || (x2 - Rational(36) * n2).is_zero()) return true;
  const Rational six_n = Rational(6) * abs(w.n);
  return (w.x - six_n).sign() < 0;
}

EPoint e_neg(const EPoint& p) {
  require_on_e(p);
  if (p.is_infinity()) return p;
  return EPoint::affine(p.x(), -p.y());
}

EPoint e_add(const EPoint& p, const EPoint& q) {
  require_on_e(p);
  require_on_e(q);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Rational a2(Weierstrass::kA2);
  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y().is_zero()) return EPoint::infinity();
    slope = (Rational(3) * p.x() * p.x() + Rational(2) * a2 * p.x() + Rational(Weierstrass::kA4)) /
            (Rational(2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  const Rational x3 = slope * slope - a2 - p.x() - q.x();
  const Rational y3 = slope * (p.x() - x3) - p.y();
  EPoint r = EPoint::affine(x3, y3);
  if (!on_e(r)) throw std::logic_error("group law left the curve");
  return r;
}

EPoint e_mul(const Integer& k, const EPoint& p) {
  require_on_e(p);
  EPoint base = sgn(k) < 0 ? e_neg(p) : p;
  Integer e = abs(k);
  EPoint acc = EPoint::infinity();
  while (sgn(e) > 0) {
    if (is_odd(e)) acc = e_add(acc, base);
    base = e_add(base, base);
    e >>= 1;
  }
  return acc;
}

std::optional<int> e_order(const EPoint& p, int max_order) {
  require_on_e(p);
  EPoint q = p;
  for (int k = 1; k <= max_order; ++k) {
    if (q.is_infinity()) return k;
    q = e_add(q, p);
  }
  return std::nullopt;
}

std::vector<EPoint> torsion_points() {
  const Integer disc = cubic_discriminant();
  std::vector<Integer> ys{Integer(0)};
  for (Integer y = 1; y * y <= abs(disc); ++y) {
    if (mpz_divisible_p(disc.get_mpz_t(), Integer(y * y).get_mpz_t())) ys.push_back(y);
  }
  std::vector<EPoint> out{EPoint::infinity()};
  for (const auto& y : ys) {
    for (const auto& x : cubic_integer_roots(Integer(y * y))) {
      for (const Integer& signed_y : {y, Integer(-y)}) {
        EPoint p = EPoint::affine(Rational(x), Rational(signed_y));
        if (e_order(p)) out.push_back(p);
        if (sgn(y) == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<EPoint> naive_point_search(const Integer& height_bound, unsigned partitions) {
  if (height_bound < 1 || height_bound > 1000000000) {
    throw std::domain_error("height bound must be in [1, 10^9]");
  }
  const std::int64_t h = height_bound.get_si();
  // x = p/q lies on E iff p(p+q)(p+4q)q is a square s^2; then y = +-s/q^2.
  auto scan = [h](Range r) {
    std::vector<EPoint> found;
    for (std::uint64_t i = r.lo; i <= r.hi; ++i) {
      const std::int64_t p = static_cast<std::int64_t>(i) - h;
      for (std::int64_t q = 1; q <= h; ++q) {
        if (std::gcd(p, q) != 1) continue;
        const i128 value = static_cast<i128>(p) * (p + q) * (p + 4 * q) * q;
        if (value < 0) continue;
        const auto s = square_root_u128(static_cast<u128>(value));
        if (!s) continue;
        const Rational x{Integer(p), Integer(q)};
        const Rational y(from_u128(*s), Integer(q) * q);
        found.push_back(EPoint::affine(x, y));
        if (!y.is_zero()) found.push_back(EPoint::affine(x, -y));
      }
    }
    return found;
  };
  std::vector<EPoint> out;
  for (auto& part : run_partitioned(0, static_cast<std::uint64_t>(2 * h), partitions, scan)) {
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fsq
