#ifndef FSQ_CURVES_H_
#define FSQ_CURVES_H_

// The quartic C: Y^2 - (X^2 - 5)Y + 4 = 0 and the elliptic curve
// E: y^2 = x(x+1)(x+4) = x^3 + 5x^2 + 4x (Cremona 24A1), related by
// x = Y, y = XY. A four-squares window (x, n) with y^2 = (x^2-4n^2)(x^2-36n^2)
// lands on C at X = x/2n, Y = (x^2 - 20n^2 + y)/8n^2.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fsq/integer.h"
#include "fsq/rational.h"

namespace fsq {

// Coefficients of E in the form y^2 = x^3 + a2 x^2 + a4 x + a6.
struct Weierstrass {
  static constexpr long kA2 = 5;
  static constexpr long kA4 = 4;
  static constexpr long kA6 = 0;
};

// Discriminant of x^3 + a2 x^2 + a4 x + a6 (144 for E).
Integer cubic_discriminant();

struct QuarticPoint {
  Rational x;  // X
  Rational y;  // Y

  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

class EPoint {
 public:
  static EPoint infinity() { return EPoint(); }
  // No curve check; see on_e().
  static EPoint affine(Rational x, Rational y) { return EPoint(std::move(x), std::move(y)); }

  bool is_infinity() const { return infinity_; }
  // Precondition: !is_infinity().
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const EPoint&, const EPoint&) = default;
  // Infinity first, then by (x, y).
  friend std::strong_ordering operator<=>(const EPoint& a, const EPoint& b);

  std::string to_string() const;

 private:
  EPoint() = default;
  EPoint(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool infinity_ = true;
  Rational x_;
  Rational y_;
};

// Y^2 - (X^2 - 5)Y + 4; zero exactly on C.
Rational quartic_residual(const Rational& x, const Rational& y);
// y^2 - (x^3 + 5x^2 + 4x); zero exactly on E.
Rational e_residual(const Rational& x, const Rational& y);

bool on_quartic(const Rational& x, const Rational& y);
bool on_quartic(const QuarticPoint& q);
bool on_e(const EPoint& p);

// (X, Y) -> (Y, XY). Throws std::domain_error off C.
EPoint quartic_to_e(const QuarticPoint& q);
// (x, y) -> (y/x, x). Throws std::domain_error at infinity, at x == 0, or
// off E.
QuarticPoint e_to_quartic(const EPoint& p);

// The other point of C over the same X: Y' = 4/Y.
QuarticPoint conjugate(const QuarticPoint& q);

// X = x/2n.
Rational window_abscissa(const Rational& x, const Rational& n);

// Throws std::domain_error if n == 0 or y^2 != (x^2-4n^2)(x^2-36n^2).
QuarticPoint window_to_quartic(const Rational& x, const Rational& n, const Rational& y);

// A window (x, n = 1, y) mapping to q under window_to_quartic.
struct Window {
  Rational x;
  Rational n;
  Rational y;
};
Window quartic_to_window(const QuarticPoint& q);

// True when the window cannot be four distinct nonnegative squares: one of
// x^2-4n^2, x^2-36n^2 vanishes, n == 0, or a term x-6n < 0.
bool window_is_degenerate(const Window& w);

// Chord-and-tangent group law; infinity is the identity. Throw
// std::domain_error on off-curve input.
EPoint e_neg(const EPoint& p);
EPoint e_add(const EPoint& p, const EPoint& q);
EPoint e_mul(const Integer& k, const EPoint& p);

// Order of p if it is at most max_order, else nullopt.
std::optional<int> e_order(const EPoint& p, int max_order = 12);

// All rational torsion points via Nagell-Lutz: integral points with y == 0 or
// y^2 | disc, kept when some multiple up to 12 is infinity. Sorted.
std::vector<EPoint> torsion_points();

// All affine points with x = p/q in lowest terms, |p| <= bound, 1 <= q <=
// bound. Sorted. Throws std::domain_error unless 1 <= bound <= 10^9.
std::vector<EPoint> naive_point_search(const Integer& height_bound, unsigned partitions = 1);

}  // namespace fsq

#endif  // FSQ_CURVES_H_
