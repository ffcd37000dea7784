#ifndef FSQ_RATIONAL_H_
#define FSQ_RATIONAL_H_

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "fsq/integer.h"

namespace fsq {

// An exact fraction, always in lowest terms with a strictly positive
// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& value) : num_(value), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(long value) : num_(value), den_(1) {}            // NOLINT(runtime/explicit)

  // Throws std::domain_error if den is zero or negative.
  Rational(const Integer& num, const Integer& den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return sgn(num_) == 0; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  struct Normalize {};
  Rational(Integer num, Integer den, Normalize);

  Integer num_;
  Integer den_;
};

// Accepts "p" or "p/q" with q > 0. Throws std::invalid_argument on
// malformed text and std::domain_error on a zero or negative denominator.
Rational parse_rational(std::string_view text);

// Root r >= 0 with r * r == q, if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

Rational abs(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace fsq

#endif  // FSQ_RATIONAL_H_
