#include "fsq/rational.h"

#include <stdexcept>
#include <utility>

namespace fsq {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  if (sgn(den) < 0) throw std::domain_error("rational with negative denominator " + den.get_str());
  const Integer g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational::Rational(Integer num, Integer den, Normalize) {
  if (sgn(den) == 0) throw std::domain_error("division by zero");
  if (sgn(den) < 0) {
    num = -num;
    den = -den;
  }
  const Integer g = gcd(num, den);
  if (g != 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  *this = Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_, Normalize{});
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  *this = Rational(num_ * other.den_ - other.num_ * den_, den_ * other.den_, Normalize{});
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  *this = Rational(num_ * other.num_, den_ * other.den_, Normalize{});
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  *this = Rational(num_ * other.den_, den_ * other.num_, Normalize{});
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text[0] == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  return Rational(num, parse_integer(den_text));
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto num_root = is_perfect_square(q.num());
  if (!num_root) return std::nullopt;
  auto den_root = is_perfect_square(q.den());
  if (!den_root) return std::nullopt;
  return Rational(*num_root, *den_root);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace fsq
