#include "fsq/descent.h"

#include <algorithm>
#include <stdexcept>

#include "fsq/pythagoras.h"

namespace fsq {
namespace {

void record(Trace* trace, std::string label, const Integer& value) {
  if (trace) trace->push_back({std::move(label), value, false, std::nullopt});
}

void record_square(Trace* trace, std::string label, const Integer& value,
                   const std::optional<Integer>& root) {
  if (trace) trace->push_back({std::move(label), value, true, root});
}

Refutation refute(std::string step, Condition c, std::string subject, Integer value) {
  return {std::move(step), c, std::move(subject), std::move(value)};
}

[[noreturn]] void broken(const std::string& what) {
  throw std::logic_error("identity violated: " + what);
}

// Square test that records itself in the trace.
std::optional<Integer> square_test(Trace* trace, const std::string& label, const Integer& value) {
  auto root = is_perfect_square(value);
  record_square(trace, label, value, root);
  return root;
}

}  // namespace

// --- FourApCandidate ---------------------------------------------------------

Outcome<FourApCandidate> FourApCandidate::check(const Integer& x, const Integer& n) {
  const char* step = "window";
  if (sgn(x) <= 0) return refute(step, Condition::kNotPositive, "x", x);
  if (is_even(x)) return refute(step, Condition::kNotOdd, "x", x);
  const Integer abs_n = abs(n);
  const Integer g = gcd(x, abs_n);
  if (g != 1) return refute(step, Condition::kNotCoprime, "gcd(x,n)", g);
  return FourApCandidate(x, abs_n);
}

FourApCandidate FourApCandidate::make(const Integer& x, const Integer& n) {
  auto c = check(x, n);
  if (auto* r = std::get_if<Refutation>(&c)) throw std::domain_error("invalid window: " + r->describe());
  return std::get<FourApCandidate>(std::move(c));
}

std::array<Integer, 4> FourApCandidate::terms() const {
  return {x_ - 6 * n_, x_ - 2 * n_, x_ + 2 * n_, x_ + 6 * n_};
}

QuarticRhs quartic_rhs(const Integer& x, const Integer& n) {
  const Integer x2 = x * x;
  const Integer n2 = n * n;
  const Integer product_form = (x2 - 4 * n2) * (x2 - 36 * n2);
  const Integer middle = x2 - 20 * n2;
  const Integer square_form = middle * middle - 256 * n2 * n2;
  if (product_form != square_form) broken("(x^2-4n^2)(x^2-36n^2) = (x^2-20n^2)^2 - 256n^4");
  return {product_form, product_form, square_form};
}

// --- AdPair ------------------------------------------------------------------

void validate(const AdPair& p) {
  if (sgn(p.a) < 0) throw std::domain_error("A must be >= 0, got " + p.a.get_str());
  if (sgn(p.d) < 1 || is_even(p.d)) throw std::domain_error("D must be odd and >= 1, got " + p.d.get_str());
  if (gcd(p.a, p.d) != 1) throw std::domain_error("gcd(A, D) must be 1");
}

Integer sixteen_form(const AdPair& p) { return 16 * p.a * p.a + p.d * p.d; }
Integer four_form(const AdPair& p) { return 4 * p.a * p.a + p.d * p.d; }

std::optional<Refutation> certify(const AdPair& p, Trace* trace) {
  const Integer s16 = sixteen_form(p);
  if (!square_test(trace, "16A^2+D^2", s16)) return refute("certify", Condition::kNotSquare, "16A^2+D^2", s16);
  const Integer s4 = four_form(p);
  if (!square_test(trace, "4A^2+D^2", s4)) return refute("certify", Condition::kNotSquare, "4A^2+D^2", s4);
  return std::nullopt;
}

// --- DescentWitness ----------------------------------------------------------

std::optional<std::string> validate(const DescentWitness& w, const FourApCandidate& c) {
  const Integer& x = c.x();
  const Integer& n = c.n();
  if (sgn(w.y) < 1 || is_even(w.y)) return "y must be odd and positive";
  if (w.y * w.y != (x * x - 4 * n * n) * (x * x - 36 * n * n)) return "y^2 != (x^2-4n^2)(x^2-36n^2)";
  if (4 * w.u * w.v != 16 * n * n) return "4uv != 16n^2";
  if (4 * w.u * w.u + w.v * w.v != x * x - 20 * n * n) return "4u^2+v^2 != x^2-20n^2";
  const Integer odd_leg = 4 * w.u * w.u - w.v * w.v;
  if (odd_leg != (w.odd_leg_positive ? w.y : Integer(-w.y))) return "4u^2-v^2 != +-y as recorded";
  if (sgn(w.a) < 0 || w.u != 4 * w.a * w.a) return "u != 4A^2";
  if (sgn(w.d) < 1 || w.v != w.d * w.d) return "v != D^2";
  if (gcd(Integer(2 * w.u), w.v) != 1) return "gcd(2u, v) != 1";
  if (w.a * w.d != n) return "A*D != n";
  if (!is_perfect_square(Integer(4 * w.u + w.v))) return "16A^2+D^2 is not a square";
  if (!is_perfect_square(Integer(w.u + w.v))) return "4A^2+D^2 is not a square";
  return std::nullopt;
}

// --- Pipeline stages ---------------------------------------------------------

Outcome<std::array<Integer, 4>> clear_denominators(std::span<const Rational, 4> squares, Trace* trace) {
  const char* step = "clear_denominators";
  std::array<Rational, 4> roots;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string label = "square[" + std::to_string(i) + "]";
    const Rational& s = squares[i];
    if (!square_test(trace, label + " numerator", s.num())) {
      return refute(step, Condition::kNotSquare, label + " numerator", s.num());
    }
    if (!square_test(trace, label + " denominator", s.den())) {
      return refute(step, Condition::kNotSquare, label + " denominator", s.den());
    }
    roots[i] = *rational_sqrt(s);
  }
  for (std::size_t i = 0; i + 2 < 4; ++i) {
    const Rational second = (squares[i + 2] - squares[i + 1]) - (squares[i + 1] - squares[i]);
    if (!second.is_zero()) {
      return refute(step, Condition::kNotProgression, "second difference at " + std::to_string(i), second.num());
    }
  }
  Integer l = 1;
  for (const auto& r : roots) l = lcm(l, r.den());
  std::array<Integer, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational scaled = squares[i] * Rational(Integer(l * l));
    if (!scaled.is_integer()) broken("scaled square is integral");
    out[i] = scaled.num();
    record(trace, "scaled[" + std::to_string(i) + "]", out[i]);
  }
  return out;
}

Outcome<FourApCandidate> normalize_window(std::span<const Integer, 4> squares, Trace* trace) {
  const char* step = "normalize_window";
  std::array<Integer, 4> t{squares[0], squares[1], squares[2], squares[3]};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string label = "term[" + std::to_string(i) + "]";
    if (!square_test(trace, label, t[i])) return refute(step, Condition::kNotSquare, label, t[i]);
  }
  for (std::size_t i = 0; i + 2 < 4; ++i) {
    const Integer second = (t[i + 2] - t[i + 1]) - (t[i + 1] - t[i]);
    if (sgn(second) != 0) {
      return refute(step, Condition::kNotProgression, "second difference at " + std::to_string(i), second);
    }
  }
  if (t[1] < t[0]) std::reverse(t.begin(), t.end());

  Integer g = 0;
  for (const auto& v : t) g = gcd(g, v);
  if (sgn(g) == 0) return refute(step, Condition::kZeroWindow, "gcd", g);
  record(trace, "gcd", g);
  for (auto& v : t) v /= g;

  for (std::size_t i = 0; i < 4; ++i) {
    if (is_even(t[i])) return refute(step, Condition::kNotOdd, "reduced term[" + std::to_string(i) + "]", t[i]);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Integer gij = gcd(t[i], t[j]);
      // Equal terms (the constant window) are units after reduction.
      if (gij != 1) {
        return refute(step, Condition::kNotCoprime,
                      "gcd(reduced term[" + std::to_string(i) + "], reduced term[" + std::to_string(j) + "])", gij);
      }
    }
  }
  const Integer diff = t[1] - t[0];
  if (!mpz_divisible_ui_p(diff.get_mpz_t(), 4)) {
    return refute(step, Condition::kNotDivisibleByFour, "common difference", diff);
  }
  const Integer x = (t[1] + t[2]) / 2;
  const Integer n = diff / 4;
  record(trace, "x", x);
  record(trace, "n", n);
  return FourApCandidate::check(x, n);
}

Outcome<ForwardWitness> forward_to_ad(const Integer& x, const Integer& n, Trace* trace) {
  auto checked = FourApCandidate::check(x, n);
  if (auto* r = std::get_if<Refutation>(&checked)) return *r;
  return forward_to_ad(std::get<FourApCandidate>(checked), trace);
}

Outcome<ForwardWitness> forward_to_ad(const FourApCandidate& c, Trace* trace) {
  const char* step = "forward_to_ad";
  const Integer& x = c.x();
  const Integer& n = c.n();
  const auto terms = c.terms();

  Integer y = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    auto root = square_test(trace, kTermLabels[i], terms[i]);
    if (!root) return refute(step, Condition::kNotSquare, kTermLabels[i], terms[i]);
    y *= *root;
  }
  record(trace, "y", y);
  if (y * y != quartic_rhs(x, n).value) broken("y^2 = (x^2-4n^2)(x^2-36n^2)");

  // The primitive triple (16n^2, y, x^2-20n^2).
  const Integer even_leg = 16 * n * n;
  const Integer hyp = x * x - 20 * n * n;
  if (sgn(hyp) <= 0) return refute(step, Condition::kNotPositive, "x^2-20n^2", hyp);
  const Integer g = gcd(even_leg, y);
  if (g != 1) return refute(step, Condition::kNotCoprime, "gcd(16n^2,y)", g);

  ParamPair params;
  try {
    params = params_from_triple({even_leg, y, hyp});
  } catch (const std::domain_error& e) {
    broken(std::string("triple (16n^2, y, x^2-20n^2) has parameters: ") + e.what());
  }
  const Integer& u = params.u;
  const Integer& v = params.v;
  record(trace, "u", u);
  record(trace, "v", v);

  // v = D^2 is odd and uv = 4n^2, so u is even, indeed 4 | u.
  if (is_odd(u)) return refute(step, Condition::kNotEven, "u", u);
  if (!mpz_divisible_ui_p(u.get_mpz_t(), 4)) return refute(step, Condition::kNotDivisibleByFour, "u", u);
  const Integer quarter_u = u / 4;
  auto big_a = square_test(trace, "u/4", quarter_u);
  if (!big_a) return refute(step, Condition::kNotSquare, "u/4", quarter_u);
  auto big_d = square_test(trace, "v", v);
  if (!big_d) return refute(step, Condition::kNotSquare, "v", v);

  if (!sum_identity_check(u, v, n, x)) broken("(4u+v)(u+v) = x^2");

  AdPair pair{*big_a, *big_d};
  if (auto r = certify(pair, trace)) {
    r->step = step;
    return *r;
  }
  if (pair.a * pair.d != n) broken("A*D = n");
  record(trace, "A", pair.a);
  record(trace, "D", pair.d);

  DescentWitness w{y, u, v, pair.a, pair.d, odd_leg_sign_positive(params)};
  if (auto why = validate(w, c)) broken(*why);
  return ForwardWitness{c, std::move(w), std::move(pair)};
}

Outcome<FourApCandidate> ad_to_ap(const AdPair& p, Trace* trace) {
  validate(p);
  const char* step = "ad_to_ap";
  const Integer u = 4 * p.a * p.a;
  const Integer v = p.d * p.d;
  record(trace, "u", u);
  record(trace, "v", v);
  const Integer s16 = 4 * u + v;
  auto r16 = square_test(trace, "16A^2+D^2", s16);
  if (!r16) return refute(step, Condition::kNotSquare, "16A^2+D^2", s16);
  const Integer s4 = u + v;
  auto r4 = square_test(trace, "4A^2+D^2", s4);
  if (!r4) return refute(step, Condition::kNotSquare, "4A^2+D^2", s4);

  const Integer x = *r16 * *r4;
  const Integer n = p.a * p.d;
  if (x * x != s16 * s4) broken("x^2 = (4u+v)(u+v)");
  record(trace, "x", x);
  record(trace, "n", n);

  auto checked = FourApCandidate::check(x, n);
  if (auto* r = std::get_if<Refutation>(&checked)) {
    r->step = step;
    return *r;
  }
  auto& c = std::get<FourApCandidate>(checked);
  const auto terms = c.terms();
  for (std::size_t i = 0; i < 4; ++i) {
    if (!square_test(trace, kTermLabels[i], terms[i])) {
      return refute(step, Condition::kNotSquare, kTermLabels[i], terms[i]);
    }
  }
  return c;
}

std::pair<Integer, Integer> reconstruction(const AdPair& p) {
  return {isqrt(Integer(sixteen_form(p) * four_form(p))), Integer(p.a * p.d)};
}

Outcome<ForwardWitness> verify_window(std::span<const Integer, 4> squares, Trace* trace) {
  auto c = normalize_window(squares, trace);
  if (auto* r = std::get_if<Refutation>(&c)) return *r;
  return forward_to_ad(std::get<FourApCandidate>(c), trace);
}

Outcome<ForwardWitness> verify_window(std::span<const Rational, 4> squares, Trace* trace) {
  auto cleared = clear_denominators(squares, trace);
  if (auto* r = std::get_if<Refutation>(&cleared)) return *r;
  const auto& ints = std::get<std::array<Integer, 4>>(cleared);
  return verify_window(std::span<const Integer, 4>(ints), trace);
}

// --- Factor split and descent -----------------------------------------------

SplitWitness split_factorizations(const Integer& big_a, const Integer& u, const Integer& v,
                                  const Integer& u_prime, const Integer& v_prime) {
  auto fail = [](const std::string& what) { throw std::domain_error("inconsistent factorizations: " + what); };
  if (sgn(big_a) < 0 || sgn(u) < 0 || sgn(v) < 1 || sgn(u_prime) < 0 || sgn(v_prime) < 1) {
    fail("factors must be nonnegative with V, V' >= 1");
  }
  if (u * v != big_a) fail("U*V != A");
  if (u_prime * v_prime != big_a) fail("U'*V' != A");
  if (gcd(u, v) != 1) fail("gcd(U, V) != 1");
  if (gcd(Integer(2 * u_prime), v_prime) != 1) fail("gcd(2U', V') != 1");
  if (is_odd(u)) fail("U must be even");

  SplitWitness s{u, v, u_prime, v_prime, 0, gcd(u, v_prime), gcd(u_prime, v), gcd(v, v_prime)};
  const Integer two_b = 2 * s.b;
  if (!mpz_divisible_p(u.get_mpz_t(), two_b.get_mpz_t())) fail("2b does not divide U");
  s.a = u / two_b;

  if (u != 2 * s.a * s.b) fail("U != 2ab");
  if (v != s.c * s.d) fail("V != cd");
  if (u_prime != 2 * s.a * s.c) fail("U' != 2ac");
  if (v_prime != s.b * s.d) fail("V' != bd");
  const std::array<Integer, 4> parts{Integer(2 * s.a), s.b, s.c, s.d};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (gcd(parts[i], parts[j]) != 1) fail("2a, b, c, d not pairwise coprime");
    }
  }
  return s;
}

namespace {

// The nondegenerate branch. Every failure here contradicts an identity that
// holds for any certified pair, so it throws rather than refutes.
DescentOutcome descend_certified(const AdPair& p, Trace* trace) {
  const Integer r4 = *is_perfect_square(four_form(p));
  const Integer r16 = *is_perfect_square(sixteen_form(p));

  // 4A^2 + D^2 = h^2: the triple (2A, D, h) has parameters (U/2, V).
  ParamPair first;
  ParamPair second;
  try {
    first = params_from_triple({Integer(2 * p.a), p.d, r4});
    second = params_from_triple({Integer(4 * p.a), p.d, r16});
  } catch (const std::domain_error& e) {
    broken(std::string("double-square triples have parameters: ") + e.what());
  }
  const Integer u = 2 * first.u;
  const Integer& v = first.v;
  const Integer& u_prime = second.u;
  const Integer& v_prime = second.v;
  record(trace, "U", u);
  record(trace, "V", v);
  record(trace, "U'", u_prime);
  record(trace, "V'", v_prime);

  DescentOutcome out;
  out.input = p;
  out.first_sign_positive = odd_leg_sign_positive(first);
  out.second_sign_positive = odd_leg_sign_positive(second);
  // With opposite signs 4a^2(b^2+4c^2) = d^2(b^2+c^2) for odd b, c, which
  // no a >= 1 satisfies.
  if (out.first_sign_positive != out.second_sign_positive) broken("U^2-V^2 and 4U'^2-V'^2 share a sign");

  SplitWitness s;
  try {
    s = split_factorizations(p.a, u, v, u_prime, v_prime);
  } catch (const std::domain_error& e) {
    broken(e.what());
  }
  const Integer lhs = s.b * s.b * (4 * s.a * s.a + s.d * s.d);
  const Integer rhs = s.c * s.c * (16 * s.a * s.a + s.d * s.d);
  if (lhs != rhs) broken("b^2(4a^2+d^2) = c^2(16a^2+d^2)");

  AdPair next{s.a, s.d};
  if (certify(next, trace)) broken("(a, d) is a double-square pair");
  if (gcd(next.a, next.d) != 1 || is_even(next.d)) broken("(a, d) is coprime with d odd");
  if (!(next.a * next.d < p.a * p.d)) broken("|ad| < |AD|");
  record(trace, "a", next.a);
  record(trace, "d", next.d);
  out.next = std::move(next);
  out.split = std::move(s);
  return out;
}

}  // namespace

Outcome<DescentOutcome> descend(const Integer& a_in, const Integer& d_in, Trace* trace) {
  const char* step = "descend";
  const Integer a = abs(a_in);
  const Integer d = abs(d_in);
  if (is_even(d)) return refute(step, Condition::kNotOdd, "D", d);
  const Integer g = gcd(a, d);
  if (g != 1) return refute(step, Condition::kNotCoprime, "gcd(A,D)", g);
  AdPair p{a, d};
  if (auto r = certify(p, trace)) {
    r->step = step;
    return *r;
  }
  if (sgn(p.a) == 0) {
    DescentOutcome out;
    out.input = p;
    out.next = p;
    out.fixpoint = true;
    return out;
  }
  return descend_certified(p, trace);
}

AdPair descent_step(const AdPair& p) {
  validate(p);
  auto out = descend(p.a, p.d);
  if (auto* r = std::get_if<Refutation>(&out)) throw DescentPreconditionError(*r);
  return std::get<DescentOutcome>(out).next;
}

bool sum_identity_check(const Integer& u, const Integer& v, const Integer& n, const Integer& x) {
  if (4 * u * v != 16 * n * n) throw std::domain_error("sum identity needs 4uv = 16n^2");
  if (4 * u * u + v * v != x * x - 20 * n * n) throw std::domain_error("sum identity needs 4u^2+v^2 = x^2-20n^2");
  return (4 * u + v) * (u + v) == x * x;
}

}  // namespace fsq
