#ifndef FSQ_DESCENT_H_
#define FSQ_DESCENT_H_

// Four squares in arithmetic progression and the descent that rules them out.
//
// A window (x, n) stands for the four odd terms x-6n, x-2n, x+2n, x+6n with
// common difference 4n. When all four are squares, y = product of the roots
// satisfies y^2 = (x^2-4n^2)(x^2-36n^2) = (x^2-20n^2)^2 - 256n^4, making
// (16n^2, y, x^2-20n^2) a primitive triple with parameters u = 4A^2, v = D^2.
// Then 16A^2+D^2 and 4A^2+D^2 are both squares, and conversely. From such a
// pair (A, D) with A != 0 the factor split produces a strictly smaller pair
// (a, d), so only the constant window 1, 1, 1, 1 (A = 0, D = 1) survives.
//
// Every stage returns either its witness or a Refutation naming the first
// condition that failed. Violations of an algebraic identity that must hold
// unconditionally throw std::logic_error.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fsq/integer.h"
#include "fsq/rational.h"
#include "fsq/refutation.h"

namespace fsq {

template <typename T>
using Outcome = std::variant<T, Refutation>;

template <typename T>
bool succeeded(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

// One audited value in a pipeline run. Square tests carry their root.
struct TraceStep {
  std::string label;
  Integer value;
  bool square_test = false;
  std::optional<Integer> root;
};
using Trace = std::vector<TraceStep>;

// Canonical window: x odd >= 1, n >= 0, gcd(x, n) == 1. The only window with
// n == 0 is therefore (1, 0).
class FourApCandidate {
 public:
  // Canonicalizes the sign of n, then refutes on x <= 0, even x, or
  // gcd(x, n) != 1.
  static Outcome<FourApCandidate> check(const Integer& x, const Integer& n);
  // Same checks; throws std::domain_error instead of refuting.
  static FourApCandidate make(const Integer& x, const Integer& n);

  const Integer& x() const { return x_; }
  const Integer& n() const { return n_; }
  bool is_degenerate() const { return sgn(n_) == 0; }
  // x-6n, x-2n, x+2n, x+6n.
  std::array<Integer, 4> terms() const;

  friend bool operator==(const FourApCandidate&, const FourApCandidate&) = default;

 private:
  FourApCandidate(Integer x, Integer n) : x_(std::move(x)), n_(std::move(n)) {}
  Integer x_;
  Integer n_;
};

// Labels of the four window terms, in order.
inline constexpr std::array<const char*, 4> kTermLabels{"x-6n", "x-2n", "x+2n", "x+6n"};

// (x^2-4n^2)(x^2-36n^2), computed in both forms.
struct QuarticRhs {
  Integer value;
  Integer product_form;  // (x^2-4n^2)(x^2-36n^2)
  Integer square_form;   // (x^2-20n^2)^2 - 256n^4
};
// Throws std::logic_error if the two forms ever disagree.
QuarticRhs quartic_rhs(const Integer& x, const Integer& n);

struct AdPair {
  Integer a;  // >= 0
  Integer d;  // odd >= 1, gcd(a, d) == 1

  friend bool operator==(const AdPair&, const AdPair&) = default;
};

// Throws std::domain_error unless a >= 0, d odd >= 1 and gcd(a, d) == 1.
void validate(const AdPair& p);

// 16a^2 + d^2 and 4a^2 + d^2.
Integer sixteen_form(const AdPair& p);
Integer four_form(const AdPair& p);

// Refutes unless both forms are perfect squares.
std::optional<Refutation> certify(const AdPair& p, Trace* trace = nullptr);

// The chain of quantities from a window to its (A, D) pair.
struct DescentWitness {
  Integer y;  // odd >= 1, product of the four roots
  Integer u;  // 4A^2
  Integer v;  // D^2
  Integer a;  // A
  Integer d;  // D
  // Sign of 4u^2 - v^2 relative to the odd leg y.
  bool odd_leg_positive = true;
};

// Checks every defining equation of the witness against the window from raw
// integers. Returns the first failure.
std::optional<std::string> validate(const DescentWitness& w, const FourApCandidate& c);

struct ForwardWitness {
  FourApCandidate candidate;
  DescentWitness witness;
  AdPair pair;
};

// Four rational squares in AP, scaled by the square of the common denominator
// of their roots.
Outcome<std::array<Integer, 4>> clear_denominators(std::span<const Rational, 4> squares,
                                                   Trace* trace = nullptr);

// Reduces four integer squares in AP to a canonical window, validating that
// the reduction is odd, pairwise coprime and has difference divisible by 4.
Outcome<FourApCandidate> normalize_window(std::span<const Integer, 4> squares,
                                          Trace* trace = nullptr);

// Window -> (y, u, v, A, D). The degenerate window yields (A, D) = (0, 1).
Outcome<ForwardWitness> forward_to_ad(const FourApCandidate& c, Trace* trace = nullptr);
// As above on an unvalidated (x, n); window defects become refutations.
Outcome<ForwardWitness> forward_to_ad(const Integer& x, const Integer& n, Trace* trace = nullptr);

// (A, D) -> window with x^2 = (16A^2+D^2)(4A^2+D^2) and n = A*D, with its four
// terms verified square. Throws std::domain_error if validate(p) fails.
Outcome<FourApCandidate> ad_to_ap(const AdPair& p, Trace* trace = nullptr);

// The window ad_to_ap would build, without requiring the forms to be squares:
// x = isqrt((16A^2+D^2)(4A^2+D^2)), n = A*D.
std::pair<Integer, Integer> reconstruction(const AdPair& p);

// Full pipelines used by the CLI.
Outcome<ForwardWitness> verify_window(std::span<const Integer, 4> squares, Trace* trace = nullptr);
Outcome<ForwardWitness> verify_window(std::span<const Rational, 4> squares, Trace* trace = nullptr);

// Common refinement of two coprime factorizations A = U*V = U'*V' with U even,
// V' odd: U = 2ab, V = cd, U' = 2ac, V' = bd.
struct SplitWitness {
  Integer u;
  Integer v;
  Integer u_prime;
  Integer v_prime;
  Integer a;
  Integer b;
  Integer c;
  Integer d;

  friend bool operator==(const SplitWitness&, const SplitWitness&) = default;
};

// b = gcd(U, V'), c = gcd(U', V), d = gcd(V, V'), a = U / 2b. Throws
// std::domain_error if the inputs are not such factorizations or if any
// reconstruction identity or pairwise coprimality of 2a, b, c, d fails.
SplitWitness split_factorizations(const Integer& big_a, const Integer& u, const Integer& v,
                                  const Integer& u_prime, const Integer& v_prime);

struct DescentOutcome {
  AdPair input;
  AdPair next;
  bool fixpoint = false;
  std::optional<SplitWitness> split;
  // Signs in U^2 - V^2 = +-D and 4U'^2 - V'^2 = +-D.
  bool first_sign_positive = true;
  bool second_sign_positive = true;
};

// One descent step on raw (A, D): signs are canonicalized, then an
// uncertified pair is refuted. (0, 1) is a fixpoint; any other certified pair
// is carried through every constructive step to a strictly smaller pair.
Outcome<DescentOutcome> descend(const Integer& a, const Integer& d, Trace* trace = nullptr);

class DescentPreconditionError : public std::domain_error {
 public:
  explicit DescentPreconditionError(Refutation r)
      : std::domain_error("descent precondition fails: " + r.describe()), refutation_(std::move(r)) {}
  const Refutation& refutation() const { return refutation_; }

 private:
  Refutation refutation_;
};

// descend() on a typed pair; throws DescentPreconditionError when the pair is
// not certified.
AdPair descent_step(const AdPair& p);

// Checks (4u+v)(u+v) == x^2. Throws std::domain_error unless 4uv == 16n^2 and
// 4u^2 + v^2 == x^2 - 20n^2.
bool sum_identity_check(const Integer& u, const Integer& v, const Integer& n, const Integer& x);

}  // namespace fsq

#endif  // FSQ_DESCENT_H_
