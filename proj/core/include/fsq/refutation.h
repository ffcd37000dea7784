#ifndef FSQ_REFUTATION_H_
#define FSQ_REFUTATION_H_

#include <optional>
#include <string>
#include <string_view>

#include "fsq/integer.h"

namespace fsq {

// Conditions a pipeline step can find violated. Each one is a predicate on a
// single integer, so a refutation can be replayed from its recorded value.
enum class Condition {
  kNotSquare,          // value is not a perfect square
  kNotProgression,     // value (a second difference) is nonzero
  kZeroWindow,         // value (the gcd of the window) is zero
  kNotOdd,             // value is even
  kNotEven,            // value is odd
  kNotCoprime,         // value (a gcd) is not 1
  kNotDivisibleByFour, // value is not a multiple of 4
  kNotPositive,        // value <= 0
};

std::string_view condition_name(Condition c);
std::optional<Condition> condition_from_name(std::string_view name);

// True when `value` violates `c`.
bool condition_fails(Condition c, const Integer& value);

struct Refutation {
  std::string step;     // pipeline stage, e.g. "normalize_window"
  Condition condition;
  std::string subject;  // what was tested, e.g. "x-2n" or "16A^2+D^2"
  Integer value;

  // Re-evaluates the condition on the recorded value.
  bool replay() const { return condition_fails(condition, value); }

  // "17 not a square (x-2n)"
  std::string describe() const;

  friend bool operator==(const Refutation&, const Refutation&) = default;
};

}  // namespace fsq

#endif  // FSQ_REFUTATION_H_
