#include "fsq/refutation.h"

#include <array>
#include <utility>

namespace fsq {
namespace {

constexpr std::array<std::pair<Condition, std::string_view>, 8> kNames{{
    {Condition::kNotSquare, "not_square"},
    {Condition::kNotProgression, "not_arithmetic_progression"},
    {Condition::kZeroWindow, "zero_window"},
    {Condition::kNotOdd, "not_odd"},
    {Condition::kNotEven, "not_even"},
    {Condition::kNotCoprime, "not_coprime"},
    {Condition::kNotDivisibleByFour, "not_divisible_by_4"},
    {Condition::kNotPositive, "not_positive"},
}};

}  // namespace

std::string_view condition_name(Condition c) {
  for (const auto& [cond, name] : kNames) {
    if (cond == c) return name;
  }
  return "unknown";
}

std::optional<Condition> condition_from_name(std::string_view name) {
  for (const auto& [cond, n] : kNames) {
    if (n == name) return cond;
  }
  return std::nullopt;
}

bool condition_fails(Condition c, const Integer& value) {
  switch (c) {
    case Condition::kNotSquare:
      return !is_perfect_square(value).has_value();
    case Condition::kNotProgression:
      return sgn(value) != 0;
    case Condition::kZeroWindow:
      return sgn(value) == 0;
    case Condition::kNotOdd:
      return is_even(value);
    case Condition::kNotEven:
      return is_odd(value);
    case Condition::kNotCoprime:
      return value != 1;
    case Condition::kNotDivisibleByFour:
      return !mpz_divisible_ui_p(value.get_mpz_t(), 4);
    case Condition::kNotPositive:
      return sgn(value) <= 0;
  }
  return false;
}

std::string Refutation::describe() const {
  std::string what;
  switch (condition) {
    case Condition::kNotSquare: what = " not a square"; break;
    case Condition::kNotProgression: what = " second difference is nonzero"; break;
    case Condition::kZeroWindow: what = " window is identically zero"; break;
    case Condition::kNotOdd: what = " not odd"; break;
    case Condition::kNotEven: what = " not even"; break;
    case Condition::kNotCoprime: what = " common factor"; break;
    case Condition::kNotDivisibleByFour: what = " not divisible by 4"; break;
    case Condition::kNotPositive: what = " not positive"; break;
  }
  return value.get_str() + what + " (" + subject + ")";
}

}  // namespace fsq
