#ifndef FSQ_INTEGER_H_
#define FSQ_INTEGER_H_

// Exact integer arithmetic and perfect-square utilities.
//
// Integer is GMP's mpz_class. Everything above this layer is written against
// it, so no intermediate quantity ever overflows or rounds. The 64/128-bit
// helpers at the bottom are exact fast paths for the brute-force scans, where
// every operand is known to fit.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fsq {

using Integer = mpz_class;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

// Nonnegative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// floor(sqrt(n)) by integer Newton iteration. Throws std::domain_error for
// n < 0.
Integer isqrt(const Integer& n);

// The nonnegative root when n is a perfect square. Negative n is never a
// square.
std::optional<Integer> is_perfect_square(const Integer& n);

struct SquarefreeSplit {
  Integer k;  // squarefree part
  Integer m;  // n == k * m * m
};

// Unique decomposition n = k * m^2 with k squarefree and k, m >= 1.
// Throws std::domain_error for n <= 0.
SquarefreeSplit squarefree_split(const Integer& n);

bool is_squarefree(const Integer& n);

bool is_odd(const Integer& n);
bool is_even(const Integer& n);
Integer abs(const Integer& n);

// Strict decimal parse: optional sign followed by at least one digit.
// Throws std::invalid_argument otherwise.
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);

Integer from_u128(u128 value);

// Quadratic-residue prefilter: false means "certainly not a square".
bool may_be_square(std::uint64_t residue_mod_64, std::uint64_t residue_mod_63);

std::uint64_t isqrt_u64(std::uint64_t n);
std::optional<std::uint64_t> square_root_u64(std::uint64_t n);

u128 isqrt_u128(u128 n);
std::optional<u128> square_root_u128(u128 n);

}  // namespace fsq

#endif  // FSQ_INTEGER_H_
