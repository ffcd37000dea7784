#include "fsq/integer.h"

#include <array>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace fsq {
namespace {

template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (std::size_t r = 0; r < M; ++r) table[(r * r) % M] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residues<64>();
constexpr auto kSquaresMod63 = square_residues<63>();

unsigned bit_width_u128(u128 n) {
  const auto high = static_cast<std::uint64_t>(n >> 64);
  if (high != 0) return 64 + static_cast<unsigned>(std::bit_width(high));
  return static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(n)));
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative integer " + n.get_str());
  if (n < 2) return n;
  // 2^ceil(bits/2) is an upper bound for the root; from above, Newton
  // decreases monotonically until it reaches the floor.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = Integer(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  for (;;) {
    Integer next = (x + n / x) >> 1;
    if (next >= x) return x;
    x = std::move(next);
  }
}

bool may_be_square(std::uint64_t residue_mod_64, std::uint64_t residue_mod_63) {
  return kSquaresMod64[residue_mod_64] && kSquaresMod63[residue_mod_63];
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (!may_be_square(mpz_fdiv_ui(n.get_mpz_t(), 64), mpz_fdiv_ui(n.get_mpz_t(), 63))) {
    return std::nullopt;
  }
  Integer r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (sgn(n) <= 0) throw std::domain_error("squarefree_split needs n >= 1, got " + n.get_str());
  Integer rest = n;
  Integer k = 1;
  Integer m = 1;
  for (unsigned long p = 2;; p = (p == 2) ? 3 : p + 2) {
    const Integer cube = Integer(p) * p * p;
    if (cube > rest) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) m *= p;
    if (exponent % 2 == 1) k *= p;
  }
  // Every prime factor of rest now exceeds the cube root of rest, so rest is
  // 1, a prime, a product of two distinct primes, or a prime squared.
  if (auto root = is_perfect_square(rest)) {
    m *= *root;
  } else {
    k *= rest;
  }
  return {std::move(k), std::move(m)};
}

bool is_squarefree(const Integer& n) { return squarefree_split(n).m == 1; }

bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

Integer abs(const Integer& n) { return sgn(n) < 0 ? Integer(-n) : n; }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  const bool negative = text[0] == '-';
  Integer value(std::string(text.substr(i)), 10);
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& n) { return n.get_str(); }

Integer from_u128(u128 value) {
  Integer high = static_cast<unsigned long>(static_cast<std::uint64_t>(value >> 64));
  Integer low = static_cast<unsigned long>(static_cast<std::uint64_t>(value));
  return (high << 64) + low;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  const unsigned bits = static_cast<unsigned>(std::bit_width(n));
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::uint64_t next = (x + n / x) >> 1;
    if (next >= x) return x;
    x = next;
  }
}

std::optional<std::uint64_t> square_root_u64(std::uint64_t n) {
  if (!may_be_square(n & 63, n % 63)) return std::nullopt;
  const std::uint64_t r = isqrt_u64(n);
  if (r * r == n) return r;
  return std::nullopt;
}

u128 isqrt_u128(u128 n) {
  if (n < 2) return n;
  const unsigned bits = bit_width_u128(n);
  u128 x = u128{1} << ((bits + 1) / 2);
  for (;;) {
    const u128 next = (x + n / x) >> 1;
    if (next >= x) return x;
    x = next;
  }
}

std::optional<u128> square_root_u128(u128 n) {
  if (!may_be_square(static_cast<std::uint64_t>(n & 63), static_cast<std::uint64_t>(n % 63))) {
    return std::nullopt;
  }
  const u128 r = isqrt_u128(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace fsq
