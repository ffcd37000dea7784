#ifndef FSQ_SEARCH_H_
#define FSQ_SEARCH_H_

// Exhaustive brute-force scans over explicit integer grids. A report embeds
// its bounds and options, so an empty hit list is a bounded claim about that
// grid and nothing more.
//
// Each scan partitions its outer loop, runs the pieces independently and
// sorts the merged hits, so the report does not depend on the partition count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsq/integer.h"

namespace fsq {

enum class SearchKind {
  kFourSquareAp,       // a^2 < b^2, b^2 + d and b^2 + 2d squares, d = b^2 - a^2
  kThreeSquarePrefix,  // the same scan with only b^2 + d tested
  kDoubleSquarePairs,  // 16A^2 + D^2 and 4A^2 + D^2 squares
  kEulerPairs,         // x^2 + y^2 and x^2 + 4y^2 squares
  kThreeSquareAp,      // r^2 < s^2 < t^2 in AP, difference with squarefree part k
};

std::string_view search_kind_name(SearchKind kind);
std::optional<SearchKind> search_kind_from_name(std::string_view name);

// Field names of one hit, in order.
std::vector<std::string> hit_fields(SearchKind kind);

struct SearchReport {
  SearchKind kind;
  std::vector<std::pair<std::string, Integer>> bounds;
  std::vector<std::pair<std::string, std::string>> options;
  std::vector<std::vector<Integer>> hits;
  bool exhaustive = true;
  std::uint64_t candidates_scanned = 0;

  const Integer& bound(std::string_view name) const;
  std::string option(std::string_view name) const;
};

// Re-checks one hit against the defining condition of the report's search.
bool validate_hit(const SearchReport& report, const std::vector<Integer>& hit);

// Throw std::domain_error when a bound is below its minimum or too large for
// exact 64-bit evaluation of the tested forms.
SearchReport search_four_square_ap(const Integer& root_bound, unsigned partitions = 1);
SearchReport search_three_square_prefix(const Integer& root_bound, unsigned partitions = 1);

enum class DoubleSquareForms { kBoth, kSixteenOnly };
SearchReport search_double_square_pairs(const Integer& a_bound, const Integer& d_bound,
                                        DoubleSquareForms forms = DoubleSquareForms::kBoth,
                                        unsigned partitions = 1);

struct EulerOptions {
  bool enforce_parity = true;  // x odd, y even
  bool both_forms = true;      // false: only x^2 + y^2
};
SearchReport search_euler_pairs(const Integer& x_bound, const Integer& y_bound, EulerOptions options = {},
                                unsigned partitions = 1);

// k must be squarefree.
SearchReport search_three_square_ap(const Integer& k, const Integer& root_bound, unsigned partitions = 1);

// Re-runs the search a report describes.
SearchReport rerun(const SearchReport& report, unsigned partitions = 1);

}  // namespace fsq

#endif  // FSQ_SEARCH_H_
