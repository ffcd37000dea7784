#include "fsq/search.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fsq/partition.h"

namespace fsq {
namespace {

using u64 = std::uint64_t;
using Hit = std::vector<Integer>;

constexpr std::array<std::pair<SearchKind, std::string_view>, 5> kKindNames{{
    {SearchKind::kFourSquareAp, "four-square-ap"},
    {SearchKind::kThreeSquarePrefix, "three-square-prefix"},
    {SearchKind::kDoubleSquarePairs, "double-square-pairs"},
    {SearchKind::kEulerPairs, "euler-pairs"},
    {SearchKind::kThreeSquareAp, "three-square-ap"},
}};

Integer to_integer(u64 v) { return Integer(static_cast<unsigned long>(v)); }

u64 checked_bound(const Integer& value, const char* name, long minimum) {
  if (value < minimum) {
    throw std::domain_error(std::string(name) + " must be at least " + std::to_string(minimum));
  }
  if (!value.fits_ulong_p()) throw std::domain_error(std::string(name) + " is too large");
  return value.get_ui();
}

// Throws unless `max_value` (computed in 128 bits) fits in 64.
void require_fits(u128 max_value, const char* what) {
  if (max_value > std::numeric_limits<u64>::max()) {
    throw std::domain_error(std::string("bounds too large for exact evaluation of ") + what);
  }
}

struct Partial {
  std::vector<Hit> hits;
  u64 scanned = 0;
};

SearchReport merge(SearchReport report, std::vector<Partial> parts) {
  for (auto& p : parts) {
    report.candidates_scanned += p.scanned;
    for (auto& h : p.hits) report.hits.push_back(std::move(h));
  }
  std::sort(report.hits.begin(), report.hits.end());
  return report;
}

bool is_square(const Integer& v) { return is_perfect_square(v).has_value(); }

bool all_squares_in_progression(const Hit& h) {
  for (const auto& v : h) {
    if (!is_square(v)) return false;
  }
  const Integer d = h[1] - h[0];
  if (sgn(d) <= 0) return false;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] - h[i - 1] != d) return false;
  }
  return true;
}

SearchReport square_progression_scan(SearchKind kind, const Integer& root_bound, unsigned partitions) {
  const u64 r = checked_bound(root_bound, "root bound", 2);
  require_fits(u128{3} * r * r, "b^2 + 2(b^2 - a^2)");
  const bool four_terms = kind == SearchKind::kFourSquareAp;
  auto scan = [four_terms](Range range) {
    Partial out;
    for (u64 b = range.lo; b <= range.hi; ++b) {
      const u64 b2 = b * b;
      out.scanned += b - 1;
      for (u64 a = 1; a < b; ++a) {
        const u64 d = b2 - a * a;
        const u64 third = b2 + d;
        if (!square_root_u64(third)) continue;
        if (!four_terms) {
          out.hits.push_back({to_integer(a * a), to_integer(b2), to_integer(third)});
          continue;
        }
        const u64 fourth = third + d;
        if (!square_root_u64(fourth)) continue;
        out.hits.push_back({to_integer(a * a), to_integer(b2), to_integer(third), to_integer(fourth)});
      }
    }
    return out;
  };
  SearchReport report{kind, {{"root_bound", root_bound}}, {}, {}, true, 0};
  return merge(std::move(report), run_partitioned(2, r, partitions, scan));
}

}  // namespace

std::string_view search_kind_name(SearchKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SearchKind> search_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> hit_fields(SearchKind kind) {
  switch (kind) {
    case SearchKind::kFourSquareAp:
      return {"s0", "s1", "s2", "s3"};
    case SearchKind::kThreeSquarePrefix:
      return {"s0", "s1", "s2"};
    case SearchKind::kDoubleSquarePairs:
      return {"A", "D"};
    case SearchKind::kEulerPairs:
      return {"x", "y"};
    case SearchKind::kThreeSquareAp:
      return {"s0", "s1", "s2", "difference", "m"};
  }
  return {};
}

const Integer& SearchReport::bound(std::string_view name) const {
  for (const auto& [n, v] : bounds) {
    if (n == name) return v;
  }
  throw std::out_of_range("report has no bound '" + std::string(name) + "'");
}

std::string SearchReport::option(std::string_view name) const {
  for (const auto& [n, v] : options) {
    if (n == name) return v;
  }
  return {};
}

bool validate_hit(const SearchReport& report, const Hit& hit) {
  if (hit.size() != hit_fields(report.kind).size()) return false;
  switch (report.kind) {
    case SearchKind::kFourSquareAp:
    case SearchKind::kThreeSquarePrefix:
      return sgn(hit[0]) > 0 && all_squares_in_progression(hit);
    case SearchKind::kDoubleSquarePairs: {
      const Integer& a = hit[0];
      const Integer& d = hit[1];
      if (sgn(a) < 1 || sgn(d) < 1 || is_even(d) || gcd(a, d) != 1) return false;
      if (!is_square(Integer(16 * a * a + d * d))) return false;
      return report.option("forms") == "sixteen_only" || is_square(Integer(4 * a * a + d * d));
    }
    case SearchKind::kEulerPairs: {
      const Integer& x = hit[0];
      const Integer& y = hit[1];
      if (sgn(x) < 1 || sgn(y) < 1) return false;
      if (report.option("parity") != "relaxed" && (is_even(x) || is_odd(y))) return false;
      if (!is_square(Integer(x * x + y * y))) return false;
      return report.option("forms") == "single" || is_square(Integer(x * x + 4 * y * y));
    }
    case SearchKind::kThreeSquareAp: {
      const Hit squares(hit.begin(), hit.begin() + 3);
      if (sgn(squares[0]) < 1 || !all_squares_in_progression(squares)) return false;
      const Integer& diff = hit[3];
      const Integer& m = hit[4];
      return diff == squares[1] - squares[0] && sgn(m) > 0 && diff == report.bound("k") * m * m;
    }
  }
  return false;
}

SearchReport search_four_square_ap(const Integer& root_bound, unsigned partitions) {
  return square_progression_scan(SearchKind::kFourSquareAp, root_bound, partitions);
}

SearchReport search_three_square_prefix(const Integer& root_bound, unsigned partitions) {
  return square_progression_scan(SearchKind::kThreeSquarePrefix, root_bound, partitions);
}

SearchReport search_double_square_pairs(const Integer& a_bound, const Integer& d_bound,
                                        DoubleSquareForms forms, unsigned partitions) {
  const u64 amax = checked_bound(a_bound, "A bound", 1);
  const u64 dmax = checked_bound(d_bound, "D bound", 1);
  require_fits(u128{16} * amax * amax + u128{dmax} * dmax, "16A^2 + D^2");
  const bool both = forms == DoubleSquareForms::kBoth;
  auto scan = [dmax, both](Range range) {
    Partial out;
    for (u64 a = range.lo; a <= range.hi; ++a) {
      const u64 four_a2 = 4 * a * a;
      const u64 sixteen_a2 = 4 * four_a2;
      for (u64 d = 1; d <= dmax; d += 2) {
        ++out.scanned;
        const u64 d2 = d * d;
        if (!square_root_u64(sixteen_a2 + d2)) continue;
        if (std::gcd(a, d) != 1) continue;
        if (both && !square_root_u64(four_a2 + d2)) continue;
        out.hits.push_back({to_integer(a), to_integer(d)});
      }
    }
    return out;
  };
  SearchReport report{SearchKind::kDoubleSquarePairs,
                      {{"a_bound", a_bound}, {"d_bound", d_bound}},
                      {{"forms", both ? "both" : "sixteen_only"}},
                      {},
                      true,
                      0};
  return merge(std::move(report), run_partitioned(1, amax, partitions, scan));
}

SearchReport search_euler_pairs(const Integer& x_bound, const Integer& y_bound, EulerOptions options,
                                unsigned partitions) {
  const u64 xmax = checked_bound(x_bound, "x bound", 2);
  const u64 ymax = checked_bound(y_bound, "y bound", 2);
  require_fits(u128{xmax} * xmax + u128{4} * ymax * ymax, "x^2 + 4y^2");
  const u64 x_step = options.enforce_parity ? 2 : 1;
  const u64 y_start = options.enforce_parity ? 2 : 1;
  const u64 y_step = options.enforce_parity ? 2 : 1;
  auto scan = [=](Range range) {
    Partial out;
    // Partitions index x through (x - 1) / x_step.
    for (u64 i = range.lo; i <= range.hi; ++i) {
      const u64 x = 1 + i * x_step;
      const u64 x2 = x * x;
      for (u64 y = y_start; y <= ymax; y += y_step) {
        ++out.scanned;
        const u64 y2 = y * y;
        if (!square_root_u64(x2 + y2)) continue;
        if (options.both_forms && !square_root_u64(x2 + 4 * y2)) continue;
        out.hits.push_back({to_integer(x), to_integer(y)});
      }
    }
    return out;
  };
  SearchReport report{SearchKind::kEulerPairs,
                      {{"x_bound", x_bound}, {"y_bound", y_bound}},
                      {{"parity", options.enforce_parity ? "strict" : "relaxed"},
                       {"forms", options.both_forms ? "both" : "single"}},
                      {},
                      true,
                      0};
  return merge(std::move(report), run_partitioned(0, (xmax - 1) / x_step, partitions, scan));
}

SearchReport search_three_square_ap(const Integer& k, const Integer& root_bound, unsigned partitions) {
  if (sgn(k) < 1 || !is_squarefree(k)) throw std::domain_error("k must be a squarefree positive integer");
  const u64 r = checked_bound(root_bound, "root bound", 2);
  require_fits(u128{2} * r * r, "2s^2 - r^2");
  auto scan = [&k](Range range) {
    Partial out;
    for (u64 s = range.lo; s <= range.hi; ++s) {
      const u64 s2 = s * s;
      out.scanned += s - 1;
      for (u64 a = 1; a < s; ++a) {
        const u64 d = s2 - a * a;
        const u64 third = s2 + d;
        if (!square_root_u64(third)) continue;
        const Integer diff = to_integer(d);
        if (!mpz_divisible_p(diff.get_mpz_t(), k.get_mpz_t())) continue;
        auto m = is_perfect_square(Integer(diff / k));
        if (!m) continue;
        out.hits.push_back({to_integer(a * a), to_integer(s2), to_integer(third), diff, *m});
      }
    }
    return out;
  };
  SearchReport report{SearchKind::kThreeSquareAp, {{"k", k}, {"root_bound", root_bound}}, {}, {}, true, 0};
  return merge(std::move(report), run_partitioned(2, r, partitions, scan));
}

SearchReport rerun(const SearchReport& report, unsigned partitions) {
  switch (report.kind) {
    case SearchKind::kFourSquareAp:
      return search_four_square_ap(report.bound("root_bound"), partitions);
    case SearchKind::kThreeSquarePrefix:
      return search_three_square_prefix(report.bound("root_bound"), partitions);
    case SearchKind::kDoubleSquarePairs:
      return search_double_square_pairs(
          report.bound("a_bound"), report.bound("d_bound"),
          report.option("forms") == "sixteen_only" ? DoubleSquareForms::kSixteenOnly : DoubleSquareForms::kBoth,
          partitions);
    case SearchKind::kEulerPairs:
      return search_euler_pairs(report.bound("x_bound"), report.bound("y_bound"),
                                {report.option("parity") != "relaxed", report.option("forms") != "single"},
                                partitions);
    case SearchKind::kThreeSquareAp:
      return search_three_square_ap(report.bound("k"), report.bound("root_bound"), partitions);
  }
  throw std::logic_error("unknown search kind");
}

}  // namespace fsq
