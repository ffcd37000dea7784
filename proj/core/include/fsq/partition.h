#ifndef FSQ_PARTITION_H_
#define FSQ_PARTITION_H_

// Splits an inclusive integer range into contiguous pieces and scans them on
// separate threads. Results come back in range order, so any merge that sorts
// afterwards is independent of the partition count.

#include <algorithm>
#include <cstdint>
#include <future>
#include <type_traits>
#include <vector>

namespace fsq {

struct Range {
  std::uint64_t lo;  // inclusive
  std::uint64_t hi;  // inclusive
};

// At most `parts` nonempty ranges covering [lo, hi]. Empty when lo > hi.
inline std::vector<Range> split_range(std::uint64_t lo, std::uint64_t hi, unsigned parts) {
  std::vector<Range> out;
  if (lo > hi) return out;
  parts = std::max(parts, 1u);
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t count = std::min<std::uint64_t>(parts, span);
  const std::uint64_t base = span / count;
  const std::uint64_t extra = span % count;
  std::uint64_t start = lo;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({start, start + len - 1});
    start += len;
  }
  return out;
}

// Runs scan(range) for every piece of [lo, hi]; one piece runs inline.
template <typename Scan>
auto run_partitioned(std::uint64_t lo, std::uint64_t hi, unsigned parts, Scan&& scan)
    -> std::vector<std::invoke_result_t<Scan&, Range>> {
  using Result = std::invoke_result_t<Scan&, Range>;
  const auto ranges = split_range(lo, hi, parts);
  std::vector<Result> results;
  results.reserve(ranges.size());
  if (ranges.size() <= 1) {
    for (const Range& r : ranges) results.push_back(scan(r));
    return results;
  }
  std::vector<std::future<Result>> pending;
  pending.reserve(ranges.size());
  for (const Range& r : ranges) {
    pending.push_back(std::async(std::launch::async, [&scan, r] { return scan(r); }));
  }
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace fsq

#endif  // FSQ_PARTITION_H_
