#ifndef FSQ_CLI_BUILD_H_
#define FSQ_CLI_BUILD_H_

// Turns parsed command inputs into a document and an exit code. The inputs
// object echoed in every document is enough to rebuild it, which is what
// `check --replay` does.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "document.h"

namespace fsq::cli {

enum ExitCode : int {
  kExitExpected = 0,
  kExitNegative = 1,
  kExitUsage = 2,
  kExitCounterexample = 3,
};

// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Emission {
  Json document;
  int exit_code = kExitExpected;
};

// Rational arithmetic is used when any value contains '/', unless forced.
Emission build_verify_ap(const std::vector<std::string>& squares, bool trace,
                         std::optional<bool> rational_mode = std::nullopt);
Emission build_certify(const Integer& k, const Integer& hyp_bound, unsigned partitions);
Emission build_search4(const Integer& root_bound, bool three_term, unsigned partitions);
Emission build_search_ad(const Integer& a_bound, const Integer& d_bound, bool single_form, unsigned partitions);
Emission build_euler_search(const Integer& x_bound, const Integer& y_bound, bool relaxed_parity, bool single_form,
                            unsigned partitions);
Emission build_search3(const Integer& k, const Integer& root_bound, unsigned partitions);
Emission build_curve_torsion();
Emission build_curve_map(bool from_quartic, const Rational& x, const Rational& y);
Emission build_curve_search(const Integer& height, unsigned partitions);
Emission build_descend(const Integer& a, const Integer& d, bool trace);

// Re-runs the command an inputs object describes. Throws DocumentError on
// malformed inputs and UsageError where the original command would have.
Emission rebuild(const Json& inputs, unsigned partitions);

}  // namespace fsq::cli

#endif  // FSQ_CLI_BUILD_H_
