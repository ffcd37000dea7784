#ifndef FSQ_CLI_APP_H_
#define FSQ_CLI_APP_H_

#include <iosfwd>

namespace fsq::cli {

// Parses the command line, runs one subcommand and returns its exit code:
// 0 expected outcome, 1 refutation or negative result, 2 usage error,
// 3 counterexample alert.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fsq::cli

#endif  // FSQ_CLI_APP_H_
