#ifndef FSQ_CLI_CHECK_H_
#define FSQ_CLI_CHECK_H_

#include <optional>
#include <string>

#include "document.h"

namespace fsq::cli {

// Re-verifies a document from its serialized fields alone. With `replay`, the
// command described by its inputs is also re-run and must reproduce the
// payload exactly. Returns the reason for rejection, or nullopt.
std::optional<std::string> check_document(const Json& doc, bool replay, unsigned partitions = 1);

// The optional {"metadata": {...}} header line.
bool is_metadata(const Json& line);

}  // namespace fsq::cli

#endif  // FSQ_CLI_CHECK_H_
