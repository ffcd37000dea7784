#ifndef FSQ_CLI_DOCUMENT_H_
#define FSQ_CLI_DOCUMENT_H_

// JSON encoding of the certificate documents the tool emits. One document per
// line; integers and rationals are decimal strings so no precision is lost.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fsq/congruent.h"
#include "fsq/curves.h"
#include "fsq/descent.h"
#include "fsq/search.h"
#include "json.hpp"

namespace fsq::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

inline constexpr std::string_view kFourApWitness = "four-ap-witness";
inline constexpr std::string_view kRefutation = "refutation";
inline constexpr std::string_view kCongruentCertificate = "congruent-certificate";
inline constexpr std::string_view kAdPair = "ad-pair";
inline constexpr std::string_view kCurvePoint = "curve-point";
inline constexpr std::string_view kSearchReport = "search-report";

bool is_document_kind(std::string_view kind);

// A document field that is missing, mistyped or not in canonical form.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json make_document(std::string_view kind, Json inputs, Json payload);

Json encode(const Integer& v);
Json encode(const Rational& v);
Json encode(const EPoint& p);
Json encode(const QuarticPoint& p);
Json encode(const PrimitiveTriple& t);
Json encode(const AdPair& p);
Json encode(const Trace& trace);

Json refutation_payload(const Refutation& r);
Json witness_payload(const ForwardWitness& w);
Json certificate_payload(const CongruentSearch& s);
Json descent_payload(const DescentOutcome& d);
Json search_payload(const SearchReport& r);

// Strict readers: the field must exist, have the right JSON type and, for
// numbers, be in canonical decimal form.
const Json& field(const Json& obj, std::string_view name);
Integer decode_integer(const Json& v);
Rational decode_rational(const Json& v);
bool decode_bool(const Json& v);
std::string decode_string(const Json& v);
EPoint decode_epoint(const Json& v);
QuarticPoint decode_quartic_point(const Json& v);
PrimitiveTriple decode_triple(const Json& v);
AdPair decode_ad_pair(const Json& v);
Trace decode_trace(const Json& v);
Refutation decode_refutation(const Json& payload);
SearchReport decode_search_report(const Json& payload);

}  // namespace fsq::cli

#endif  // FSQ_CLI_DOCUMENT_H_
