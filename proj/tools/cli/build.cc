#include "build.h"

#include <algorithm>

namespace fsq::cli {
namespace {

Emission refutation_emission(Json inputs, const Refutation& r, const Trace* trace) {
  Json doc = make_document(kRefutation, std::move(inputs), refutation_payload(r));
  if (trace) doc["trace"] = encode(*trace);
  return {std::move(doc), kExitNegative};
}

// Nonexistence searches expect no hits; relaxed searches expect some.
int search_exit(const SearchReport& r, bool hits_expected) {
  if (hits_expected) return r.hits.empty() ? kExitNegative : kExitExpected;
  return r.hits.empty() ? kExitExpected : kExitCounterexample;
}

Emission search_emission(Json inputs, const SearchReport& r, bool hits_expected) {
  return {make_document(kSearchReport, std::move(inputs), search_payload(r)), search_exit(r, hits_expected)};
}

std::vector<std::string> decode_strings(const Json& v) {
  if (!v.is_array()) throw DocumentError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(decode_string(s));
  return out;
}

}  // namespace

Emission build_verify_ap(const std::vector<std::string>& squares, bool trace, std::optional<bool> rational_mode) {
  if (squares.size() != 4) throw UsageError("verify-ap takes exactly four values");
  const bool rational = rational_mode.value_or(std::any_of(
      squares.begin(), squares.end(), [](const std::string& s) { return s.find('/') != std::string::npos; }));
  Json echoed = Json::array();
  std::array<Rational, 4> rationals;
  std::array<Integer, 4> integers;
  for (std::size_t i = 0; i < 4; ++i) {
    try {
      if (rational) {
        rationals[i] = parse_rational(squares[i]);
        echoed.push_back(encode(rationals[i]));
      } else {
        integers[i] = parse_integer(squares[i]);
        echoed.push_back(encode(integers[i]));
      }
    } catch (const std::exception& e) {
      throw UsageError("cannot parse '" + squares[i] + "': " + e.what());
    }
  }
  Json inputs{{"command", "verify-ap"},
              {"arithmetic", rational ? "rational" : "integer"},
              {"squares", std::move(echoed)},
              {"trace", trace}};
  Trace steps;
  Trace* t = trace ? &steps : nullptr;
  const auto outcome = rational ? verify_window(std::span<const Rational, 4>(rationals), t)
                                : verify_window(std::span<const Integer, 4>(integers), t);
  if (const auto* r = std::get_if<Refutation>(&outcome)) return refutation_emission(std::move(inputs), *r, t);
  const auto& w = std::get<ForwardWitness>(outcome);
  Json doc = make_document(kFourApWitness, std::move(inputs), witness_payload(w));
  if (t) doc["trace"] = encode(steps);
  return {std::move(doc), w.candidate.is_degenerate() ? kExitExpected : kExitCounterexample};
}

Emission build_certify(const Integer& k, const Integer& hyp_bound, unsigned partitions) {
  Json inputs{{"command", "certify"}, {"k", encode(k)}, {"hyp_bound", encode(hyp_bound)}};
  const auto search = certify_congruent(k, hyp_bound, partitions);
  return {make_document(kCongruentCertificate, std::move(inputs), certificate_payload(search)),
          search.certificate ? kExitExpected : kExitNegative};
}

Emission build_search4(const Integer& root_bound, bool three_term, unsigned partitions) {
  Json inputs{{"command", "search4"}, {"root_bound", encode(root_bound)}, {"three_term", three_term}};
  const auto r = three_term ? search_three_square_prefix(root_bound, partitions)
                            : search_four_square_ap(root_bound, partitions);
  return search_emission(std::move(inputs), r, three_term);
}

Emission build_search_ad(const Integer& a_bound, const Integer& d_bound, bool single_form, unsigned partitions) {
  Json inputs{{"command", "search-ad"},
              {"a_bound", encode(a_bound)},
              {"d_bound", encode(d_bound)},
              {"single_form", single_form}};
  const auto r = search_double_square_pairs(
      a_bound, d_bound, single_form ? DoubleSquareForms::kSixteenOnly : DoubleSquareForms::kBoth, partitions);
  return search_emission(std::move(inputs), r, single_form);
}

Emission build_euler_search(const Integer& x_bound, const Integer& y_bound, bool relaxed_parity, bool single_form,
                            unsigned partitions) {
  Json inputs{{"command", "euler-search"},
              {"x_bound", encode(x_bound)},
              {"y_bound", encode(y_bound)},
              {"relaxed_parity", relaxed_parity},
              {"single_form", single_form}};
  const auto r = search_euler_pairs(x_bound, y_bound, {!relaxed_parity, !single_form}, partitions);
  return search_emission(std::move(inputs), r, relaxed_parity || single_form);
}

Emission build_search3(const Integer& k, const Integer& root_bound, unsigned partitions) {
  Json inputs{{"command", "search3"}, {"k", encode(k)}, {"root_bound", encode(root_bound)}};
  return search_emission(std::move(inputs), search_three_square_ap(k, root_bound, partitions), true);
}

Emission build_curve_torsion() {
  Json points = Json::array();
  Json orders = Json::array();
  for (const auto& p : torsion_points()) {
    points.push_back(encode(p));
    orders.push_back(std::to_string(*e_order(p)));
  }
  Json payload{{"operation", "torsion"}, {"model", "E"}, {"points", std::move(points)}, {"orders", std::move(orders)}};
  return {make_document(kCurvePoint, Json{{"command", "curve torsion"}}, std::move(payload)), kExitExpected};
}

Emission build_curve_map(bool from_quartic, const Rational& x, const Rational& y) {
  Json inputs{{"command", "curve map"}, {"from", from_quartic ? "quartic" : "e"}, {"x", encode(x)}, {"y", encode(y)}};
  Json from;
  Json to;
  if (from_quartic) {
    const QuarticPoint q{x, y};
    from = Json{{"model", "C"}, {"point", encode(q)}};
    to = Json{{"model", "E"}, {"point", encode(quartic_to_e(q))}};
  } else {
    const EPoint p = EPoint::affine(x, y);
    from = Json{{"model", "E"}, {"point", encode(p)}};
    to = Json{{"model", "C"}, {"point", encode(e_to_quartic(p))}};
  }
  Json payload{{"operation", "map"}, {"from", std::move(from)}, {"to", std::move(to)}};
  return {make_document(kCurvePoint, std::move(inputs), std::move(payload)), kExitExpected};
}

Emission build_curve_search(const Integer& height, unsigned partitions) {
  const auto found = naive_point_search(height, partitions);
  Json points = Json::array();
  for (const auto& p : found) points.push_back(encode(p));
  Json payload{{"operation", "search"},
               {"model", "E"},
               {"height_bound", encode(height)},
               {"points", std::move(points)},
               {"point_count", std::to_string(found.size())}};
  return {make_document(kCurvePoint, Json{{"command", "curve search"}, {"height", encode(height)}}, std::move(payload)),
          kExitExpected};
}

Emission build_descend(const Integer& a, const Integer& d, bool trace) {
  Json inputs{{"command", "descend"}, {"A", encode(a)}, {"D", encode(d)}, {"trace", trace}};
  Trace steps;
  Trace* t = trace ? &steps : nullptr;
  const auto outcome = descend(a, d, t);
  if (const auto* r = std::get_if<Refutation>(&outcome)) return refutation_emission(std::move(inputs), *r, t);
  const auto& out = std::get<DescentOutcome>(outcome);
  Json doc = make_document(kAdPair, std::move(inputs), descent_payload(out));
  if (t) doc["trace"] = encode(steps);
  return {std::move(doc), out.fixpoint ? kExitExpected : kExitCounterexample};
}

Emission rebuild(const Json& inputs, unsigned partitions) {
  const std::string command = decode_string(field(inputs, "command"));
  auto integer = [&](std::string_view name) { return decode_integer(field(inputs, name)); };
  auto flag = [&](std::string_view name) { return decode_bool(field(inputs, name)); };
  if (command == "verify-ap") {
    const std::string mode = decode_string(field(inputs, "arithmetic"));
    if (mode != "integer" && mode != "rational") throw DocumentError("arithmetic must be 'integer' or 'rational'");
    auto emission = build_verify_ap(decode_strings(field(inputs, "squares")), flag("trace"), mode == "rational");
    if (emission.document["inputs"] != inputs) throw DocumentError("inputs are not in canonical form");
    return emission;
  }
  if (command == "certify") return build_certify(integer("k"), integer("hyp_bound"), partitions);
  if (command == "search4") return build_search4(integer("root_bound"), flag("three_term"), partitions);
  if (command == "search-ad") {
    return build_search_ad(integer("a_bound"), integer("d_bound"), flag("single_form"), partitions);
  }
  if (command == "euler-search") {
    return build_euler_search(integer("x_bound"), integer("y_bound"), flag("relaxed_parity"), flag("single_form"),
                              partitions);
  }
  if (command == "search3") return build_search3(integer("k"), integer("root_bound"), partitions);
  if (command == "curve torsion") return build_curve_torsion();
  if (command == "curve map") {
    const std::string from = decode_string(field(inputs, "from"));
    if (from != "quartic" && from != "e") throw DocumentError("curve map source must be 'quartic' or 'e'");
    return build_curve_map(from == "quartic", decode_rational(field(inputs, "x")), decode_rational(field(inputs, "y")));
  }
  if (command == "curve search") return build_curve_search(integer("height"), partitions);
  if (command == "descend") return build_descend(integer("A"), integer("D"), flag("trace"));
  throw DocumentError("unknown command '" + command + "'");
}

}  // namespace fsq::cli
