#include "document.h"

#include <array>

namespace fsq::cli {

bool is_document_kind(std::string_view kind) {
  for (std::string_view k : {kFourApWitness, kRefutation, kCongruentCertificate, kAdPair, kCurvePoint, kSearchReport}) {
    if (k == kind) return true;
  }
  return false;
}

Json make_document(std::string_view kind, Json inputs, Json payload) {
  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["inputs"] = std::move(inputs);
  doc["payload"] = std::move(payload);
  return doc;
}

// --- Encoding ----------------------------------------------------------------

Json encode(const Integer& v) { return v.get_str(); }
Json encode(const Rational& v) { return v.to_string(); }

Json encode(const EPoint& p) {
  if (p.is_infinity()) return Json{{"infinity", true}};
  return Json{{"x", encode(p.x())}, {"y", encode(p.y())}};
}

Json encode(const QuarticPoint& p) { return Json{{"x", encode(p.x)}, {"y", encode(p.y)}}; }

Json encode(const PrimitiveTriple& t) {
  return Json{{"even_leg", encode(t.even_leg)}, {"odd_leg", encode(t.odd_leg)}, {"hyp", encode(t.hyp)}};
}

Json encode(const AdPair& p) { return Json{{"A", encode(p.a)}, {"D", encode(p.d)}}; }

Json encode(const Trace& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    Json step{{"label", s.label}, {"value", encode(s.value)}, {"square_test", s.square_test}};
    if (s.square_test) step["root"] = s.root ? encode(*s.root) : Json(nullptr);
    out.push_back(std::move(step));
  }
  return out;
}

Json refutation_payload(const Refutation& r) {
  return Json{{"step", r.step},
              {"condition", condition_name(r.condition)},
              {"subject", r.subject},
              {"value", encode(r.value)},
              {"description", r.describe()}};
}

Json witness_payload(const ForwardWitness& w) {
  Json terms = Json::array();
  Json roots = Json::array();
  for (const auto& t : w.candidate.terms()) {
    terms.push_back(encode(t));
    roots.push_back(encode(isqrt(t)));
  }
  return Json{{"x", encode(w.candidate.x())},
              {"n", encode(w.candidate.n())},
              {"degenerate", w.candidate.is_degenerate()},
              {"terms", std::move(terms)},
              {"roots", std::move(roots)},
              {"y", encode(w.witness.y)},
              {"u", encode(w.witness.u)},
              {"v", encode(w.witness.v)},
              {"A", encode(w.pair.a)},
              {"D", encode(w.pair.d)},
              {"odd_leg_positive", w.witness.odd_leg_positive}};
}

Json certificate_payload(const CongruentSearch& s) {
  Json out{{"k", encode(s.k)},
           {"hyp_bound", encode(s.hyp_bound)},
           {"triangles_scanned", std::to_string(s.triangles_scanned)},
           {"found", s.certificate.has_value()}};
  if (!s.certificate) {
    out["certificate"] = nullptr;
    return out;
  }
  const auto& c = *s.certificate;
  out["certificate"] = Json{
      {"triple", encode(c.triple)},
      {"m", encode(c.m)},
      {"area", encode(area(c.triple))},
      {"ap", Json{{"a", encode(c.ap.a)}, {"b", encode(c.ap.b)}, {"c", encode(c.ap.c)}}},
      {"squares", Json::array({encode(c.ap.square_a()), encode(c.ap.square_b()), encode(c.ap.square_c())})}};
  return out;
}

Json descent_payload(const DescentOutcome& d) {
  auto form = [](const Integer& value) {
    const auto root = is_perfect_square(value);
    return Json{{"value", encode(value)}, {"root", root ? encode(*root) : Json(nullptr)}};
  };
  Json out{{"input", encode(d.input)},
           {"forms", Json{{"16A^2+D^2", form(sixteen_form(d.input))}, {"4A^2+D^2", form(four_form(d.input))}}},
           {"fixpoint", d.fixpoint},
           {"next", encode(d.next)}};
  if (d.split) {
    const auto& s = *d.split;
    out["split"] = Json{{"U", encode(s.u)}, {"V", encode(s.v)}, {"U'", encode(s.u_prime)}, {"V'", encode(s.v_prime)},
                        {"a", encode(s.a)}, {"b", encode(s.b)}, {"c", encode(s.c)},         {"d", encode(s.d)}};
  } else {
    out["split"] = nullptr;
  }
  out["first_sign_positive"] = d.first_sign_positive;
  out["second_sign_positive"] = d.second_sign_positive;
  return out;
}

Json search_payload(const SearchReport& r) {
  Json bounds = Json::object();
  for (const auto& [name, value] : r.bounds) bounds[name] = encode(value);
  Json options = Json::object();
  for (const auto& [name, value] : r.options) options[name] = value;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json row = Json::array();
    for (const auto& v : h) row.push_back(encode(v));
    hits.push_back(std::move(row));
  }
  return Json{{"search", search_kind_name(r.kind)},
              {"bounds", std::move(bounds)},
              {"options", std::move(options)},
              {"fields", hit_fields(r.kind)},
              {"hits", std::move(hits)},
              {"hit_count", std::to_string(r.hits.size())},
              {"exhaustive", r.exhaustive},
              {"candidates_scanned", std::to_string(r.candidates_scanned)}};
}

// --- Decoding ----------------------------------------------------------------

const Json& field(const Json& obj, std::string_view name) {
  if (!obj.is_object()) throw DocumentError("expected an object holding '" + std::string(name) + "'");
  const auto it = obj.find(name);
  if (it == obj.end()) throw DocumentError("missing field '" + std::string(name) + "'");
  return *it;
}

std::string decode_string(const Json& v) {
  if (!v.is_string()) throw DocumentError("expected a string, got " + v.dump());
  return v.get<std::string>();
}

bool decode_bool(const Json& v) {
  if (!v.is_boolean()) throw DocumentError("expected a boolean, got " + v.dump());
  return v.get<bool>();
}

Integer decode_integer(const Json& v) {
  const std::string text = decode_string(v);
  Integer out;
  try {
    out = parse_integer(text);
  } catch (const std::exception&) {
    throw DocumentError("not a decimal integer: \"" + text + "\"");
  }
  if (out.get_str() != text) throw DocumentError("integer not in canonical form: \"" + text + "\"");
  return out;
}

Rational decode_rational(const Json& v) {
  const std::string text = decode_string(v);
  Rational out;
  try {
    out = parse_rational(text);
  } catch (const std::exception&) {
    throw DocumentError("not a rational: \"" + text + "\"");
  }
  if (out.to_string() != text) throw DocumentError("rational not in lowest terms: \"" + text + "\"");
  return out;
}

EPoint decode_epoint(const Json& v) {
  if (v.is_object() && v.contains("infinity")) {
    if (!decode_bool(v["infinity"]) || v.size() != 1) throw DocumentError("malformed point at infinity");
    return EPoint::infinity();
  }
  return EPoint::affine(decode_rational(field(v, "x")), decode_rational(field(v, "y")));
}

QuarticPoint decode_quartic_point(const Json& v) {
  return {decode_rational(field(v, "x")), decode_rational(field(v, "y"))};
}

PrimitiveTriple decode_triple(const Json& v) {
  return {decode_integer(field(v, "even_leg")), decode_integer(field(v, "odd_leg")), decode_integer(field(v, "hyp"))};
}

AdPair decode_ad_pair(const Json& v) { return {decode_integer(field(v, "A")), decode_integer(field(v, "D"))}; }

Trace decode_trace(const Json& v) {
  if (!v.is_array()) throw DocumentError("trace must be an array");
  Trace out;
  for (const auto& s : v) {
    TraceStep step{decode_string(field(s, "label")), decode_integer(field(s, "value")),
                   decode_bool(field(s, "square_test")), std::nullopt};
    if (step.square_test) {
      const Json& root = field(s, "root");
      if (!root.is_null()) step.root = decode_integer(root);
    }
    out.push_back(std::move(step));
  }
  return out;
}

Refutation decode_refutation(const Json& payload) {
  const std::string name = decode_string(field(payload, "condition"));
  const auto condition = condition_from_name(name);
  if (!condition) throw DocumentError("unknown condition '" + name + "'");
  return {decode_string(field(payload, "step")), *condition, decode_string(field(payload, "subject")),
          decode_integer(field(payload, "value"))};
}

SearchReport decode_search_report(const Json& payload) {
  const std::string name = decode_string(field(payload, "search"));
  const auto kind = search_kind_from_name(name);
  if (!kind) throw DocumentError("unknown search '" + name + "'");
  SearchReport r{*kind, {}, {}, {}, decode_bool(field(payload, "exhaustive")), 0};
  const Json& bounds = field(payload, "bounds");
  if (!bounds.is_object()) throw DocumentError("bounds must be an object");
  for (const auto& [k, v] : bounds.items()) r.bounds.emplace_back(k, decode_integer(v));
  const Json& options = field(payload, "options");
  if (!options.is_object()) throw DocumentError("options must be an object");
  for (const auto& [k, v] : options.items()) r.options.emplace_back(k, decode_string(v));
  const Json& hits = field(payload, "hits");
  if (!hits.is_array()) throw DocumentError("hits must be an array");
  for (const auto& row : hits) {
    if (!row.is_array()) throw DocumentError("each hit must be an array");
    std::vector<Integer> h;
    for (const auto& v : row) h.push_back(decode_integer(v));
    r.hits.push_back(std::move(h));
  }
  const Integer scanned = decode_integer(field(payload, "candidates_scanned"));
  if (sgn(scanned) < 0 || !scanned.fits_ulong_p()) throw DocumentError("candidates_scanned out of range");
  r.candidates_scanned = scanned.get_ui();
  return r;
}

}  // namespace fsq::cli
