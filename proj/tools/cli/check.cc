#include "check.h"

#include <algorithm>
#include <array>

#include "build.h"

namespace fsq::cli {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DocumentError(what);
}

std::vector<Integer> decode_integers(const Json& v, std::size_t size) {
  require(v.is_array() && v.size() == size, "expected an array of " + std::to_string(size) + " integers");
  std::vector<Integer> out;
  for (const auto& e : v) out.push_back(decode_integer(e));
  return out;
}

void check_trace(const Json& doc) {
  if (!doc.contains("trace")) return;
  for (const auto& step : decode_trace(doc["trace"])) {
    if (!step.square_test) continue;
    if (step.root) {
      require(sgn(*step.root) >= 0 && *step.root * *step.root == step.value,
              "trace: " + step.label + " root does not square to its value");
    } else {
      require(!is_perfect_square(step.value), "trace: " + step.label + " is a square but recorded as not");
    }
  }
}

// The echoed squares are a positive multiple of the window terms, in order
// or reversed.
void check_witness_matches_inputs(const Json& inputs, const std::array<Integer, 4>& terms) {
  const std::string mode = decode_string(field(inputs, "arithmetic"));
  const Json& squares = field(inputs, "squares");
  require(squares.is_array() && squares.size() == 4, "inputs must echo four squares");
  std::array<Rational, 4> in;
  for (std::size_t i = 0; i < 4; ++i) {
    in[i] = mode == "rational" ? decode_rational(squares[i]) : Rational(decode_integer(squares[i]));
  }
  auto proportional = [&](bool reversed) {
    auto term = [&](std::size_t i) { return Rational(terms[reversed ? 3 - i : i]); };
    for (std::size_t i = 0; i < 4; ++i) {
      if (in[i].sign() <= 0 || in[i] * term(0) != in[0] * term(i)) return false;
    }
    return true;
  };
  require(proportional(false) || proportional(true), "window terms are not proportional to the echoed squares");
}

void check_four_ap_witness(const Json& doc) {
  const Json& p = doc["payload"];
  const Integer x = decode_integer(field(p, "x"));
  const Integer n = decode_integer(field(p, "n"));
  const auto candidate = FourApCandidate::check(x, n);
  require(succeeded(candidate), "(x, n) is not a canonical window");
  const auto& c = std::get<FourApCandidate>(candidate);
  require(c.n() == n, "n is not canonical");
  require(decode_bool(field(p, "degenerate")) == c.is_degenerate(), "degenerate flag disagrees with n");

  const auto terms = decode_integers(field(p, "terms"), 4);
  const auto roots = decode_integers(field(p, "roots"), 4);
  const auto expected = c.terms();
  Integer product = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    require(terms[i] == expected[i], std::string("term ") + kTermLabels[i] + " disagrees with (x, n)");
    require(sgn(roots[i]) >= 0 && roots[i] * roots[i] == terms[i], std::string("root of ") + kTermLabels[i]);
    product *= roots[i];
  }
  const DescentWitness w{decode_integer(field(p, "y")),
                         decode_integer(field(p, "u")),
                         decode_integer(field(p, "v")),
                         decode_integer(field(p, "A")),
                         decode_integer(field(p, "D")),
                         decode_bool(field(p, "odd_leg_positive"))};
  require(w.y == product, "y is not the product of the roots");
  if (auto why = validate(w, c)) throw DocumentError("witness: " + *why);
  check_witness_matches_inputs(doc["inputs"], expected);
}

void check_refutation(const Json& doc) {
  const Json& p = doc["payload"];
  const Refutation r = decode_refutation(p);
  require(r.replay(), "recorded value " + r.value.get_str() + " does not violate " +
                          std::string(condition_name(r.condition)));
  require(decode_string(field(p, "description")) == r.describe(), "description does not match the refutation");
}

void check_congruent_certificate(const Json& doc) {
  const Json& p = doc["payload"];
  const Json& inputs = doc["inputs"];
  const Integer k = decode_integer(field(p, "k"));
  const Integer bound = decode_integer(field(p, "hyp_bound"));
  require(k == decode_integer(field(inputs, "k")) && bound == decode_integer(field(inputs, "hyp_bound")),
          "payload does not echo the inputs");
  require(sgn(k) > 0 && is_squarefree(k), "k is not a squarefree positive integer");
  require(sgn(decode_integer(field(p, "triangles_scanned"))) >= 0, "negative scan count");
  const bool found = decode_bool(field(p, "found"));
  const Json& cert = field(p, "certificate");
  if (!found) {
    require(cert.is_null(), "certificate present although found is false");
    return;
  }
  const PrimitiveTriple t = decode_triple(field(cert, "triple"));
  const Integer m = decode_integer(field(cert, "m"));
  const Json& ap = field(cert, "ap");
  const CongruentCertificate c{
      k, t, m,
      ThreeSquareAP{decode_rational(field(ap, "a")), decode_rational(field(ap, "b")), decode_rational(field(ap, "c")),
                    k}};
  if (auto why = verify_certificate(c)) throw DocumentError("certificate: " + *why);
  require(decode_integer(field(cert, "area")) == area(t), "area does not match the triple");
  const Json& squares = field(cert, "squares");
  require(squares.is_array() && squares.size() == 3, "expected three squares");
  require(decode_rational(squares[0]) == c.ap.square_a() && decode_rational(squares[1]) == c.ap.square_b() &&
              decode_rational(squares[2]) == c.ap.square_c(),
          "squares do not match the roots");
  require(t.hyp <= bound, "triple lies beyond the searched bound");
}

void check_form(const Json& forms, const char* name, const Integer& value) {
  const Json& f = field(forms, name);
  require(decode_integer(field(f, "value")) == value, std::string(name) + " value is wrong");
  const Json& root = field(f, "root");
  require(!root.is_null(), std::string(name) + " must be a square for a descent step");
  const Integer r = decode_integer(root);
  require(sgn(r) >= 0 && r * r == value, std::string(name) + " root does not square to its value");
}

void check_ad_pair(const Json& doc) {
  const Json& p = doc["payload"];
  const Json& inputs = doc["inputs"];
  const AdPair input = decode_ad_pair(field(p, "input"));
  require(abs(decode_integer(field(inputs, "A"))) == input.a && abs(decode_integer(field(inputs, "D"))) == input.d,
          "input pair does not echo the inputs");
  try {
    validate(input);
  } catch (const std::domain_error& e) {
    throw DocumentError(e.what());
  }
  const Json& forms = field(p, "forms");
  check_form(forms, "16A^2+D^2", sixteen_form(input));
  check_form(forms, "4A^2+D^2", four_form(input));
  const AdPair next = decode_ad_pair(field(p, "next"));
  decode_bool(field(p, "first_sign_positive"));
  decode_bool(field(p, "second_sign_positive"));
  const Json& split = field(p, "split");
  if (decode_bool(field(p, "fixpoint"))) {
    require(sgn(input.a) == 0 && next == input, "only (0, 1) is a fixpoint and it maps to itself");
    require(split.is_null(), "a fixpoint has no split");
    return;
  }
  require(sgn(input.a) > 0, "a pair with A = 0 must be a fixpoint");
  auto get = [&](const char* name) { return decode_integer(field(split, name)); };
  const SplitWitness claimed{get("U"), get("V"), get("U'"), get("V'"), get("a"), get("b"), get("c"), get("d")};
  SplitWitness recomputed;
  try {
    recomputed = split_factorizations(input.a, claimed.u, claimed.v, claimed.u_prime, claimed.v_prime);
  } catch (const std::domain_error& e) {
    throw DocumentError(std::string("split: ") + e.what());
  }
  require(recomputed == claimed, "split does not match its factorizations");
  require(next == AdPair{claimed.a, claimed.d}, "next pair is not (a, d)");
  require(!certify(next).has_value(), "next pair is not a double-square pair");
  require(next.a * next.d < input.a * input.d, "descent did not decrease AD");
}

bool strictly_sorted(const std::vector<EPoint>& points) {
  return std::adjacent_find(points.begin(), points.end(),
                            [](const EPoint& a, const EPoint& b) { return !(a < b); }) == points.end();
}

std::vector<EPoint> decode_points(const Json& v) {
  require(v.is_array(), "points must be an array");
  std::vector<EPoint> out;
  for (const auto& e : v) {
    out.push_back(decode_epoint(e));
    require(on_e(out.back()), "point " + out.back().to_string() + " is not on E");
  }
  require(strictly_sorted(out), "points are not strictly sorted");
  return out;
}

void check_curve_point(const Json& doc) {
  const Json& p = doc["payload"];
  const Json& inputs = doc["inputs"];
  const std::string op = decode_string(field(p, "operation"));
  if (op == "torsion") {
    require(decode_string(field(p, "model")) == "E", "torsion points live on E");
    const auto points = decode_points(field(p, "points"));
    const Json& orders = field(p, "orders");
    require(orders.is_array() && orders.size() == points.size(), "one order per point");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto order = e_order(points[i]);
      require(order && decode_integer(orders[i]) == *order, "order of " + points[i].to_string() + " is wrong");
    }
    return;
  }
  if (op == "map") {
    const Json& from = field(p, "from");
    const Json& to = field(p, "to");
    const std::string from_model = decode_string(field(from, "model"));
    const std::string to_model = decode_string(field(to, "model"));
    const std::string source = decode_string(field(inputs, "from"));
    const Rational ix = decode_rational(field(inputs, "x"));
    const Rational iy = decode_rational(field(inputs, "y"));
    if (from_model == "C" && to_model == "E") {
      require(source == "quartic", "inputs name a different source curve");
      const QuarticPoint q = decode_quartic_point(field(from, "point"));
      require(q == QuarticPoint{ix, iy}, "source point does not echo the inputs");
      require(on_quartic(q), "source point is not on C");
      require(quartic_to_e(q) == decode_epoint(field(to, "point")), "image is not (Y, XY)");
      return;
    }
    if (from_model == "E" && to_model == "C") {
      require(source == "e", "inputs name a different source curve");
      const EPoint e = decode_epoint(field(from, "point"));
      require(e == EPoint::affine(ix, iy), "source point does not echo the inputs");
      require(on_e(e), "source point is not on E");
      require(e_to_quartic(e) == decode_quartic_point(field(to, "point")), "image is not (y/x, x)");
      return;
    }
    throw DocumentError("map must go between C and E");
  }
  if (op == "search") {
    require(decode_string(field(p, "model")) == "E", "point search runs on E");
    const Integer h = decode_integer(field(p, "height_bound"));
    require(h == decode_integer(field(inputs, "height")), "height bound does not echo the inputs");
    const auto points = decode_points(field(p, "points"));
    for (const auto& pt : points) {
      require(!pt.is_infinity(), "search reports affine points only");
      require(abs(pt.x().num()) <= h && pt.x().den() <= h, "point " + pt.to_string() + " exceeds the height bound");
    }
    require(decode_integer(field(p, "point_count")) == static_cast<unsigned long>(points.size()),
            "point_count does not match");
    return;
  }
  throw DocumentError("unknown curve operation '" + op + "'");
}

// Root of the middle square of a progression hit.
Integer middle_root(const std::vector<Integer>& hit) { return isqrt(hit[1]); }

void check_search_report(const Json& doc) {
  const Json& p = doc["payload"];
  const Json& inputs = doc["inputs"];
  const SearchReport r = decode_search_report(p);
  require(r.exhaustive, "reports cover their whole grid");
  const Json& fields = field(p, "fields");
  require(fields == Json(hit_fields(r.kind)), "fields do not match the search kind");
  require(decode_integer(field(p, "hit_count")) == static_cast<unsigned long>(r.hits.size()), "hit_count");
  require(std::adjacent_find(r.hits.begin(), r.hits.end(), std::greater_equal<>()) == r.hits.end(),
          "hits are not strictly sorted");
  for (const auto& [name, value] : r.bounds) {
    if (inputs.contains(name)) require(decode_integer(inputs[name]) == value, name + " does not echo the inputs");
  }
  for (const auto& h : r.hits) {
    std::string shown;
    for (const auto& v : h) shown += (shown.empty() ? "" : ",") + v.get_str();
    require(validate_hit(r, h), "hit (" + shown + ") fails its defining condition");
    bool inside = true;
    switch (r.kind) {
      case SearchKind::kFourSquareAp:
      case SearchKind::kThreeSquarePrefix:
      case SearchKind::kThreeSquareAp:
        inside = middle_root(h) <= r.bound("root_bound");
        break;
      case SearchKind::kDoubleSquarePairs:
        inside = h[0] <= r.bound("a_bound") && h[1] <= r.bound("d_bound");
        break;
      case SearchKind::kEulerPairs:
        inside = h[0] <= r.bound("x_bound") && h[1] <= r.bound("y_bound");
        break;
    }
    require(inside, "hit (" + shown + ") lies outside the grid");
  }
}

void check_replay(const Json& doc, unsigned partitions) {
  const Emission again = rebuild(doc["inputs"], partitions);
  require(again.document["kind"] == doc["kind"], "replay produced a different kind of document");
  require(again.document["payload"] == doc["payload"], "replay produced a different payload");
  if (doc.contains("trace")) require(again.document["trace"] == doc["trace"], "replay produced a different trace");
}

}  // namespace

bool is_metadata(const Json& line) { return line.is_object() && line.size() == 1 && line.contains("metadata"); }

std::optional<std::string> check_document(const Json& doc, bool replay, unsigned partitions) {
  try {
    require(doc.is_object(), "a document is a JSON object");
    for (const auto& [key, value] : doc.items()) {
      require(key == "schema_version" || key == "kind" || key == "inputs" || key == "payload" || key == "trace",
              "unexpected top-level field '" + key + "'");
    }
    require(decode_string(field(doc, "schema_version")) == kSchemaVersion, "unsupported schema_version");
    const std::string kind = decode_string(field(doc, "kind"));
    require(is_document_kind(kind), "unknown kind '" + kind + "'");
    require(field(doc, "inputs").is_object(), "inputs must be an object");
    require(field(doc, "payload").is_object(), "payload must be an object");
    check_trace(doc);
    if (kind == kFourApWitness) {
      check_four_ap_witness(doc);
    } else if (kind == kRefutation) {
      check_refutation(doc);
    } else if (kind == kCongruentCertificate) {
      check_congruent_certificate(doc);
    } else if (kind == kAdPair) {
      check_ad_pair(doc);
    } else if (kind == kCurvePoint) {
      check_curve_point(doc);
    } else {
      check_search_report(doc);
    }
    if (replay) check_replay(doc, partitions);
  } catch (const DocumentError& e) {
    return e.what();
  } catch (const UsageError& e) {
    return std::string("inputs do not describe a valid command: ") + e.what();
  } catch (const std::exception& e) {
    return e.what();
  }
  return std::nullopt;
}

}  // namespace fsq::cli
