#include "app.h"

#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "build.h"
#include "check.h"

#ifndef FSQ_VERSION
#define FSQ_VERSION "0.0.0"
#endif

namespace fsq::cli {
namespace {

Integer integer_arg(const std::string& text, const char* name) {
  try {
    return parse_integer(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + ": not an integer: '" + text + "'");
  }
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(name) + ": not a rational: '" + text + "' (" + e.what() + ")");
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int run_check(const std::string& path, bool replay, unsigned partitions, std::istream& in, std::ostream& out) {
  std::ifstream file;
  std::istream* source = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    source = &file;
  }
  std::string line;
  int line_no = 0;
  int documents = 0;
  int rejected = 0;
  while (std::getline(*source, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Json doc = Json::parse(line, nullptr, false);
    if (doc.is_discarded()) {
      out << "rejected line " << line_no << ": not valid JSON\n";
      ++rejected;
      continue;
    }
    if (is_metadata(doc)) continue;
    ++documents;
    const std::string kind = doc.is_object() && doc.contains("kind") && doc["kind"].is_string()
                                 ? doc["kind"].get<std::string>()
                                 : "?";
    if (auto why = check_document(doc, replay, partitions)) {
      out << "rejected line " << line_no << " (" << kind << "): " << *why << "\n";
      ++rejected;
    } else {
      out << "ok line " << line_no << " (" << kind << ")\n";
    }
  }
  if (documents == 0 && rejected == 0) {
    out << "rejected: no documents\n";
    return kExitNegative;
  }
  return rejected == 0 ? kExitExpected : kExitNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact four-squares-in-progression toolkit: descent pipeline, congruent certificates, "
               "curve 24A1 and brute-force oracles.",
               "fsq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", FSQ_VERSION);

  unsigned partitions = 1;
  bool metadata = false;
  app.add_option("--partitions", partitions, "Range partitions for searches")
      ->envname("FSQ_PARTITIONS")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("--metadata", metadata, "Print a metadata header line with a timestamp");

  // Each subcommand stores the work to do; it runs after parsing succeeds.
  std::function<Emission()> job;
  std::function<int()> check_job;

  std::vector<std::string> squares;
  bool verify_trace = false;
  auto* verify = app.add_subcommand("verify-ap", "Run four squares (integers or p/q) through the descent pipeline");
  verify->add_option("squares", squares, "Four values in progression")->expected(4)->required();
  verify->add_flag("--trace", verify_trace, "Include every intermediate value and square test");
  verify->callback([&] { job = [&] { return build_verify_ap(squares, verify_trace); }; });

  std::string certify_k;
  std::string hyp_bound = "10000";
  auto* certify = app.add_subcommand("certify", "Find a triangle certifying that k is congruent");
  certify->add_option("k", certify_k, "Squarefree k >= 1")->required();
  certify->add_option("--hyp-bound", hyp_bound, "Largest hypotenuse searched")->capture_default_str();
  certify->callback([&] {
    job = [&] {
      return build_certify(integer_arg(certify_k, "k"), integer_arg(hyp_bound, "--hyp-bound"), partitions);
    };
  });

  std::string root_bound4 = "10000";
  bool three_term = false;
  auto* search4 = app.add_subcommand("search4", "Search for four squares in progression");
  search4->add_option("--root-bound", root_bound4, "Largest root b of the second square")->capture_default_str();
  search4->add_flag("--three-term", three_term, "Only require three squares (expects hits)");
  search4->callback([&] {
    job = [&] { return build_search4(integer_arg(root_bound4, "--root-bound"), three_term, partitions); };
  });

  std::string a_bound = "2000";
  std::string d_bound = "20000";
  bool ad_single = false;
  auto* search_ad = app.add_subcommand("search-ad", "Search for pairs with 16A^2+D^2 and 4A^2+D^2 both squares");
  search_ad->add_option("--a-bound", a_bound, "Largest A")->capture_default_str();
  search_ad->add_option("--d-bound", d_bound, "Largest odd D")->capture_default_str();
  search_ad->add_flag("--single-form", ad_single, "Only require 16A^2+D^2 square (expects hits)");
  search_ad->callback([&] {
    job = [&] {
      return build_search_ad(integer_arg(a_bound, "--a-bound"), integer_arg(d_bound, "--d-bound"), ad_single,
                             partitions);
    };
  });

  std::string x_bound = "10000";
  std::string y_bound = "10000";
  bool relaxed_parity = false;
  bool euler_single = false;
  auto* euler = app.add_subcommand("euler-search", "Search for x odd, y even with x^2+y^2 and x^2+4y^2 squares");
  euler->add_option("--x-bound", x_bound, "Largest x")->capture_default_str();
  euler->add_option("--y-bound", y_bound, "Largest y")->capture_default_str();
  euler->add_flag("--relaxed-parity", relaxed_parity, "Allow any parity (expects hits)");
  euler->add_flag("--single-form", euler_single, "Only require x^2+y^2 square (expects hits)");
  euler->callback([&] {
    job = [&] {
      return build_euler_search(integer_arg(x_bound, "--x-bound"), integer_arg(y_bound, "--y-bound"), relaxed_parity,
                                euler_single, partitions);
    };
  });

  std::string k3;
  std::string root_bound3 = "100";
  auto* search3 = app.add_subcommand("search3", "Search for three integer squares in progression with difference k*m^2");
  search3->add_option("--k", k3, "Squarefree k >= 1")->required();
  search3->add_option("--root-bound", root_bound3, "Largest root of the middle square")->capture_default_str();
  search3->callback([&] {
    job = [&] { return build_search3(integer_arg(k3, "--k"), integer_arg(root_bound3, "--root-bound"), partitions); };
  });

  auto* curve = app.add_subcommand("curve", "The quartic C and the curve E: y^2 = x(x+1)(x+4)");
  curve->require_subcommand(1);
  auto* torsion = curve->add_subcommand("torsion", "List the rational torsion points of E");
  torsion->callback([&] { job = [] { return build_curve_torsion(); }; });

  std::vector<std::string> from_quartic;
  std::vector<std::string> from_e;
  auto* map = curve->add_subcommand("map", "Map a point between C and E");
  auto* fq = map->add_option("--from-quartic", from_quartic, "X Y on C")->expected(2);
  auto* fe = map->add_option("--from-e", from_e, "x y on E")->expected(2);
  fq->excludes(fe);
  map->require_option(1);
  map->callback([&] {
    job = [&] {
      const bool quartic = !from_quartic.empty();
      const auto& xy = quartic ? from_quartic : from_e;
      return build_curve_map(quartic, rational_arg(xy[0], "x"), rational_arg(xy[1], "y"));
    };
  });

  std::string height = "1000";
  auto* csearch = curve->add_subcommand("search", "All points of E with x = p/q, |p|, q <= height");
  csearch->add_option("--height", height, "Height bound")->capture_default_str();
  csearch->callback([&] { job = [&] { return build_curve_search(integer_arg(height, "--height"), partitions); }; });

  std::string big_a;
  std::string big_d;
  bool descend_trace = false;
  auto* descend_cmd = app.add_subcommand("descend", "Apply one descent step to (A, D)");
  descend_cmd->add_option("A", big_a, "A")->required();
  descend_cmd->add_option("D", big_d, "D")->required();
  descend_cmd->add_flag("--trace", descend_trace, "Include every intermediate value and square test");
  descend_cmd->callback([&] {
    job = [&] { return build_descend(integer_arg(big_a, "A"), integer_arg(big_d, "D"), descend_trace); };
  });

  std::string check_path = "-";
  bool replay = false;
  auto* check = app.add_subcommand("check", "Re-verify documents (one JSON object per line)");
  check->add_option("file", check_path, "File to read, or - for stdin")->capture_default_str();
  check->add_flag("--replay", replay, "Also re-run each document's command and compare");
  check->callback([&] { check_job = [&] { return run_check(check_path, replay, partitions, in, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (check_job) return check_job();
    const Emission emission = job();
    if (metadata) {
      out << Json{{"metadata", Json{{"tool", "fsq"}, {"version", FSQ_VERSION}, {"generated_at", utc_timestamp()}}}}
                 .dump()
          << "\n";
    }
    out << emission.document.dump() << "\n";
    return emission.exit_code;
  } catch (const UsageError& e) {
    err << "fsq: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "fsq: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fsq: internal error: " << e.what() << "\n";
    return kExitNegative;
  }
}

}  // namespace fsq::cli
