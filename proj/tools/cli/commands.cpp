#include "cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/document.hpp"
#include "k3cliff/theorem.hpp"

namespace k3cliff::cli {

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// "X,Y" with optional signs; anything else is a usage error.
DivisorClass parse_class(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == text.size())
    throw RangeError("malformed class '" + text + "', expected X,Y");
  try {
    std::size_t used = 0;
    const long long x = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const long long y = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {Int(x), Int(y)};
  } catch (const std::logic_error&) {
    throw RangeError("malformed class '" + text + "', expected X,Y");
  }
}

int cmd_verify(long long genus, const std::optional<long long>& cliff,
               const std::optional<long long>& gonality_target, bool as_json) {
  if (cliff.has_value() == gonality_target.has_value())
    throw RangeError("verify needs exactly one of --cliff and --gonality");
  const RealizationCertificate cert =
      cliff ? realize_clifford(genus, *cliff) : realize_gonality(genus, *gonality_target);
  const CertificateDocument doc = make_document(cert);
  std::cout << (as_json ? render_json(doc) : render_text(doc));
  if (!doc.nef || !doc.bpf || !doc.oracle_agrees) {
    std::cerr << "verification failure: a certificate check did not hold\n";
    return kExitVerificationFailure;
  }
  return kExitVerified;
}

int cmd_table(long long genus_min, long long genus_max, const std::string& format) {
  const TableFormat fmt = format == "json"  ? TableFormat::Json
                          : format == "md" ? TableFormat::Markdown
                                           : TableFormat::Tsv;
  const RealizationTable table = sweep(genus_min, genus_max);
  std::cout << render_table(table, fmt);
  for (const auto& row : table.rows) {
    if (!(row.oracle_agrees && row.bpf_holds && row.nef_holds)) {
      std::cerr << "verification failure at genus " << row.genus << ", d " << row.d
                << "\n";
      return kExitVerificationFailure;
    }
  }
  return kExitVerified;
}

int cmd_inspect(long long genus, long long degree, const std::string& class_text) {
  const DivisorClass d = parse_class(class_text);
  const SurfaceModel s = make_surface(genus, degree);
  const DivisorClass L = DivisorClass::polarization();
  const DivisorClass E = DivisorClass::elliptic();

  std::cout << "class: " << d << "\n";
  std::cout << "D^2 = " << self_intersection(s, d) << "\n";
  std::cout << "D.L = " << pairing(s, d, L) << "\n";
  std::cout << "D.E = " << pairing(s, d, E) << "\n";
  std::cout << "chi = " << euler_char(s, d) << "\n";
  std::cout << "cliff = " << clifford_value(s, d) << "\n";

  const auto roots = root_classes(s);
  const bool is_root =
      std::find(roots.begin(), roots.end(), d) != roots.end();
  std::cout << "root class: " << (is_root ? "yes" : "no") << "\n";

  const CohomologyProfile p = cohomology_profile(s, d);
  std::cout << "profile: h0 " << p.h0 << ", h1 " << p.h1 << ", h2 " << p.h2
            << " (rule " << p.rule << ")\n";
  const RestrictionProfile r = restriction_to_curve(s, d);
  std::cout << "restriction: h0 " << r.h0_on_curve << ", h1 " << r.h1_on_curve
            << ", degree " << r.degree_on_curve << " (rule " << r.rule << ")\n";
  return kExitVerified;
}

int cmd_bruteforce(long long genus, long long degree,
                   const std::optional<long long>& bound) {
  const SurfaceModel s = make_surface(genus, degree);
  const Int xb = bound ? Int(*bound) : safe_x_radius();
  const Int yb = bound ? Int(*bound) : safe_y_radius(s);
  const BruteForceResult r = brute_force_clifford(s, xb, yb);

  std::cout << "minimum: " << (r.minimum ? r.minimum->str() : "none") << "\n";
  std::cout << "survivors:";
  for (const auto& d : r.survivors) std::cout << " " << d;
  std::cout << "\n";
  std::cout << "census: examined " << r.census.examined << ", nef_rejected "
            << r.census.nef_rejected << ", excluded " << r.census.excluded
            << ", survivors " << r.census.survivors << ", certified "
            << r.census.certified << ", indeterminate " << r.census.indeterminate
            << "\n";

  const CliffordCertificate cert = minimum_clifford(s);
  const bool agrees = r.minimum && *r.minimum == cert.min_cliff;
  std::cout << "certificate minimum: " << cert.min_cliff << " ("
            << (agrees ? "agrees" : "DISAGREES") << ")\n";
  if (!agrees) {
    std::cerr << "verification failure: enumeration disagrees with the certificate\n";
    return kExitVerificationFailure;
  }
  return kExitVerified;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact certificates for the Clifford index and gonality of curves "
               "on K3 surfaces with a rank-2 Picard lattice"};
  app.require_subcommand(1);

  long long genus = 0;
  std::optional<long long> cliff;
  std::optional<long long> gonality_target;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "verify one (genus, cliff|gonality) realization");
  verify->add_option("--genus", genus, "curve genus")->required();
  verify->add_option("--cliff", cliff, "requested clifford index");
  verify->add_option("--gonality", gonality_target, "requested gonality");
  verify->add_flag("--json", as_json, "emit the JSON certificate document");

  long long genus_min = 0;
  long long genus_max = 0;
  std::string format = "tsv";
  auto* table = app.add_subcommand("table", "sweep a genus range and print the table");
  table->add_option("--genus-min", genus_min, "first genus")->required();
  table->add_option("--genus-max", genus_max, "last genus")->required();
  table->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "md"}));

  long long i_genus = 0;
  long long i_degree = 0;
  std::string class_text;
  auto* inspect = app.add_subcommand("inspect", "report lattice data of one class");
  inspect->add_option("--genus", i_genus, "curve genus")->required();
  inspect->add_option("--degree", i_degree, "degree d = E.L")->required();
  inspect->add_option("--class", class_text, "class coordinates X,Y")->required();

  long long b_genus = 0;
  long long b_degree = 0;
  std::optional<long long> bound;
  auto* bruteforce = app.add_subcommand("bruteforce", "run the enumeration oracle");
  bruteforce->add_option("--genus", b_genus, "curve genus")->required();
  bruteforce->add_option("--degree", b_degree, "degree d = E.L")->required();
  bruteforce->add_option("--bound", bound, "box radius (defaults to the safe radius)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(verify))
      return cmd_verify(genus, cliff, gonality_target, as_json);
    if (app.got_subcommand(table)) return cmd_table(genus_min, genus_max, format);
    if (app.got_subcommand(inspect)) return cmd_inspect(i_genus, i_degree, class_text);
    return cmd_bruteforce(b_genus, b_degree, bound);
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

}  // namespace k3cliff::cli
