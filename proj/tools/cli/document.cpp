#include "cli/document.hpp"

#include <sstream>

namespace k3cliff::cli {

namespace {

std::array<std::int64_t, 2> to_pair(const DivisorClass& d) {
  return {to_int64(d.x), to_int64(d.y)};
}

std::vector<std::array<std::int64_t, 2>> to_pairs(const std::vector<DivisorClass>& v) {
  std::vector<std::array<std::int64_t, 2>> out;
  out.reserve(v.size());
  for (const auto& d : v) out.push_back(to_pair(d));
  return out;
}

Json census_json(const BruteForceCensus& c) {
  Json j;
  j["examined"] = c.examined;
  j["nef_rejected"] = c.nef_rejected;
  j["excluded"] = c.excluded;
  j["survivors"] = c.survivors;
  j["certified"] = c.certified;
  j["indeterminate"] = c.indeterminate;
  return j;
}

BruteForceCensus census_from_json(const Json& j) {
  BruteForceCensus c;
  c.examined = j.at("examined").get<std::uint64_t>();
  c.nef_rejected = j.at("nef_rejected").get<std::uint64_t>();
  c.excluded = j.at("excluded").get<std::uint64_t>();
  c.survivors = j.at("survivors").get<std::uint64_t>();
  c.certified = j.at("certified").get<std::uint64_t>();
  c.indeterminate = j.at("indeterminate").get<std::uint64_t>();
  return c;
}

const char* bool_word(bool b) { return b ? "yes" : "no"; }

std::string row_kind(QueryKind kind) {
  return kind == QueryKind::CliffordRealization ? "clifford" : "gonality";
}

}  // namespace

CertificateDocument make_document(const RealizationCertificate& cert) {
  CertificateDocument doc;
  doc.query_kind = to_string(cert.query.kind);
  doc.genus = to_int64(cert.query.genus);
  doc.target = to_int64(cert.query.target);

  doc.d = to_int64(cert.surface.degree());
  const auto gram = cert.surface.gram();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) doc.gram[i][j] = to_int64(gram[i][j]);

  doc.min_cliff = to_int64(cert.clifford.min_cliff);
  doc.gonality = to_int64(cert.clifford.gonality);
  doc.witnesses = to_pairs(cert.clifford.witnesses);
  doc.candidate_set = to_pairs(cert.clifford.candidate_set);
  const BrillNoetherBounds bounds = brill_noether_bounds(cert.query.genus);
  doc.max_cliff = to_int64(bounds.max_cliff);
  doc.max_gonality = to_int64(bounds.max_gonality);

  doc.nef = cert.nef.holds();
  doc.bpf = cert.bpf.holds;
  doc.oracle_agrees = cert.clifford.oracle_agrees;
  doc.census = cert.clifford.oracle.census;
  doc.check_log = cert.clifford.checks;

  doc.assumptions = cert.clifford.assumption_log;
  doc.convention_branch = cert.clifford.convention_branch;
  return doc;
}

Json to_json(const CertificateDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["query"] = Json{{"kind", doc.query_kind}, {"genus", doc.genus}, {"target", doc.target}};
  j["surface"] = Json{{"genus", doc.genus}, {"d", doc.d}, {"gram", doc.gram}};
  j["results"] = Json{{"min_cliff", doc.min_cliff},
                      {"gonality", doc.gonality},
                      {"witnesses", doc.witnesses},
                      {"candidate_set", doc.candidate_set},
                      {"bounds", Json{{"max_cliff", doc.max_cliff},
                                      {"max_gonality", doc.max_gonality}}}};
  j["checks"] = Json{{"nef", doc.nef},
                     {"bpf", doc.bpf},
                     {"oracle_agrees", doc.oracle_agrees},
                     {"census", census_json(doc.census)},
                     {"log", doc.check_log}};
  j["assumptions"] = doc.assumptions;
  if (doc.convention_branch) j["convention_branch"] = *doc.convention_branch;
  return j;
}

CertificateDocument document_from_json(const Json& j) {
  CertificateDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  const Json& q = j.at("query");
  doc.query_kind = q.at("kind").get<std::string>();
  doc.genus = q.at("genus").get<std::int64_t>();
  doc.target = q.at("target").get<std::int64_t>();
  const Json& s = j.at("surface");
  doc.d = s.at("d").get<std::int64_t>();
  doc.gram = s.at("gram").get<std::array<std::array<std::int64_t, 2>, 2>>();
  const Json& r = j.at("results");
  doc.min_cliff = r.at("min_cliff").get<std::int64_t>();
  doc.gonality = r.at("gonality").get<std::int64_t>();
  doc.witnesses = r.at("witnesses").get<std::vector<std::array<std::int64_t, 2>>>();
  doc.candidate_set = r.at("candidate_set").get<std::vector<std::array<std::int64_t, 2>>>();
  doc.max_cliff = r.at("bounds").at("max_cliff").get<std::int64_t>();
  doc.max_gonality = r.at("bounds").at("max_gonality").get<std::int64_t>();
  const Json& c = j.at("checks");
  doc.nef = c.at("nef").get<bool>();
  doc.bpf = c.at("bpf").get<bool>();
  doc.oracle_agrees = c.at("oracle_agrees").get<bool>();
  doc.census = census_from_json(c.at("census"));
  doc.check_log = c.at("log").get<std::vector<std::string>>();
  doc.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  if (j.contains("convention_branch"))
    doc.convention_branch = j.at("convention_branch").get<std::string>();
  return doc;
}

std::string render_json(const CertificateDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

std::string render_text(const CertificateDocument& doc) {
  std::ostringstream os;
  os << "query: " << doc.query_kind << " genus " << doc.genus << " target "
     << doc.target << "\n";
  os << "surface: genus " << doc.genus << ", d " << doc.d << ", gram [["
     << doc.gram[0][0] << ", " << doc.gram[0][1] << "], [" << doc.gram[1][0] << ", "
     << doc.gram[1][1] << "]]\n";
  os << "min_cliff: " << doc.min_cliff << "\n";
  os << "gonality: " << doc.gonality << "\n";
  os << "witnesses:";
  for (const auto& w : doc.witnesses) os << " (" << w[0] << ", " << w[1] << ")";
  os << "\n";
  os << "bounds: max_cliff " << doc.max_cliff << ", max_gonality " << doc.max_gonality
     << "\n";
  os << "checks: nef " << bool_word(doc.nef) << ", bpf " << bool_word(doc.bpf)
     << ", oracle_agrees " << bool_word(doc.oracle_agrees) << "\n";
  os << "census: examined " << doc.census.examined << ", nef_rejected "
     << doc.census.nef_rejected << ", excluded " << doc.census.excluded
     << ", survivors " << doc.census.survivors << ", certified "
     << doc.census.certified << ", indeterminate " << doc.census.indeterminate << "\n";
  if (doc.convention_branch) os << "convention: " << *doc.convention_branch << "\n";
  for (const auto& line : doc.check_log) os << "check: " << line << "\n";
  for (const auto& line : doc.assumptions) os << "assumption: " << line << "\n";
  return os.str();
}

std::string render_table(const RealizationTable& table, TableFormat format) {
  if (format == TableFormat::Json) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["genus_min"] = to_int64(table.genus_min);
    j["genus_max"] = to_int64(table.genus_max);
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json r;
      r["genus"] = to_int64(row.genus);
      r["kind"] = row_kind(row.kind);
      r["target"] = to_int64(row.target);
      r["d"] = to_int64(row.d);
      r["min_cliff"] = to_int64(row.min_cliff);
      r["gonality"] = to_int64(row.gonality);
      r["oracle_agrees"] = row.oracle_agrees;
      r["bpf"] = row.bpf_holds;
      r["nef"] = row.nef_holds;
      if (row.convention_branch) r["convention_branch"] = *row.convention_branch;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == TableFormat::Tsv) {
    os << "genus\tkind\ttarget\td\tmin_cliff\tgonality\toracle_agrees\tbpf\tnef\tconvention\n";
    for (const auto& row : table.rows) {
      os << row.genus << "\t" << row_kind(row.kind) << "\t" << row.target << "\t"
         << row.d << "\t" << row.min_cliff << "\t" << row.gonality << "\t"
         << (row.oracle_agrees ? "true" : "false") << "\t"
         << (row.bpf_holds ? "true" : "false") << "\t"
         << (row.nef_holds ? "true" : "false") << "\t"
         << (row.convention_branch ? *row.convention_branch : "") << "\n";
    }
    return os.str();
  }

  os << "| genus | kind | target | d | min_cliff | gonality | oracle | bpf | nef | convention |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& row : table.rows) {
    os << "| " << row.genus << " | " << row_kind(row.kind) << " | " << row.target
       << " | " << row.d << " | " << row.min_cliff << " | " << row.gonality << " | "
       << bool_word(row.oracle_agrees) << " | " << bool_word(row.bpf_holds) << " | "
       << bool_word(row.nef_holds) << " | "
       << (row.convention_branch ? *row.convention_branch : "-") << " |\n";
  }
  return os.str();
}

}  // namespace k3cliff::cli
