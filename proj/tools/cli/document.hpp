#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3cliff/theorem.hpp"

namespace k3cliff::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// Flattened, serialization-ready rendering of a realization certificate.
// Field order here is the order of the emitted JSON document; serialization
// round-trips losslessly and is byte-stable for identical inputs.
struct CertificateDocument {
  std::string schema_version = kSchemaVersion;

  std::string query_kind;
  std::int64_t genus = 0;
  std::int64_t target = 0;

  std::int64_t d = 0;
  std::array<std::array<std::int64_t, 2>, 2> gram{};

  std::int64_t min_cliff = 0;
  std::int64_t gonality = 0;
  std::vector<std::array<std::int64_t, 2>> witnesses;
  std::vector<std::array<std::int64_t, 2>> candidate_set;
  std::int64_t max_cliff = 0;
  std::int64_t max_gonality = 0;

  bool nef = false;
  bool bpf = false;
  bool oracle_agrees = false;
  BruteForceCensus census;
  std::vector<std::string> check_log;

  std::vector<std::string> assumptions;
  std::optional<std::string> convention_branch;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

CertificateDocument make_document(const RealizationCertificate& cert);

Json to_json(const CertificateDocument& doc);
CertificateDocument document_from_json(const Json& j);

std::string render_json(const CertificateDocument& doc);
std::string render_text(const CertificateDocument& doc);

enum class TableFormat { Json, Tsv, Markdown };

std::string render_table(const RealizationTable& table, TableFormat format);

}  // namespace k3cliff::cli
