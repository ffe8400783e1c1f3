#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "burning/bounds.hpp"
#include "burning/construct.hpp"
#include "burning/graph.hpp"

namespace burning::harness {

inline constexpr int kCertificateSchemaVersion = 1;
extern const char* const kToolVersion;

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-contained certificate: everything needed to re-check the claim from
// the embedded tree and sequence alone. labels[v] is the round vertex v burns.
struct CertificateDocument {
  int schema_version = kCertificateSchemaVersion;
  std::string kind;  // "general" or "no-degree-2"
  std::size_t order = 0;
  std::vector<Edge> edges;
  std::uint64_t n = 0;
  std::uint64_t n2 = 0;
  std::uint64_t m = 0;
  std::uint64_t target = 0;
  std::vector<Vertex> sequence;
  std::vector<int> labels;
  BoundTable bound_table;
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  std::string tool_version;
  std::optional<std::uint64_t> seed;
};

CertificateDocument make_document(const Tree& t, const BoundCertificate& cert,
                                  std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::ordered_json to_json(const CertificateDocument& doc);
nlohmann::ordered_json to_json(const BoundTable& table);
nlohmann::ordered_json to_json(const std::vector<TraceEvent>& trace);

// Throws CertificateFormatError on missing or mistyped fields.
CertificateDocument document_from_json(const nlohmann::ordered_json& j);
BoundTable bound_table_from_json(const nlohmann::ordered_json& j);

struct VerifyReport {
  bool ok = false;
  std::string reason;  // stable machine-readable reason, empty when ok
  std::string detail;
};

// Recomputes every claim from the embedded tree and sequence; stored labels,
// bounds and header fields are only compared, never trusted.
VerifyReport verify_document(const CertificateDocument& doc);
VerifyReport verify_json(const nlohmann::ordered_json& j);

}  // namespace burning::harness
