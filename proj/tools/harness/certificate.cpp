#include "certificate.hpp"

#include "burning/engine.hpp"

namespace burning::harness {

const char* const kToolVersion = "burning 0.1.0";

namespace {

const char* kind_name(BoundCertificate::Kind kind) {
  return kind == BoundCertificate::Kind::General ? "general" : "no-degree-2";
}

template <typename T>
T field(const nlohmann::ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw CertificateFormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw CertificateFormatError(std::string("field '") + key + "': " + e.what());
  }
}

VerifyReport failure(std::string reason, std::string detail) {
  return {false, std::move(reason), std::move(detail)};
}

}  // namespace

CertificateDocument make_document(const Tree& t, const BoundCertificate& cert,
                                  std::optional<std::uint64_t> seed) {
  CertificateDocument doc;
  doc.kind = kind_name(cert.kind);
  doc.order = t.order();
  doc.edges = t.edges();
  doc.n = cert.n;
  doc.n2 = cert.n2;
  doc.m = cert.m;
  doc.target = cert.target;
  doc.sequence.assign(cert.sequence.begin(), cert.sequence.end());
  doc.labels = cert.labeling.label;
  doc.bound_table = prior_bounds(cert.n, cert.n2);
  doc.trace = to_json(cert.trace);
  doc.tool_version = kToolVersion;
  doc.seed = seed;
  return doc;
}

nlohmann::ordered_json to_json(const BoundTable& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["n2"] = t.n2;
  j["m"] = t.m;
  j["conjecture"] = t.conjecture;
  j["main1"] = t.main1;
  j["murakami"] = t.murakami;
  j["bessy"] = t.bessy;
  j["land_lu"] = t.land_lu;
  j["bastide_floor"] = t.bastide_floor;
  j["bastide_approx"] = t.bastide_approx;
  j["bonato_2016"] = t.bonato_2016;
  j["corollary_main_applies"] = t.corollary_main_applies;
  return j;
}

BoundTable bound_table_from_json(const nlohmann::ordered_json& j) {
  BoundTable t;
  t.n = field<std::uint64_t>(j, "n");
  t.n2 = field<std::uint64_t>(j, "n2");
  t.m = field<std::uint64_t>(j, "m");
  t.conjecture = field<std::uint64_t>(j, "conjecture");
  t.main1 = field<std::uint64_t>(j, "main1");
  t.murakami = field<std::uint64_t>(j, "murakami");
  t.bessy = field<std::uint64_t>(j, "bessy");
  t.land_lu = field<std::uint64_t>(j, "land_lu");
  t.bastide_floor = field<std::uint64_t>(j, "bastide_floor");
  t.bastide_approx = field<std::string>(j, "bastide_approx");
  t.bonato_2016 = field<std::uint64_t>(j, "bonato_2016");
  t.corollary_main_applies = field<bool>(j, "corollary_main_applies");
  return t;
}

nlohmann::ordered_json to_json(const std::vector<TraceEvent>& trace) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : trace) {
    nlohmann::ordered_json j;
    j["event"] = to_string(e.kind);
    j["depth"] = e.depth;
    j["order"] = e.order;
    j["m"] = e.m;
    j["target"] = e.target;
    for (const auto& [key, value] : e.values) j[key] = value;
    if (!e.origin.empty()) j["origin"] = e.origin;
    if (!e.sequence.empty()) j["sequence"] = e.sequence;
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::ordered_json to_json(const CertificateDocument& doc) {
  nlohmann::ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind;
  nlohmann::ordered_json tree;
  tree["n"] = doc.order;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : doc.edges) edges.push_back({u, v});
  tree["edges"] = std::move(edges);
  j["tree"] = std::move(tree);
  j["n"] = doc.n;
  j["n2"] = doc.n2;
  j["m"] = doc.m;
  j["target"] = doc.target;
  j["sequence"] = doc.sequence;
  j["labels"] = doc.labels;
  j["bound_table"] = to_json(doc.bound_table);
  j["trace"] = doc.trace;
  j["tool_version"] = doc.tool_version;
  if (doc.seed) j["seed"] = *doc.seed;
  return j;
}

CertificateDocument document_from_json(const nlohmann::ordered_json& j) {
  CertificateDocument doc;
  doc.schema_version = field<int>(j, "schema_version");
  if (doc.schema_version != kCertificateSchemaVersion) {
    throw CertificateFormatError("unsupported schema_version " +
                                 std::to_string(doc.schema_version));
  }
  doc.kind = field<std::string>(j, "kind");
  const auto& tree = j.at("tree");
  doc.order = field<std::size_t>(tree, "n");
  for (const auto& e : field<std::vector<std::vector<Vertex>>>(tree, "edges")) {
    if (e.size() != 2) throw CertificateFormatError("edge must have two endpoints");
    doc.edges.emplace_back(e[0], e[1]);
  }
  doc.n = field<std::uint64_t>(j, "n");
  doc.n2 = field<std::uint64_t>(j, "n2");
  doc.m = field<std::uint64_t>(j, "m");
  doc.target = field<std::uint64_t>(j, "target");
  doc.sequence = field<std::vector<Vertex>>(j, "sequence");
  doc.labels = field<std::vector<int>>(j, "labels");
  doc.bound_table = bound_table_from_json(j.at("bound_table"));
  if (j.contains("trace")) doc.trace = j.at("trace");
  doc.tool_version = field<std::string>(j, "tool_version");
  if (j.contains("seed")) doc.seed = field<std::uint64_t>(j, "seed");
  return doc;
}

VerifyReport verify_document(const CertificateDocument& doc) {
  std::optional<Tree> tree;
  try {
    tree = as_tree(build_graph(doc.order, doc.edges));
  } catch (const GraphError& e) {
    return failure("invalid tree", e.what());
  }

  RoundLabeling labeling;
  try {
    std::vector<Schedule::Entry> rounds(doc.sequence.begin(), doc.sequence.end());
    labeling = simulate(*tree, Schedule(std::move(rounds)));
  } catch (const std::exception& e) {
    return failure("labels mismatch", std::string("sequence does not simulate: ") + e.what());
  }
  if (labeling.label != doc.labels) {
    return failure("labels mismatch", "re-simulated labels differ from the stored labels");
  }
  if (static_cast<std::size_t>(labeling.total_rounds) != doc.sequence.size()) {
    return failure("length mismatch", "process terminates in " +
                                          std::to_string(labeling.total_rounds) +
                                          " rounds, sequence has length " +
                                          std::to_string(doc.sequence.size()));
  }

  const std::uint64_t n = tree->order();
  const std::uint64_t n2 = degree2_census(*tree).count;
  if (doc.n != n || doc.n2 != n2) {
    return failure("header mismatch", "stored n/n2 do not match the embedded tree");
  }
  if (doc.kind == "general") {
    if (doc.m != m_of(n + n2) || doc.target != bound_main1(n, n2)) {
      return failure("target mismatch", "m or target differ from m_of / bound_main1");
    }
  } else if (doc.kind == "no-degree-2") {
    if (n2 != 0 || doc.m >= n || n < doc.m * (doc.m + 1) + 1 ||
        doc.target != ceil_sqrt(n - doc.m)) {
      return failure("target mismatch", "no-degree-2 preconditions or target do not hold");
    }
  } else {
    return failure("unknown kind", "kind must be 'general' or 'no-degree-2'");
  }
  if (doc.sequence.size() > doc.target) {
    return failure("bound exceeded", "sequence length " + std::to_string(doc.sequence.size()) +
                                         " exceeds target " + std::to_string(doc.target));
  }
  if (!(doc.bound_table == prior_bounds(n, n2))) {
    return failure("bound table mismatch", "stored bound table differs from recomputation");
  }
  return {true, "", ""};
}

VerifyReport verify_json(const nlohmann::ordered_json& j) {
  try {
    return verify_document(document_from_json(j));
  } catch (const CertificateFormatError& e) {
    return failure("malformed certificate", e.what());
  } catch (const nlohmann::json::exception& e) {
    return failure("malformed certificate", e.what());
  }
}

}  // namespace burning::harness
