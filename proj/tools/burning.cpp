// burning: command-line front end for the graph burning library.
// Exit codes: 0 success, 1 contract violation, 2 usage or parse error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burning/bounds.hpp"
#include "burning/construct.hpp"
#include "burning/edge_list.hpp"
#include "burning/engine.hpp"
#include "burning/generators.hpp"
#include "burning/solver.hpp"
#include "harness/bench.hpp"
#include "harness/certificate.hpp"

namespace {

using namespace burning;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Raised for anything that should exit with kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for contract violations; reason is the stable machine-readable part.
struct Violation : std::runtime_error {
  Violation(std::string reason, const std::string& detail)
      : std::runtime_error(detail), reason(std::move(reason)) {}
  std::string reason;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
  if (!out) throw UsageError("write failed for " + out_path);
}

Graph load_graph(const std::string& path) {
  try {
    return read_edge_list_file(path);
  } catch (const EdgeListError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

Tree load_tree(const std::string& path) {
  try {
    return as_tree(load_graph(path));
  } catch (const GraphError& e) {
    throw UsageError(path + ": not a tree (" + e.what() + ")");
  }
}

std::string labels_text(const RoundLabeling& lab) {
  std::vector<std::pair<int, Vertex>> order;
  for (std::size_t v = 0; v < lab.label.size(); ++v) order.emplace_back(lab.label[v], static_cast<Vertex>(v));
  std::sort(order.begin(), order.end());
  std::string s = "{";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(order[i].second) + ":" + std::to_string(order[i].first);
  }
  return s + "}";
}

std::string sequence_text(std::span<const Vertex> seq) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? " " : "") + std::to_string(seq[i]);
  return s;
}

// ---- gen

struct GenArgs {
  std::string kind;
  std::vector<std::size_t> params;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  auto need = [&](std::size_t count) {
    if (a.params.size() != count) {
      throw UsageError("gen " + a.kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  Graph g;
  try {
    if (a.kind == "path") {
      need(1);
      g = gen_path(a.params[0]).graph();
    } else if (a.kind == "cycle") {
      need(1);
      g = gen_cycle(a.params[0]);
    } else if (a.kind == "full-binary") {
      need(1);
      g = gen_full_binary(a.params[0]).graph();
    } else if (a.kind == "double-star") {
      need(2);
      g = gen_double_star(a.params[0], a.params[1]).graph();
    } else if (a.kind == "random-tree") {
      need(1);
      g = gen_random_tree(a.params[0], a.seed).graph();
    } else if (a.kind == "random-no-deg2") {
      need(1);
      g = gen_random_no_deg2(a.params[0], a.seed).graph();
    } else {
      throw UsageError("unknown generator kind '" + a.kind + "'");
    }
  } catch (const GraphError& e) {
    throw UsageError(std::string("invalid parameters: ") + e.what());
  }
  emit(a.out, format_edge_list(g));
  return kOk;
}

// ---- simulate

struct SimulateArgs {
  std::string path;
  std::vector<std::string> sources;
  std::string format = "text";
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  const Graph g = load_graph(a.path);
  std::vector<Schedule::Entry> rounds;
  for (const auto& s : a.sources) {
    if (s == "_") {
      rounds.emplace_back(std::nullopt);
      continue;
    }
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !g.has_vertex(v)) {
      throw UsageError("bad source '" + s + "'");
    }
    rounds.emplace_back(v);
  }
  RoundLabeling lab;
  try {
    lab = simulate(g, Schedule(std::move(rounds)));
  } catch (const BurnError& e) {
    throw Violation(to_string(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.format == "json") {
    ordered_json j;
    j["total_rounds"] = lab.total_rounds;
    j["labels"] = lab.label;
    emit(a.out, j.dump(2) + "\n");
  } else {
    emit(a.out, "total_rounds " + std::to_string(lab.total_rounds) + "\nlabels " + labels_text(lab) + "\n");
  }
  return kOk;
}

// ---- exact

struct ExactArgs {
  std::string path;
  std::size_t cap = 30;
  std::string format = "text";
  std::string out;
};

int run_exact(const ExactArgs& a) {
  const Graph g = load_graph(a.path);
  if (g.vertex_count() > a.cap) {
    throw UsageError("order " + std::to_string(g.vertex_count()) + " exceeds --cap " +
                     std::to_string(a.cap));
  }
  std::optional<ExactResult> result;
  try {
    result = burning_number(g);
  } catch (const SolverError& e) {
    throw UsageError(e.what());
  }
  const ExactResult& r = *result;
  if (a.format == "json") {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["burning_number"] = r.burning_number;
    j["witness"] = std::vector<Vertex>(r.witness.begin(), r.witness.end());
    j["nodes_explored"] = r.nodes_explored;
    emit(a.out, j.dump(2) + "\n");
  } else {
    emit(a.out, "burning_number " + std::to_string(r.burning_number) + "\nwitness " +
                    sequence_text(r.witness.sources()) + "\nnodes_explored " +
                    std::to_string(r.nodes_explored) + "\n");
  }
  return kOk;
}

// ---- construct

struct ConstructArgs {
  std::string path;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  const Tree t = load_tree(a.path);
  std::optional<BoundCertificate> cert;
  try {
    cert = a.m ? construct_no_deg2(t, *a.m) : construct_general(t);
  } catch (const ConstructError& e) {
    throw Violation(to_string(e.code()), e.what());
  }
  const auto doc = harness::make_document(t, *cert, a.seed);
  const std::string json = harness::to_json(doc).dump(2) + "\n";
  if (!a.out.empty()) {
    emit(a.out, json);
    std::ostringstream summary;
    summary << "n " << doc.n << "\nn2 " << doc.n2 << "\nm " << doc.m << "\ntarget " << doc.target
            << "\nlength " << doc.sequence.size() << "\nsequence " << sequence_text(doc.sequence)
            << "\n";
    if (a.format == "json") {
      ordered_json j;
      j["n"] = doc.n;
      j["target"] = doc.target;
      j["length"] = doc.sequence.size();
      j["certificate"] = a.out;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << summary.str();
    }
  } else {
    std::cout << json;
  }
  return kOk;
}

// ---- bounds

struct BoundsArgs {
  std::uint64_t n = 0;
  std::uint64_t n2 = 0;
  std::string format = "text";
  std::string out;
};

int run_bounds(const BoundsArgs& a) {
  if (a.n < 1 || a.n2 > a.n) throw UsageError("bounds needs n >= 1 and 0 <= n2 <= n");
  const BoundTable t = prior_bounds(a.n, a.n2);
  if (a.format == "json") {
    emit(a.out, harness::to_json(t).dump(2) + "\n");
  } else if (a.format == "csv") {
    emit(a.out, harness::bound_table_csv_header() + "\n" + harness::bound_table_csv_row(t) + "\n");
  } else {
    std::string text;
    const auto j = harness::to_json(t);
    for (const auto& [key, value] : j.items()) {
      text += key + " " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    emit(a.out, text);
  }
  return kOk;
}

// ---- verify

struct VerifyArgs {
  std::string path;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
  std::ifstream in(a.path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + a.path);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(a.path + ": " + e.what());
  }
  const auto report = harness::verify_json(j);
  if (a.format == "json") {
    ordered_json out;
    out["ok"] = report.ok;
    if (!report.ok) {
      out["reason"] = report.reason;
      out["detail"] = report.detail;
    }
    std::cout << out.dump(2) << "\n";
  } else if (report.ok) {
    std::cout << "PASS\n";
  } else {
    std::cout << "FAIL " << report.reason << "\n" << report.detail << "\n";
  }
  return report.ok ? kOk : kViolation;
}

// ---- bench

struct BenchArgs {
  std::string spec;
  std::uint64_t seed = 0;
  std::size_t cap = 30;
  unsigned jobs = 1;
  bool no_timing = false;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  std::vector<harness::CorpusEntry> entries;
  try {
    entries = harness::parse_corpus_spec(a.spec);
  } catch (const harness::CorpusSpecError& e) {
    throw UsageError(e.what());
  }
  const auto corpus = harness::make_corpus(entries, a.seed);
  const auto rows = harness::run_bench(corpus, {a.seed, a.cap, a.jobs});
  emit(a.out, harness::bench_csv(rows, !a.no_timing));
  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (!r.ok()) {
      ++failed;
      std::cerr << "instance " << r.instance << ": " << r.status << "\n";
    }
  }
  std::cerr << rows.size() << " instances, " << failed << " contract violation(s)\n";
  return failed ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph burning toolkit: simulation, exact solving, bound certificates"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("kind", gen.kind,
                      "path | cycle | full-binary | double-star | random-tree | random-no-deg2")
      ->required();
  gen_cmd->add_option("params", gen.params, "size parameters")->required();
  gen_cmd->add_option("--seed", gen.seed, "seed for the random kinds");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a burning schedule; '_' is an empty round");
  sim_cmd->add_option("graph", sim.path)->required();
  sim_cmd->add_option("sources", sim.sources)->required();
  sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"text", "json"}));
  sim_cmd->add_option("--out", sim.out);

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Compute the burning number exactly");
  exact_cmd->add_option("graph", exact.path)->required();
  exact_cmd->add_option("--cap", exact.cap, "largest order attempted")->capture_default_str();
  exact_cmd->add_option("--format", exact.format)->check(CLI::IsMember({"text", "json"}));
  exact_cmd->add_option("--out", exact.out);

  ConstructArgs cons;
  auto* cons_cmd = app.add_subcommand("construct", "Build a bound certificate for a tree");
  cons_cmd->add_option("tree", cons.path)->required();
  cons_cmd->add_option("--m", cons.m, "run the degree-2-free construction with this m");
  cons_cmd->add_option("--seed", cons.seed, "seed to record in the certificate");
  cons_cmd->add_option("--format", cons.format)->check(CLI::IsMember({"text", "json"}));
  cons_cmd->add_option("--out", cons.out, "certificate file (default: certificate on stdout)");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate burning-number bounds for a tree order");
  bounds_cmd->add_option("n", bounds.n)->required();
  bounds_cmd->add_option("n2", bounds.n2, "number of degree-2 vertices")->required();
  bounds_cmd->add_option("--format", bounds.format)->check(CLI::IsMember(formats));
  bounds_cmd->add_option("--out", bounds.out);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a certificate from its tree and sequence");
  verify_cmd->add_option("certificate", verify.path)->required();
  verify_cmd->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a seeded corpus and write CSV rows");
  bench_cmd->add_option("corpus", bench.spec, "kind:count:lo-hi[,...]")->required();
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--cap", bench.cap, "exact solver runs only when n <= cap")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  bench_cmd->add_flag("--no-timing", bench.no_timing, "omit the timing columns");
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");
  std::string bench_format = "csv";
  bench_cmd->add_option("--format", bench_format, "csv only")->check(CLI::IsMember({"csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*sim_cmd) return run_simulate(sim);
    if (*exact_cmd) return run_exact(exact);
    if (*cons_cmd) return run_construct(cons);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Violation& e) {
    std::cout << "FAIL " << e.reason << "\n";
    std::cerr << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
