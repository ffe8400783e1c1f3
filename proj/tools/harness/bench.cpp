#include "bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <thread>

#include "burning/construct.hpp"
#include "burning/engine.hpp"
#include "burning/generators.hpp"
#include "burning/solver.hpp"

namespace burning::harness {

namespace {

std::size_t parse_size(std::string_view text, std::string_view entry) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw CorpusSpecError("bad number '" + std::string(text) + "' in corpus entry '" +
                          std::string(entry) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

Tree make_instance(const CorpusEntry& e, SplitMix64& rng) {
  const std::size_t size = static_cast<std::size_t>(rng.between(e.lo, e.hi));
  const std::uint64_t shape_seed = rng.next();
  if (e.kind == "path") return gen_path(size);
  if (e.kind == "full-binary") return gen_full_binary(size);
  if (e.kind == "random-tree") return gen_random_tree(size, shape_seed);
  return gen_random_no_deg2(size, shape_seed);
}

template <typename F>
std::int64_t timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

BenchRow bench_one(const BenchInstance& inst, const BenchOptions& options) {
  BenchRow row;
  row.instance = inst.id;
  row.kind = inst.kind;
  row.seed = inst.seed;
  row.n = inst.tree.order();
  row.n2 = degree2_census(inst.tree).count;
  row.bounds = prior_bounds(row.n, row.n2);
  row.status = "ok";

  std::optional<BoundCertificate> cert;
  try {
    row.construct_us = timed([&] { cert = construct_general(inst.tree); });
    row.constructed = cert->sequence.length();
  } catch (const std::exception&) {
    row.status = "construct-error";
    return row;
  }
  try {
    row.verify_us = timed([&] { validate_sequence(inst.tree, cert->sequence); });
  } catch (const BurnError&) {
    row.status = "invalid-sequence";
    return row;
  }
  if (row.n <= options.cap) {
    row.exact_us = timed([&] { row.exact = burning_number(inst.tree).burning_number; });
  }
  if (*row.constructed > row.bounds.main1) {
    row.status = "constructed-exceeds-main1";
  } else if (row.exact && static_cast<std::size_t>(*row.exact) > *row.constructed) {
    row.status = "exact-exceeds-constructed";
  }
  return row;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus_spec(std::string_view spec) {
  std::vector<CorpusEntry> entries;
  for (const auto item : split(spec, ',')) {
    const auto fields = split(item, ':');
    if (fields.size() != 3) {
      throw CorpusSpecError("corpus entry '" + std::string(item) + "' is not kind:count:range");
    }
    CorpusEntry e;
    e.kind = std::string(fields[0]);
    if (e.kind != "path" && e.kind != "full-binary" && e.kind != "random-tree" &&
        e.kind != "random-no-deg2") {
      throw CorpusSpecError("unknown corpus kind '" + e.kind + "'");
    }
    e.count = parse_size(fields[1], item);
    const auto range = split(fields[2], '-');
    if (range.size() > 2) throw CorpusSpecError("bad range in corpus entry '" + std::string(item) + "'");
    e.lo = parse_size(range[0], item);
    e.hi = range.size() == 2 ? parse_size(range[1], item) : e.lo;
    const std::size_t min_size = e.kind == "full-binary" ? 0 : 1;
    if (e.lo < min_size || e.lo > e.hi) {
      throw CorpusSpecError("empty or invalid range in corpus entry '" + std::string(item) + "'");
    }
    if (e.kind == "full-binary" && e.hi > 16) {
      throw CorpusSpecError("full-binary height above 16 in '" + std::string(item) + "'");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<BenchInstance> make_corpus(const std::vector<CorpusEntry>& entries,
                                       std::uint64_t seed) {
  SplitMix64 master(seed);
  std::vector<BenchInstance> corpus;
  for (const auto& e : entries) {
    for (std::size_t i = 0; i < e.count; ++i) {
      const std::uint64_t instance_seed = master.next();
      SplitMix64 rng(instance_seed);
      corpus.push_back({corpus.size(), e.kind, instance_seed, make_instance(e, rng)});
    }
  }
  return corpus;
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& corpus,
                                const BenchOptions& options) {
  std::vector<BenchRow> rows(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) rows[i] = bench_one(corpus[i], options);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

std::string bound_table_csv_header() {
  return "n,n2,m,conjecture,main1,murakami,bessy,land_lu,bastide_floor,bastide_approx,"
         "bonato_2016,corollary_main_applies";
}

std::string bound_table_csv_row(const BoundTable& t) {
  std::ostringstream out;
  out << t.n << ',' << t.n2 << ',' << t.m << ',' << t.conjecture << ',' << t.main1 << ','
      << t.murakami << ',' << t.bessy << ',' << t.land_lu << ',' << t.bastide_floor << ','
      << t.bastide_approx << ',' << t.bonato_2016 << ','
      << (t.corollary_main_applies ? "true" : "false");
  return out.str();
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool with_timing) {
  std::ostringstream out;
  out << "instance,kind,seed,exact,constructed,status," << bound_table_csv_header();
  if (with_timing) out << ",construct_us,verify_us,exact_us";
  out << '\n';
  for (const auto& r : rows) {
    out << r.instance << ',' << r.kind << ',' << r.seed << ',';
    if (r.exact) out << *r.exact;
    out << ',';
    if (r.constructed) out << *r.constructed;
    out << ',' << r.status << ',' << bound_table_csv_row(r.bounds);
    if (with_timing) out << ',' << r.construct_us << ',' << r.verify_us << ',' << r.exact_us;
    out << '\n';
  }
  return out.str();
}

}  // namespace burning::harness
