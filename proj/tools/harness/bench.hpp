#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "burning/bounds.hpp"
#include "burning/graph.hpp"

namespace burning::harness {

class CorpusSpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One corpus entry "kind:count:lo-hi" (or "kind:count:n"). For path,
// random-tree and random-no-deg2 the range is the order (random-no-deg2:
// the pre-augmentation order); for full-binary it is the height.
struct CorpusEntry {
  std::string kind;
  std::size_t count = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Comma-separated list of entries, e.g. "random-tree:100:2-60,path:5:1-30".
std::vector<CorpusEntry> parse_corpus_spec(std::string_view spec);

struct BenchInstance {
  std::size_t id = 0;
  std::string kind;
  std::uint64_t seed = 0;
  Tree tree;
};

// Instance i takes the i-th output of SplitMix64(seed) as its own seed and
// draws its size and shape from that alone.
std::vector<BenchInstance> make_corpus(const std::vector<CorpusEntry>& entries,
                                       std::uint64_t seed);

struct BenchRow {
  std::size_t instance = 0;
  std::string kind;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::uint64_t n2 = 0;
  std::optional<int> exact;
  std::optional<std::size_t> constructed;
  BoundTable bounds;
  std::string status;  // "ok" or the violated contract
  std::int64_t construct_us = 0;
  std::int64_t verify_us = 0;
  std::int64_t exact_us = 0;

  bool ok() const { return status == "ok"; }
};

struct BenchOptions {
  std::uint64_t seed = 0;
  std::size_t cap = 30;  // exact solver only runs when n <= cap
  unsigned jobs = 1;
};

// Rows come back in instance order regardless of jobs.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& corpus,
                                const BenchOptions& options);

std::string bound_table_csv_header();
std::string bound_table_csv_row(const BoundTable& t);

std::string bench_csv(const std::vector<BenchRow>& rows, bool with_timing = true);

}  // namespace burning::harness
