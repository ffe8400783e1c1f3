#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "burning/graph.hpp"

namespace burning {

enum class BurnErrc {
  SourceAlreadyBurned,
  LengthMismatch,
  Disconnected,
  InvalidSource,
};

const char* to_string(BurnErrc code);

class BurnError : public std::runtime_error {
 public:
  BurnError(BurnErrc code, const std::string& what, int round = 0, Vertex vertex = -1,
            int actual_rounds = 0)
      : std::runtime_error(what),
        code_(code),
        round_(round),
        vertex_(vertex),
        actual_rounds_(actual_rounds) {}

  BurnErrc code() const noexcept { return code_; }
  // SourceAlreadyBurned / InvalidSource: offending round (1-based) and vertex.
  int round() const noexcept { return round_; }
  Vertex vertex() const noexcept { return vertex_; }
  // LengthMismatch: the round in which the process actually terminated.
  int actual_rounds() const noexcept { return actual_rounds_; }

 private:
  BurnErrc code_;
  int round_;
  Vertex vertex_;
  int actual_rounds_;
};

// Nonempty list of distinct sources (x_1, ..., x_k).
class BurningSequence {
 public:
  explicit BurningSequence(std::vector<Vertex> sources);

  std::size_t length() const noexcept { return sources_.size(); }
  std::span<const Vertex> sources() const noexcept { return sources_; }
  Vertex operator[](std::size_t i) const { return sources_.at(i); }
  auto begin() const noexcept { return sources_.begin(); }
  auto end() const noexcept { return sources_.end(); }

  friend bool operator==(const BurningSequence&, const BurningSequence&) = default;

 private:
  std::vector<Vertex> sources_;
};

// Per-round sources where any round after the first may be empty.
class Schedule {
 public:
  using Entry = std::optional<Vertex>;

  explicit Schedule(std::vector<Entry> rounds);
  static Schedule from_sequence(const BurningSequence& seq);

  std::size_t length() const noexcept { return rounds_.size(); }
  const Entry& operator[](std::size_t i) const { return rounds_.at(i); }
  std::span<const Entry> rounds() const noexcept { return rounds_; }
  std::size_t empty_rounds() const noexcept;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Entry> rounds_;
};

struct RoundLabeling {
  std::vector<int> label;  // label[v] = round in which v burned (1-based)
  int total_rounds = 0;

  friend bool operator==(const RoundLabeling&, const RoundLabeling&) = default;
};

// Round-by-round burning process. In round r the source (if any) must be
// unburned at the start of the round; it burns together with every unburned
// neighbor of a vertex burned before round r.
class BurnProcess {
 public:
  explicit BurnProcess(const Graph& g);

  void advance(std::optional<Vertex> source);

  int rounds_played() const noexcept { return round_; }
  bool finished() const noexcept { return burned_ == label_.size(); }
  bool is_burned(Vertex v) const { return label_.at(v) != 0; }
  int label(Vertex v) const { return label_.at(v); }
  std::size_t burned_count() const noexcept { return burned_; }
  std::span<const Vertex> last_burned() const noexcept { return frontier_; }

  RoundLabeling labeling() const;

 private:
  const Graph* graph_;
  std::vector<int> label_;
  std::vector<Vertex> frontier_;
  std::size_t burned_ = 0;
  int round_ = 0;
};

// Runs the schedule, then keeps playing empty rounds until every vertex is
// burned. Trailing empty entries after termination are ignored; a trailing
// source after termination is SourceAlreadyBurned.
RoundLabeling simulate(const Graph& g, const Schedule& s);

// Succeeds iff the process driven by seq terminates in exactly length(seq)
// rounds; otherwise LengthMismatch carrying the actual round count.
RoundLabeling validate_sequence(const Graph& g, const BurningSequence& seq);

// Fills every empty round with the lowest-id vertex first burned in it, which
// yields a burning sequence inducing the identical process.
BurningSequence canonicalize(const Graph& g, const Schedule& s);

inline RoundLabeling simulate(const Tree& t, const Schedule& s) { return simulate(t.graph(), s); }
inline RoundLabeling validate_sequence(const Tree& t, const BurningSequence& seq) {
  return validate_sequence(t.graph(), seq);
}
inline BurningSequence canonicalize(const Tree& t, const Schedule& s) {
  return canonicalize(t.graph(), s);
}

}  // namespace burning
