#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "burning/engine.hpp"
#include "burning/graph.hpp"

namespace burning {

enum class SolverErrc { Disconnected, TooLarge, InvalidArgument };

class SolverError : public std::runtime_error {
 public:
  SolverError(SolverErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  SolverErrc code() const noexcept { return code_; }

 private:
  SolverErrc code_;
};

struct ExactResult {
  int burning_number = 0;
  BurningSequence witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kNaiveSolverMaxOrder = 12;
inline constexpr std::size_t kSpanningTreeMaxOrder = 8;

// A valid burning sequence of length exactly k, if one exists. Searches the
// equivalent ball-cover formulation: (x_1..x_k) is valid iff the balls
// N_{k-i}[x_i] cover V and d(x_i, x_j) >= j - i for all i < j.
std::optional<BurningSequence> burnable_within(const Graph& g, int k,
                                               std::uint64_t* nodes_explored = nullptr);

// b(g) by trying k = 1, 2, ... with burnable_within.
ExactResult burning_number(const Graph& g);

// b(g) by enumerating every source sequence through the simulator, no
// pruning. Independent oracle for burning_number; n <= 12.
ExactResult burning_number_naive(const Graph& g);

// Minimum of b(T) over all spanning trees T of g; n <= 8.
int spanning_tree_min(const Graph& g);

inline ExactResult burning_number(const Tree& t) { return burning_number(t.graph()); }
inline ExactResult burning_number_naive(const Tree& t) { return burning_number_naive(t.graph()); }

}  // namespace burning
