#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "burning/graph.hpp"

namespace burning {

// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state advanced by the golden
// gamma 0x9E3779B97F4A7C15, output mixed with the Stafford "Mix13" finalizer.
// split() seeds an independent child stream from the next output. This is
// the only randomness source in the project, so corpora are reproducible
// across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound), bound > 0, by rejection of the low tail.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform draw from the closed range [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + below(hi - lo + 1);
  }

  SplitMix64 split() noexcept { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

Tree gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
// Complete binary tree of the given height in heap layout (children of i are
// 2i+1 and 2i+2); order 2^(height+1) - 1.
Tree gen_full_binary(std::size_t height);
// Centers 0 and 1 joined by an edge; center 0 gets leaves 2..s+1, center 1
// gets leaves s+2..s+t+1.
Tree gen_double_star(std::size_t s, std::size_t t);
Graph gen_complete(std::size_t n);
Tree gen_star(std::size_t leaves);

// Uniform over labeled trees on n vertices (Pruefer decoding of a uniform code).
Tree gen_random_tree(std::size_t n, std::uint64_t seed);

// A uniform random tree of order n_target with a leaf hung on every degree-2
// vertex. The result has no degree-2 vertices and order in
// [n_target, 2 n_target]; it is not uniform over such trees.
Tree gen_random_no_deg2(std::size_t n_target, std::uint64_t seed);

// Pruefer code of a labeled tree (length n-2, empty for n <= 2).
std::vector<Vertex> prufer_encode(const Tree& t);
// Inverse of prufer_encode; n is code.size() + 2 unless the code is empty,
// in which case n must be given (1 or 2).
Tree prufer_decode(std::span<const Vertex> code, std::size_t n);

// Calls visit on every labeled tree of order n (n^(n-2) of them), in
// lexicographic order of Pruefer codes.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit);

// One representative per isomorphism class of connected graphs of order n
// (n <= 6), each relabeled into its canonical form.
std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n);

}  // namespace burning
