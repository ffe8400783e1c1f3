#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burning/engine.hpp"
#include "burning/graph.hpp"

namespace burning {

enum class ConstructErrc {
  PreconditionViolated,
  InternalBoundViolation,
  DegreeTooSmall,
  NotInducedSubtree,
  StructuralMismatch,
};

const char* to_string(ConstructErrc code);

class ConstructError : public std::runtime_error {
 public:
  ConstructError(ConstructErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ConstructErrc code() const noexcept { return code_; }

 private:
  ConstructErrc code_;
};

// An exact multiple of 1/2, stored as twice its value. Separator thresholds
// have the form 2s - 3/2 and are compared against integer component sizes.
class HalfIntegral {
 public:
  static constexpr HalfIntegral from_twice(std::int64_t twice) { return HalfIntegral(twice); }
  static constexpr HalfIntegral from_integer(std::int64_t value) { return HalfIntegral(2 * value); }

  constexpr std::int64_t twice() const noexcept { return twice_; }
  // true iff size > this
  constexpr bool exceeded_by(std::size_t size) const noexcept {
    return 2 * static_cast<std::int64_t>(size) > twice_;
  }
  std::string to_string() const;

  friend constexpr auto operator<=>(HalfIntegral, HalfIntegral) = default;

 private:
  constexpr explicit HalfIntegral(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_;
};

// A vertex v whose neighbors v_1..v_k satisfy |T_v(v v_k)| > p and
// |T_{v_i}(v v_i)| <= p for i < k.
struct SeparatorCert {
  Vertex center = -1;
  std::vector<Vertex> neighbors;  // light neighbors ascending, heavy neighbor last
  HalfIntegral threshold = HalfIntegral::from_integer(0);
  // |T_{v_i}(v v_i)| for each light neighbor, then |T_v(v v_k)|
  std::vector<std::size_t> sizes;

  Vertex heavy() const { return neighbors.back(); }
  std::size_t heavy_index() const { return neighbors.size() - 1; }
};

// Requires n >= 3 and 1 <= p < n - 1. Starts at the neighbor of the lowest-id
// leaf and walks into any light-side branch larger than p.
SeparatorCert find_separator(const Tree& t, HalfIntegral p);

struct SmoothResult {
  Tree tree;
  // result id -> id in the tree the smoothing was applied to
  std::vector<Vertex> origin;
  // the smoothed vertex plus any deleted leaves, ascending
  std::vector<Vertex> removed;
  // vertices joined into the new path, in path order
  std::vector<Vertex> path_order;
  std::size_t leaf_neighbors = 0;
};

// Deletes w (degree q >= 2, with p leaf neighbors) and joins its neighbors
// into a path. Leaf neighbors take roles w_1..w_p in ascending id order,
// the others w_{p+1}..w_q. p <= 2: path w_1 w_3 ... w_q w_2. p >= 3: delete
// w_3..w_p, path w_1 w_{p+1} ... w_q w_2.
SmoothResult smooth(const Tree& t, Vertex w);

// Smoothing of u in t - leaf. origin, removed and path_order refer to ids of
// t (the leaf itself is in neither origin nor removed).
SmoothResult smooth_without_leaf(const Tree& t, Vertex u, Vertex leaf);

// Schedule on t that starts at `leaf` and then replays the smoothed tree's
// sequence one round late, skipping any source that is already burned.
Schedule lift_schedule(const Tree& t, Vertex u, Vertex leaf, const SmoothResult& smoothed,
                       const BurningSequence& smoothed_sequence);

// Canonicalized lift_schedule: starts with `leaf`, length at most
// length(smoothed_sequence) + 1.
BurningSequence lift_sequence(const Tree& t, Vertex u, Vertex leaf, const SmoothResult& smoothed,
                              const BurningSequence& smoothed_sequence);

struct TraceEvent {
  enum class Kind {
    ExactFallback,
    BaseReduction,
    Separator,
    LeafBranch,
    Smooth,
    Lift,
    Compose,
    Augment,
    Project,
  };

  Kind kind;
  int depth = 0;
  std::size_t order = 0;
  std::uint64_t m = 0;
  std::uint64_t target = 0;
  std::vector<std::pair<std::string, std::int64_t>> values;
  // relabeling of the child structure into this level's ids, when one exists
  std::vector<Vertex> origin;
  std::vector<Vertex> sequence;
};

const char* to_string(TraceEvent::Kind kind);

struct BoundCertificate {
  enum class Kind { NoDegree2, General };

  Kind kind;
  std::uint64_t n;
  std::uint64_t n2;
  std::uint64_t m;
  std::uint64_t target;
  BurningSequence sequence;
  RoundLabeling labeling;
  std::vector<TraceEvent> trace;
};

// Trees up to this order are handed to the exact solver inside the recursion.
inline constexpr std::size_t kExactFallbackOrder = 9;

// A burning sequence of length <= ceil(sqrt(n - m)) for a tree without
// degree-2 vertices of order n >= m(m+1) + 1.
BoundCertificate construct_no_deg2(const Tree& t, std::uint64_t m);

// Restricts a sequence valid on `sup` to the induced subtree `sub`, where
// embedding[i] is the id in `sup` of vertex i of `sub`. Sources outside
// `sub` are replaced by their nearest vertex in `sub`.
BurningSequence project_to_subtree(const Tree& sub, const Tree& sup,
                                   std::span<const Vertex> embedding,
                                   const BurningSequence& seq);

// Same, with `sub` occupying ids 0..|sub|-1 of `sup`.
BurningSequence project_to_subtree(const Tree& sub, const Tree& sup, const BurningSequence& seq);

// Any tree: augment degree-2 vertices, construct on the augmented tree with
// m = m_of(n + n2), project back. Length <= bound_main1(n, n2).
BoundCertificate construct_general(const Tree& t);

}  // namespace burning
