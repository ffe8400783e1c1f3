#include "burning/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace burning {

namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw SolverError(SolverErrc::Disconnected, "graph is disconnected");
}

// Balls stored as packed bitsets: ball(v, r) = {w : d(v, w) <= r}.
class BallCoverSearch {
 public:
  BallCoverSearch(const Graph& g, int k)
      : n_(g.vertex_count()), words_((n_ + 63) / 64), k_(k), dist_(n_ * n_) {
    std::vector<int> ecc(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      const auto d = bfs_distances(g, static_cast<Vertex>(v));
      for (std::size_t w = 0; w < n_; ++w) {
        dist_[v * n_ + w] = d[w];
        ecc[v] = std::max(ecc[v], d[w]);
      }
    }
    balls_.assign(n_ * static_cast<std::size_t>(k_) * words_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      for (int r = 0; r < k_; ++r) {
        auto* ball = ball_words(static_cast<Vertex>(v), r);
        for (std::size_t w = 0; w < n_; ++w) {
          if (dist_[v * n_ + w] <= r) ball[w / 64] |= std::uint64_t{1} << (w % 64);
        }
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return ecc[a] > ecc[b]; });
  }

  std::optional<BurningSequence> run(std::uint64_t& nodes) {
    std::vector<std::uint64_t> uncovered((k_ + 1) * words_, 0);
    for (std::size_t w = 0; w < n_; ++w) uncovered[w / 64] |= std::uint64_t{1} << (w % 64);
    chosen_.clear();
    if (!search(1, uncovered, nodes)) return std::nullopt;
    return BurningSequence(chosen_);
  }

 private:
  const std::uint64_t* ball_words(Vertex v, int r) const {
    return &balls_[(static_cast<std::size_t>(v) * k_ + r) * words_];
  }
  std::uint64_t* ball_words(Vertex v, int r) {
    return &balls_[(static_cast<std::size_t>(v) * k_ + r) * words_];
  }

  std::size_t count(const std::uint64_t* set) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(set[i]);
    return c;
  }

  std::size_t overlap(const std::uint64_t* a, const std::uint64_t* b) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }

  // Most uncovered vertices any remaining rounds i..k could still cover.
  std::size_t coverage_capacity(int i, const std::uint64_t* uncovered) const {
    std::size_t total = 0;
    for (int round = i; round <= k_; ++round) {
      const int r = k_ - round;
      std::size_t best = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        best = std::max(best, overlap(ball_words(static_cast<Vertex>(v), r), uncovered));
      }
      total += best;
    }
    return total;
  }

  bool search(int i, std::vector<std::uint64_t>& stack, std::uint64_t& nodes) {
    ++nodes;
    const std::uint64_t* uncovered = &stack[(i - 1) * words_];
    const std::size_t remaining = count(uncovered);
    if (i > k_) return remaining == 0;
    if (coverage_capacity(i, uncovered) < remaining) return false;

    std::uint64_t* next = &stack[i * words_];
    const int r = k_ - i;
    for (Vertex x : order_) {
      bool eligible = true;
      for (std::size_t j = 0; j < chosen_.size(); ++j) {
        // x_{j+1} reaches x at round (j+1) + d; x must be unburned at the
        // start of round i.
        if (dist_[chosen_[j] * n_ + x] < i - static_cast<int>(j + 1)) {
          eligible = false;
          break;
        }
      }
      if (!eligible) continue;
      const auto* ball = ball_words(x, r);
      for (std::size_t w = 0; w < words_; ++w) next[w] = uncovered[w] & ~ball[w];
      chosen_.push_back(x);
      if (search(i + 1, stack, nodes)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::size_t words_;
  int k_;
  std::vector<int> dist_;
  std::vector<std::uint64_t> balls_;
  std::vector<Vertex> order_;
  std::vector<Vertex> chosen_;
};

// Depth-limited enumeration of every process of exactly k rounds.
bool enumerate_processes(const BurnProcess& process, int k, std::vector<Vertex>& chosen,
                         std::uint64_t& nodes, std::size_t n) {
  ++nodes;
  if (process.rounds_played() == k) return process.finished();
  if (process.finished()) return false;
  for (std::size_t v = 0; v < n; ++v) {
    if (process.is_burned(static_cast<Vertex>(v))) continue;
    BurnProcess next = process;
    next.advance(static_cast<Vertex>(v));
    chosen.push_back(static_cast<Vertex>(v));
    if (enumerate_processes(next, k, chosen, nodes, n)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<BurningSequence> burnable_within(const Graph& g, int k,
                                               std::uint64_t* nodes_explored) {
  if (k < 1) throw SolverError(SolverErrc::InvalidArgument, "k must be positive");
  require_connected(g);
  std::uint64_t nodes = 0;
  std::optional<BurningSequence> found;
  if (static_cast<std::size_t>(k) <= g.vertex_count()) {
    BallCoverSearch search(g, k);
    found = search.run(nodes);
  }
  if (nodes_explored) *nodes_explored += nodes;
  if (found) validate_sequence(g, *found);
  return found;
}

ExactResult burning_number(const Graph& g) {
  require_connected(g);
  std::uint64_t nodes = 0;
  for (int k = 1; static_cast<std::size_t>(k) <= g.vertex_count(); ++k) {
    if (auto seq = burnable_within(g, k, &nodes)) return {k, std::move(*seq), nodes};
  }
  // Unreachable: a connected graph is burned by some sequence of length <= n.
  throw std::logic_error("no burning sequence found");
}

ExactResult burning_number_naive(const Graph& g) {
  if (g.vertex_count() > kNaiveSolverMaxOrder) {
    throw SolverError(SolverErrc::TooLarge, "naive solver is limited to " +
                                                std::to_string(kNaiveSolverMaxOrder) +
                                                " vertices");
  }
  require_connected(g);
  std::uint64_t nodes = 0;
  for (int k = 1; static_cast<std::size_t>(k) <= g.vertex_count(); ++k) {
    std::vector<Vertex> chosen;
    BurnProcess start(g);
    if (enumerate_processes(start, k, chosen, nodes, g.vertex_count())) {
      BurningSequence witness(chosen);
      validate_sequence(g, witness);
      return {k, std::move(witness), nodes};
    }
  }
  throw std::logic_error("no burning sequence found");
}

int spanning_tree_min(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kSpanningTreeMaxOrder) {
    throw SolverError(SolverErrc::TooLarge, "spanning tree enumeration is limited to " +
                                                std::to_string(kSpanningTreeMaxOrder) +
                                                " vertices");
  }
  require_connected(g);
  const auto edges = g.edges();
  int best = static_cast<int>(n) + 1;
  std::vector<Edge> picked;

  // Union-find over a copied parent array per level keeps backtracking trivial.
  auto find = [](std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto recurse = [&](auto& self, std::size_t from, std::vector<int> parent) -> void {
    if (picked.size() + 1 == n) {
      best = std::min(best, burning_number(make_tree(n, picked)).burning_number);
      return;
    }
    const std::size_t needed = n - 1 - picked.size();
    for (std::size_t e = from; e + needed <= edges.size(); ++e) {
      const int a = find(parent, edges[e].first);
      const int b = find(parent, edges[e].second);
      if (a == b) continue;
      auto next = parent;
      next[a] = b;
      picked.push_back(edges[e]);
      self(self, e + 1, std::move(next));
      picked.pop_back();
    }
  };
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  recurse(recurse, 0, parent);
  return best;
}

}  // namespace burning
