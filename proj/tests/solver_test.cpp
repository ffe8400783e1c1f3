#include <gtest/gtest.h>

#include <set>

#include "burning/bounds.hpp"
#include "burning/engine.hpp"
#include "burning/generators.hpp"
#include "burning/solver.hpp"
#include "support/oracles.hpp"

using namespace burning;

namespace {

void expect_optimal(const Graph& g, const ExactResult& r) {
  EXPECT_EQ(r.witness.length(), static_cast<std::size_t>(r.burning_number));
  EXPECT_NO_THROW(validate_sequence(g, r.witness));
  if (r.burning_number > 1) {
    EXPECT_FALSE(burnable_within(g, r.burning_number - 1).has_value());
  }
}

// Random connected vertex subset grown from a random root.
std::vector<Vertex> random_subtree(const Tree& t, SplitMix64& rng) {
  const std::size_t target = 1 + rng.below(t.order());
  std::vector<Vertex> members{static_cast<Vertex>(rng.below(t.order()))};
  std::vector<bool> in(t.order(), false);
  in[members[0]] = true;
  while (members.size() < target) {
    std::vector<Vertex> frontier;
    for (Vertex v : members)
      for (Vertex w : t.neighbors(v))
        if (!in[w]) frontier.push_back(w);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    const Vertex pick = frontier[rng.below(frontier.size())];
    in[pick] = true;
    members.push_back(pick);
  }
  return members;
}

}  // namespace

TEST(BurnableWithin, Examples) {
  const Tree p4 = gen_path(4);
  const auto two = burnable_within(p4.graph(), 2);
  ASSERT_TRUE(two.has_value());
  EXPECT_NO_THROW(validate_sequence(p4, *two));
  EXPECT_FALSE(burnable_within(p4.graph(), 1).has_value());
  EXPECT_FALSE(burnable_within(gen_double_star(2, 2).graph(), 2).has_value());
  EXPECT_TRUE(burnable_within(gen_path(1).graph(), 1).has_value());
}

TEST(BurnableWithin, Errors) {
  EXPECT_THROW(burnable_within(build_graph(2, {}), 1), SolverError);
  EXPECT_THROW(burnable_within(gen_path(3).graph(), 0), SolverError);
  EXPECT_FALSE(burnable_within(gen_path(3).graph(), 4).has_value());
}

TEST(BurningNumber, Examples) {
  EXPECT_EQ(burning_number(gen_path(9)).burning_number, 3);
  EXPECT_EQ(burning_number(gen_path(1)).burning_number, 1);
  const Tree ds = gen_double_star(2, 2);
  const auto r = burning_number(ds);
  EXPECT_EQ(r.burning_number, 3);
  expect_optimal(ds.graph(), r);
}

TEST(BurningNumberNaive, Examples) {
  EXPECT_EQ(burning_number_naive(gen_path(4)).burning_number, 2);
  EXPECT_EQ(burning_number_naive(gen_star(3)).burning_number, 2);
  EXPECT_EQ(burning_number_naive(gen_cycle(5)).burning_number, 3);
  EXPECT_THROW(burning_number_naive(gen_path(kNaiveSolverMaxOrder + 1)), SolverError);
  try {
    burning_number_naive(build_graph(3, {{0, 1}}));
    ADD_FAILURE();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), SolverErrc::Disconnected);
  }
}

TEST(SpanningTreeMin, Examples) {
  EXPECT_EQ(spanning_tree_min(gen_cycle(4)), 2);
  EXPECT_EQ(spanning_tree_min(gen_complete(4)), 2);
  const Tree t = gen_random_tree(8, 3);
  EXPECT_EQ(spanning_tree_min(t.graph()), burning_number(t).burning_number);
  EXPECT_THROW(spanning_tree_min(gen_complete(kSpanningTreeMaxOrder + 1)), SolverError);
}

TEST(BurningNumber, PathsAndCycles) {
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto p = burning_number(gen_path(n));
    EXPECT_EQ(static_cast<std::uint64_t>(p.burning_number), oracle::ceil_sqrt(n)) << "P" << n;
    expect_optimal(gen_path(n).graph(), p);
    if (n >= 3) {
      const auto c = burning_number(gen_cycle(n));
      EXPECT_EQ(static_cast<std::uint64_t>(c.burning_number), oracle::ceil_sqrt(n)) << "C" << n;
    }
  }
}

TEST(BurningNumber, AgreesWithBallCoverOracle) {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng.below(10);
    const Graph g = gen_random_tree(n, rng.next()).graph();
    const auto r = burning_number(g);
    EXPECT_EQ(r.burning_number, oracle::burning_number(g));
    expect_optimal(g, r);
  }
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : connected_graphs_up_to_isomorphism(n))
      EXPECT_EQ(burning_number(g).burning_number, oracle::burning_number(g));
}

TEST(BurningNumber, MatchesNaiveExhaustively) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [](const Tree& t) {
      const auto fast = burning_number(t);
      const auto slow = burning_number_naive(t);
      ASSERT_EQ(fast.burning_number, slow.burning_number);
      EXPECT_NO_THROW(validate_sequence(t, slow.witness));
    });
  }
}

TEST(BurningNumber, MatchesNaiveOnSeededLargerTrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Tree t = gen_random_tree(8 + seed % 2, seed);
    EXPECT_EQ(burning_number(t).burning_number, burning_number_naive(t).burning_number);
  }
}

TEST(SpanningTreeMin, EqualsBurningNumberOnSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : connected_graphs_up_to_isomorphism(n))
      EXPECT_EQ(spanning_tree_min(g), burning_number(g).burning_number);
}

TEST(BurningNumber, SubtreeMonotone) {
  SplitMix64 rng(314);
  for (int iter = 0; iter < 100; ++iter) {
    const Tree t = gen_random_tree(2 + rng.below(13), rng.next());
    const auto members = random_subtree(t, rng);
    const auto sub = induced_subtree(t, members);
    EXPECT_LE(burning_number(sub.tree).burning_number, burning_number(t).burning_number);
  }
}

TEST(BurningNumber, WithinConjectureOnRandomTrees) {
  SplitMix64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 10 + rng.below(21);
    const Tree t = gen_random_tree(n, rng.next());
    const auto r = burning_number(t);
    EXPECT_LE(static_cast<std::uint64_t>(r.burning_number), ceil_sqrt(n));
    expect_optimal(t.graph(), r);
  }
}
