#include <gtest/gtest.h>

#include <set>

#include "burning/bounds.hpp"
#include "burning/construct.hpp"
#include "burning/engine.hpp"
#include "burning/generators.hpp"
#include "burning/solver.hpp"
#include "support/oracles.hpp"

using namespace burning;

namespace {

ConstructErrc construct_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConstructError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected ConstructError";
  return ConstructErrc::StructuralMismatch;
}

// |T_y(xy)| counted from distances: w lies on y's side iff it is closer to y.
std::size_t side_size(const std::vector<std::vector<int>>& d, Vertex x, Vertex y) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < d.size(); ++w) count += d[y][w] < d[x][w];
  return count;
}

std::uint64_t max_m(std::uint64_t n) {
  std::uint64_t m = 0;
  while ((m + 1) * (m + 2) + 1 <= n) ++m;
  return m;
}

void expect_certificate(const Tree& t, const BoundCertificate& cert) {
  EXPECT_EQ(cert.n, t.order());
  EXPECT_LE(cert.sequence.length(), cert.target);
  EXPECT_EQ(validate_sequence(t, cert.sequence), cert.labeling);
  std::vector<Vertex> raw(cert.sequence.begin(), cert.sequence.end());
  EXPECT_TRUE(oracle::is_burning_sequence(t.graph(), raw));
}

int max_smoothing_depth(const BoundCertificate& cert) {
  int depth = 0;
  for (const auto& e : cert.trace) depth = std::max(depth, e.depth);
  return depth;
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
    const Vertex pick = frontier[rng.below(frontier.size())];
    if (in[pick]) continue;
    in[pick] = true;
    members.push_back(pick);
  }
  return members;
}

}  // namespace

TEST(HalfIntegral, Basics) {
  const auto p = HalfIntegral::from_twice(13);
  EXPECT_EQ(p.to_string(), "6.5");
  EXPECT_EQ(HalfIntegral::from_integer(4).to_string(), "4");
  EXPECT_TRUE(p.exceeded_by(7));
  EXPECT_FALSE(p.exceeded_by(6));
  EXPECT_FALSE(HalfIntegral::from_integer(2).exceeded_by(2));
  EXPECT_LT(HalfIntegral::from_twice(3), HalfIntegral::from_integer(2));
}

// The walk from the lowest leaf on P5 with p = 2 stops at vertex 2: its heavy
// side {0,1,2} has 3 > 2 vertices, its light side {3,4} has 2 <= 2.
TEST(FindSeparator, PathOfFive) {
  const Tree p5 = gen_path(5);
  const auto cert = find_separator(p5, HalfIntegral::from_integer(2));
  EXPECT_EQ(cert.center, 2);
  EXPECT_EQ(cert.heavy(), 1);
  EXPECT_EQ(cert.neighbors, (std::vector<Vertex>{3, 1}));
  EXPECT_EQ(cert.sizes, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(cert.heavy_index(), 1u);
}

TEST(FindSeparator, Star) {
  const auto cert = find_separator(gen_star(3), HalfIntegral::from_integer(1));
  EXPECT_EQ(cert.center, 0);
  EXPECT_EQ(cert.sizes.back(), 3u);
  for (std::size_t i = 0; i + 1 < cert.sizes.size(); ++i) EXPECT_EQ(cert.sizes[i], 1u);
}

TEST(FindSeparator, Preconditions) {
  EXPECT_EQ(construct_error([] { find_separator(gen_path(5), HalfIntegral::from_integer(4)); }),
            ConstructErrc::PreconditionViolated);
  EXPECT_EQ(construct_error([] { find_separator(gen_path(2), HalfIntegral::from_integer(1)); }),
            ConstructErrc::PreconditionViolated);
  EXPECT_EQ(construct_error([] { find_separator(gen_path(5), HalfIntegral::from_twice(1)); }),
            ConstructErrc::PreconditionViolated);
  EXPECT_NO_THROW(find_separator(gen_path(5), HalfIntegral::from_twice(7)));
}

TEST(FindSeparator, CertificateInvariantsOnRandomPairs) {
  SplitMix64 rng(1000);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t n = 3 + rng.below(120);
    const Tree t = gen_random_tree(n, rng.next());
    // p uniform over the half-integers in [1, n-1)
    const auto p = HalfIntegral::from_twice(2 + static_cast<std::int64_t>(rng.below(2 * (n - 2))));
    const auto cert = find_separator(t, p);
    const auto d = oracle::all_pairs(t.graph());
    const Vertex v = cert.center;
    ASSERT_GE(cert.neighbors.size(), 2u);
    ASSERT_EQ(cert.neighbors.size(), t.degree(v));
    ASSERT_EQ(cert.sizes.size(), cert.neighbors.size());
    std::set<Vertex> nb(cert.neighbors.begin(), cert.neighbors.end());
    EXPECT_EQ(nb, std::set<Vertex>(t.neighbors(v).begin(), t.neighbors(v).end()));
    const Vertex heavy = cert.heavy();
    EXPECT_EQ(cert.sizes.back(), side_size(d, heavy, v));
    EXPECT_TRUE(p.exceeded_by(side_size(d, heavy, v)));
    for (std::size_t i = 0; i + 1 < cert.neighbors.size(); ++i) {
      EXPECT_EQ(cert.sizes[i], side_size(d, v, cert.neighbors[i]));
      EXPECT_FALSE(p.exceeded_by(side_size(d, v, cert.neighbors[i])));
    }
  }
}

TEST(Smooth, PathOfThree) {
  const auto sr = smooth(gen_path(3), 1);
  EXPECT_EQ(sr.tree, gen_path(2));
  EXPECT_EQ(sr.origin, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(sr.removed, (std::vector<Vertex>{1}));
  EXPECT_EQ(sr.leaf_neighbors, 2u);
}

TEST(Smooth, StarDropsThirdLeaf) {
  const auto sr = smooth(gen_star(3), 0);
  EXPECT_EQ(sr.tree, gen_path(2));
  EXPECT_EQ(sr.origin, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(sr.removed, (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(sr.path_order, (std::vector<Vertex>{1, 2}));
}

// w = 0 with a leaf a = 1 and non-leaf neighbours c = 2, b = 3: roles are
// w1 = a, w2 = c, w3 = b and the new path is a - b - c.
TEST(Smooth, OneLeafTwoInternal) {
  const Tree t = make_tree(7, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {2, 5}, {3, 6}});
  const auto sr = smooth(t, 0);
  EXPECT_EQ(sr.path_order, (std::vector<Vertex>{1, 3, 2}));
  EXPECT_EQ(sr.removed, (std::vector<Vertex>{0}));
  EXPECT_EQ(sr.tree.order(), 6u);
  auto local = [&](Vertex x) {
    return static_cast<Vertex>(std::find(sr.origin.begin(), sr.origin.end(), x) - sr.origin.begin());
  };
  EXPECT_TRUE(sr.tree.has_edge(local(1), local(3)));
  EXPECT_TRUE(sr.tree.has_edge(local(3), local(2)));
  EXPECT_FALSE(sr.tree.has_edge(local(1), local(2)));
}

TEST(Smooth, DegreeTooSmall) {
  EXPECT_EQ(construct_error([] { smooth(gen_path(3), 0); }), ConstructErrc::DegreeTooSmall);
}

TEST(Smooth, InvariantsOnRandomTrees) {
  SplitMix64 rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    const Tree t = gen_random_no_deg2(2 + rng.below(60), rng.next());
    std::vector<Vertex> internal;
    for (std::size_t v = 0; v < t.order(); ++v)
      if (t.degree(static_cast<Vertex>(v)) >= 2) internal.push_back(static_cast<Vertex>(v));
    if (internal.empty()) continue;
    const Vertex w = internal[rng.below(internal.size())];
    std::size_t p = 0;
    for (Vertex x : t.neighbors(w)) p += t.is_leaf(x);

    const auto sr = smooth(t, w);
    EXPECT_EQ(sr.tree.order(), t.order() - 1 - (p > 2 ? p - 2 : 0));
    EXPECT_EQ(degree2_census(sr.tree).count, 0u);
    std::set<Vertex> kept(sr.origin.begin(), sr.origin.end());
    EXPECT_EQ(kept.size(), sr.origin.size());
    for (Vertex r : sr.removed) {
      EXPECT_FALSE(kept.count(r));
      EXPECT_TRUE(r == w || (t.is_leaf(r) && t.has_edge(r, w)));
    }
    EXPECT_EQ(kept.size() + sr.removed.size(), t.order());
    for (const auto& [a, b] : sr.tree.edges()) {
      const Vertex x = sr.origin[a], y = sr.origin[b];
      EXPECT_TRUE(t.has_edge(x, y) || (t.has_edge(w, x) && t.has_edge(w, y)));
    }
  }
}

TEST(Lift, StarExample) {
  // u = 0, v = 1, a = 2, b = 3; t - v = P3 a-u-b smooths to the edge a-b.
  const Tree t = gen_star(3);
  const auto sr = smooth_without_leaf(t, 0, 1);
  EXPECT_EQ(sr.origin, (std::vector<Vertex>{2, 3}));
  const auto lifted = lift_sequence(t, 0, 1, sr, BurningSequence({0, 1}));
  EXPECT_EQ(lifted, BurningSequence({1, 2, 3}));
}

TEST(Lift, DoubleStarExample) {
  // centres u = 0 (leaves v = 2, a = 3) and c = 1 (leaves 4, 5)
  const Tree t = gen_double_star(2, 2);
  const auto sr = smooth_without_leaf(t, 0, 2);
  EXPECT_EQ(sr.tree, gen_star(3));
  EXPECT_EQ(sr.origin, (std::vector<Vertex>{1, 3, 4, 5}));
  EXPECT_EQ(sr.tree.degree(0), 3u);
  const auto lifted = lift_sequence(t, 0, 2, sr, BurningSequence({0, 1}));
  EXPECT_EQ(lifted, BurningSequence({2, 1, 3}));
  EXPECT_EQ(static_cast<int>(lifted.length()), burning_number(t).burning_number);
}

TEST(Lift, Preconditions) {
  const Tree t = gen_double_star(2, 2);
  const auto sr = smooth_without_leaf(t, 0, 2);
  EXPECT_EQ(construct_error([&] { lift_sequence(t, 0, 4, sr, BurningSequence({0, 1})); }),
            ConstructErrc::PreconditionViolated);
  const Tree p3 = gen_path(3);
  EXPECT_EQ(construct_error([&] { smooth_without_leaf(p3, 1, 1); }),
            ConstructErrc::PreconditionViolated);
  // An origin map from a different smoothing is caught structurally.
  auto wrong = sr;
  wrong.origin = {1, 3, 4, 0};
  EXPECT_EQ(construct_error([&] { lift_sequence(t, 0, 2, wrong, BurningSequence({0, 1})); }),
            ConstructErrc::StructuralMismatch);
}

// Lifting any valid sequence of the smoothed tree yields a valid sequence on
// t that starts at the leaf and is at most one longer. Some lifts skip a
// source that is already burned; those rounds are refilled by
// canonicalization.
TEST(Lift, PropertiesAndEmptyRounds) {
  SplitMix64 rng(3);
  std::size_t with_empty = 0;
  for (int iter = 0; iter < 800; ++iter) {
    const Tree t = gen_random_no_deg2(3 + rng.below(25), rng.next());
    std::vector<std::pair<Vertex, Vertex>> choices;
    for (std::size_t u = 0; u < t.order(); ++u)
      for (Vertex v : t.neighbors(static_cast<Vertex>(u)))
        if (t.degree(static_cast<Vertex>(u)) >= 3 && t.is_leaf(v)) choices.emplace_back(u, v);
    if (choices.empty()) continue;
    const auto [u, v] = choices[rng.below(choices.size())];
    const auto sr = smooth_without_leaf(t, u, v);

    // a valid but not necessarily optimal sequence on the smoothed tree
    std::vector<Schedule::Entry> rounds{static_cast<Vertex>(rng.below(sr.tree.order()))};
    for (int r = 0; r < 3; ++r) rounds.push_back(static_cast<Vertex>(rng.below(sr.tree.order())));
    BurningSequence inner({0});
    try {
      inner = canonicalize(sr.tree, Schedule(rounds));
    } catch (const BurnError&) {
      inner = burning_number(sr.tree).witness;
    }

    const Schedule sched = lift_schedule(t, u, v, sr, inner);
    with_empty += sched.empty_rounds() > 0;
    const auto lifted = lift_sequence(t, u, v, sr, inner);
    EXPECT_EQ(lifted[0], v);
    EXPECT_LE(lifted.length(), inner.length() + 1);
    EXPECT_EQ(validate_sequence(t, lifted), simulate(t, sched));
  }
  EXPECT_GT(with_empty, 0u) << "no lift exercised an empty round";
}

TEST(ConstructNoDeg2, DoubleStar) {
  const Tree t = gen_double_star(2, 2);
  const auto cert = construct_no_deg2(t, 1);
  EXPECT_EQ(cert.target, 3u);
  EXPECT_EQ(cert.sequence.length(), 3u);
  expect_certificate(t, cert);
  EXPECT_EQ(construct_error([&] { construct_no_deg2(t, 2); }), ConstructErrc::PreconditionViolated);
}

TEST(ConstructNoDeg2, SmallCases) {
  const auto p2 = construct_no_deg2(gen_path(2), 0);
  EXPECT_EQ(p2.sequence.length(), 2u);
  EXPECT_EQ(p2.target, 2u);
  const auto one = construct_no_deg2(gen_path(1), 0);
  EXPECT_EQ(one.sequence, BurningSequence({0}));
  EXPECT_EQ(construct_error([] { construct_no_deg2(gen_path(3), 0); }),
            ConstructErrc::PreconditionViolated);
}

TEST(ConstructNoDeg2, RandomTreesAllAdmissibleM) {
  SplitMix64 rng(404);
  for (int iter = 0; iter < 300; ++iter) {
    const Tree t = gen_random_no_deg2(3 + rng.below(150), rng.next());
    const std::uint64_t top = max_m(t.order());
    for (std::uint64_t m : {std::uint64_t{0}, top / 2, top}) {
      const auto cert = construct_no_deg2(t, m);
      EXPECT_EQ(cert.target, ceil_sqrt(t.order() - m));
      expect_certificate(t, cert);
      EXPECT_LE(static_cast<std::uint64_t>(max_smoothing_depth(cert)), cert.target);
      for (const auto& e : cert.trace) {
        if (e.kind != TraceEvent::Kind::Smooth) continue;
        for (const auto& [key, value] : e.values)
          if (key == "next_target") {
            EXPECT_LT(static_cast<std::uint64_t>(value), e.target);
          }
      }
    }
  }
}

// Base case n = m(m+1)+1 re-enters with m = 0 at the same target.
TEST(ConstructNoDeg2, BaseCaseReduction) {
  const Tree t = gen_star(12);  // n = 13 = 3*4 + 1
  const auto cert = construct_no_deg2(t, 3);
  EXPECT_EQ(cert.target, 4u);
  expect_certificate(t, cert);
  ASSERT_FALSE(cert.trace.empty());
  EXPECT_EQ(cert.trace.front().kind, TraceEvent::Kind::BaseReduction);
}

TEST(Project, Identity) {
  const Tree t = gen_random_tree(20, 5);
  const auto seq = construct_general(t).sequence;
  EXPECT_EQ(project_to_subtree(t, t, seq), seq);
}

TEST(Project, PathInsidePathPlusLeaf) {
  const Tree sup = make_tree(4, {{0, 1}, {1, 2}, {1, 3}});
  const BurningSequence seq({1, 0});
  ASSERT_NO_THROW(validate_sequence(sup, seq));
  EXPECT_EQ(project_to_subtree(gen_path(3), sup, seq), seq);
}

TEST(Project, PathInsideStar) {
  // sub = a - u - b with embedding a = 1, u = 0, b = 2
  const Tree sup = gen_star(3);
  const std::vector<Vertex> embedding{1, 0, 2};
  const auto out = project_to_subtree(gen_path(3), sup, embedding, BurningSequence({0, 1}));
  EXPECT_EQ(out, BurningSequence({1, 0}));
  EXPECT_EQ(validate_sequence(gen_path(3), out).total_rounds, 2);
}

TEST(Project, RejectsNonInduced) {
  const Tree sup = gen_path(4);
  const std::vector<Vertex> embedding{0, 2, 1};
  EXPECT_EQ(construct_error([&] {
              project_to_subtree(gen_path(3), sup, embedding, BurningSequence({1, 3}));
            }),
            ConstructErrc::NotInducedSubtree);
}

TEST(Project, RandomSubtrees) {
  SplitMix64 rng(66);
  for (int iter = 0; iter < 300; ++iter) {
    const Tree sup = gen_random_tree(2 + rng.below(40), rng.next());
    const auto members = random_subtree(sup, rng);
    const auto sub = induced_subtree(sup, members);
    const auto seq = construct_general(sup).sequence;
    const auto out = project_to_subtree(sub.tree, sup, sub.origin, seq);
    EXPECT_LE(out.length(), seq.length());
    EXPECT_NO_THROW(validate_sequence(sub.tree, out));
  }
}

TEST(ConstructGeneral, Examples) {
  const Tree p9 = gen_path(9);
  const auto cert = construct_general(p9);
  EXPECT_EQ(cert.n2, 7u);
  EXPECT_EQ(cert.m, 3u);
  EXPECT_EQ(cert.target, 4u);
  expect_certificate(p9, cert);

  const Tree k15 = gen_star(5);
  const auto star = construct_general(k15);
  EXPECT_EQ(star.target, 3u);
  EXPECT_EQ(star.m, 1u);
  expect_certificate(k15, star);
  EXPECT_LE(burning_number(k15).burning_number, 3);

  expect_certificate(gen_path(1), construct_general(gen_path(1)));
  expect_certificate(gen_path(2), construct_general(gen_path(2)));
}

TEST(ConstructGeneral, NoDegree2ReducesToDirectConstruction) {
  const Tree t = gen_random_no_deg2(40, 9);
  const auto general = construct_general(t);
  const auto direct = construct_no_deg2(t, m_of(t.order()));
  EXPECT_EQ(general.sequence, direct.sequence);
  EXPECT_EQ(general.target, direct.target);
}

TEST(ConstructGeneral, SandwichOnSmallTrees) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_labeled_tree(n, [](const Tree& t) {
      const auto cert = construct_general(t);
      const auto exact = burning_number(t).burning_number;
      ASSERT_LE(static_cast<std::size_t>(exact), cert.sequence.length());
      ASSERT_LE(cert.sequence.length(), bound_main1(t.order(), cert.n2));
    });
  }
  SplitMix64 rng(18);
  for (int iter = 0; iter < 100; ++iter) {
    const Tree t = gen_random_tree(8 + rng.below(11), rng.next());
    const auto cert = construct_general(t);
    expect_certificate(t, cert);
    EXPECT_LE(static_cast<std::size_t>(burning_number(t).burning_number), cert.sequence.length());
  }
}

TEST(ConstructGeneral, TraceIsWellFormed) {
  const Tree t = gen_random_tree(200, 12);
  const auto cert = construct_general(t);
  ASSERT_GE(cert.trace.size(), 2u);
  EXPECT_EQ(cert.trace.front().kind, TraceEvent::Kind::Augment);
  EXPECT_EQ(cert.trace.back().kind, TraceEvent::Kind::Project);
  EXPECT_LE(static_cast<std::uint64_t>(max_smoothing_depth(cert)), cert.target);
  std::set<std::string> names;
  for (const auto& e : cert.trace) names.insert(to_string(e.kind));
  EXPECT_TRUE(names.count("separator"));
}
