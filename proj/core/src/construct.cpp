#include "burning/construct.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "burning/bounds.hpp"
#include "burning/solver.hpp"

namespace burning {

const char* to_string(ConstructErrc code) {
  switch (code) {
    case ConstructErrc::PreconditionViolated: return "precondition violated";
    case ConstructErrc::InternalBoundViolation: return "internal bound violation";
    case ConstructErrc::DegreeTooSmall: return "degree too small";
    case ConstructErrc::NotInducedSubtree: return "not an induced subtree";
    case ConstructErrc::StructuralMismatch: return "structural mismatch";
  }
  return "unknown";
}

const char* to_string(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::ExactFallback: return "exact-fallback";
    case TraceEvent::Kind::BaseReduction: return "base-reduction";
    case TraceEvent::Kind::Separator: return "separator";
    case TraceEvent::Kind::LeafBranch: return "leaf-branch";
    case TraceEvent::Kind::Smooth: return "smooth";
    case TraceEvent::Kind::Lift: return "lift";
    case TraceEvent::Kind::Compose: return "compose";
    case TraceEvent::Kind::Augment: return "augment";
    case TraceEvent::Kind::Project: return "project";
  }
  return "unknown";
}

std::string HalfIntegral::to_string() const {
  const std::int64_t whole = twice_ / 2;
  if (twice_ % 2 == 0) return std::to_string(whole);
  if (twice_ < 0) return "-" + std::to_string(-whole) + ".5";
  return std::to_string(whole) + ".5";
}

namespace {

[[noreturn]] void fail(ConstructErrc code, const std::string& what) {
  throw ConstructError(code, what);
}

void check_bound(bool ok, const std::string& what) {
  if (!ok) fail(ConstructErrc::InternalBoundViolation, what);
}

std::vector<Vertex> all_vertices_except(std::size_t n, Vertex skip) {
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<Vertex>(v) != skip) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Vertex local_id(std::span<const Vertex> sorted_origin, Vertex v) {
  auto it = std::lower_bound(sorted_origin.begin(), sorted_origin.end(), v);
  return static_cast<Vertex>(it - sorted_origin.begin());
}

// Component sizes of a tree rooted at 0, answering |T_b(ab)| for any edge.
class RootedSizes {
 public:
  explicit RootedSizes(const Tree& t) : parent_(t.order(), -1), size_(t.order(), 1) {
    std::vector<Vertex> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Vertex w : t.neighbors(order[i])) {
        if (w != parent_[order[i]]) {
          parent_[w] = order[i];
          order.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (parent_[*it] >= 0) size_[parent_[*it]] += size_[*it];
    }
  }

  std::size_t beyond(Vertex a, Vertex b) const {
    return parent_[b] == a ? size_[b] : size_.size() - size_[a];
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

SeparatorCert find_separator(const Tree& t, HalfIntegral p) {
  const std::size_t n = t.order();
  if (n < 3 || p < HalfIntegral::from_integer(1) ||
      p >= HalfIntegral::from_integer(static_cast<std::int64_t>(n) - 1)) {
    fail(ConstructErrc::PreconditionViolated,
         "separator needs n >= 3 and 1 <= p < n - 1 (n = " + std::to_string(n) +
             ", p = " + p.to_string() + ")");
  }
  const RootedSizes sizes(t);

  Vertex leaf = 0;
  while (!t.is_leaf(leaf)) ++leaf;
  Vertex center = t.neighbors(leaf)[0];
  Vertex heavy = leaf;
  for (std::size_t steps = 0;; ++steps) {
    check_bound(steps <= n, "separator walk did not terminate");
    Vertex next = -1;
    for (Vertex y : t.neighbors(center)) {
      if (y != heavy && p.exceeded_by(sizes.beyond(center, y))) {
        next = y;
        break;
      }
    }
    if (next < 0) break;
    heavy = center;
    center = next;
  }

  SeparatorCert cert;
  cert.center = center;
  cert.threshold = p;
  for (Vertex y : t.neighbors(center)) {
    if (y == heavy) continue;
    cert.neighbors.push_back(y);
    cert.sizes.push_back(sizes.beyond(center, y));
  }
  cert.neighbors.push_back(heavy);
  cert.sizes.push_back(sizes.beyond(heavy, center));
  return cert;
}

SmoothResult smooth(const Tree& t, Vertex w) {
  const std::size_t q = t.degree(w);
  if (q < 2) {
    fail(ConstructErrc::DegreeTooSmall,
         "cannot smooth vertex " + std::to_string(w) + " of degree " + std::to_string(q));
  }
  std::vector<Vertex> roles;
  for (Vertex x : t.neighbors(w)) {
    if (t.is_leaf(x)) roles.push_back(x);
  }
  const std::size_t p = roles.size();
  for (Vertex x : t.neighbors(w)) {
    if (!t.is_leaf(x)) roles.push_back(x);
  }

  SmoothResult out{t, {}, {w}, {}, p};
  const std::size_t interior_from = p <= 2 ? 2 : p;
  for (std::size_t i = 2; i < interior_from; ++i) out.removed.push_back(roles[i]);
  out.path_order.push_back(roles[0]);
  for (std::size_t i = interior_from; i < q; ++i) out.path_order.push_back(roles[i]);
  out.path_order.push_back(roles[1]);
  std::sort(out.removed.begin(), out.removed.end());

  std::vector<Vertex> local(t.order(), -1);
  for (std::size_t v = 0; v < t.order(); ++v) {
    if (!std::binary_search(out.removed.begin(), out.removed.end(), static_cast<Vertex>(v))) {
      local[v] = static_cast<Vertex>(out.origin.size());
      out.origin.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : t.edges()) {
    if (local[a] >= 0 && local[b] >= 0) edges.emplace_back(local[a], local[b]);
  }
  for (std::size_t i = 0; i + 1 < out.path_order.size(); ++i) {
    edges.emplace_back(local[out.path_order[i]], local[out.path_order[i + 1]]);
  }
  out.tree = make_tree(out.origin.size(), edges);
  return out;
}

SmoothResult smooth_without_leaf(const Tree& t, Vertex u, Vertex leaf) {
  if (!t.has_edge(u, leaf) || !t.is_leaf(leaf)) {
    fail(ConstructErrc::PreconditionViolated,
         std::to_string(leaf) + " is not a leaf adjacent to " + std::to_string(u));
  }
  const auto keep = all_vertices_except(t.order(), leaf);
  const LabeledTree rest = induced_subtree(t, keep);
  SmoothResult sr = smooth(rest.tree, local_id(rest.origin, u));
  for (auto* ids : {&sr.origin, &sr.removed, &sr.path_order}) {
    for (auto& v : *ids) v = rest.origin[v];
  }
  return sr;
}

Schedule lift_schedule(const Tree& t, Vertex u, Vertex leaf, const SmoothResult& smoothed,
                       const BurningSequence& smoothed_sequence) {
  if (!t.graph().has_vertex(u) || !t.has_edge(u, leaf) || !t.is_leaf(leaf)) {
    fail(ConstructErrc::PreconditionViolated,
         std::to_string(leaf) + " is not a leaf adjacent to " + std::to_string(u));
  }
  if (t.degree(u) < 3) {
    fail(ConstructErrc::PreconditionViolated, "lift needs d(u) >= 3");
  }
  const Tree& reduced = smoothed.tree;
  if (smoothed.origin.size() != reduced.order()) {
    fail(ConstructErrc::StructuralMismatch, "origin map does not cover the smoothed tree");
  }
  std::vector<bool> used(t.order(), false);
  for (Vertex x : smoothed.origin) {
    if (!t.graph().has_vertex(x) || x == u || x == leaf || used[x]) {
      fail(ConstructErrc::StructuralMismatch, "origin map is not an injection into t - {u, leaf}");
    }
    used[x] = true;
  }
  for (const auto& [a, b] : reduced.edges()) {
    const Vertex x = smoothed.origin[a];
    const Vertex y = smoothed.origin[b];
    if (!t.has_edge(x, y) && !(t.has_edge(u, x) && t.has_edge(u, y))) {
      fail(ConstructErrc::StructuralMismatch,
           "smoothed edge (" + std::to_string(x) + ", " + std::to_string(y) +
               ") is neither an edge of t nor a path edge through u");
    }
  }
  validate_sequence(reduced, smoothed_sequence);

  BurnProcess process(t.graph());
  std::vector<Schedule::Entry> rounds{leaf};
  process.advance(leaf);
  for (Vertex s : smoothed_sequence) {
    if (process.finished()) break;
    const Vertex x = smoothed.origin[s];
    Schedule::Entry entry = process.is_burned(x) ? Schedule::Entry{} : Schedule::Entry{x};
    process.advance(entry);
    rounds.push_back(entry);
  }
  return Schedule(std::move(rounds));
}

BurningSequence lift_sequence(const Tree& t, Vertex u, Vertex leaf, const SmoothResult& smoothed,
                              const BurningSequence& smoothed_sequence) {
  auto lifted = canonicalize(t, lift_schedule(t, u, leaf, smoothed, smoothed_sequence));
  check_bound(lifted.length() <= smoothed_sequence.length() + 1,
              "lifted sequence longer than the smoothed one plus one");
  return lifted;
}

namespace {

class NoDegree2Builder {
 public:
  std::vector<TraceEvent> trace;

  BurningSequence build(const Tree& t, std::uint64_t m, int depth) {
    const std::size_t n = t.order();
    const std::uint64_t target = ceil_sqrt(n - m);
    auto event = [&](TraceEvent::Kind kind) -> TraceEvent& {
      trace.push_back(TraceEvent{kind, depth, n, m, target, {}, {}, {}});
      return trace.back();
    };

    if (n <= kExactFallbackOrder) {
      auto exact = burning_number(t);
      auto& e = event(TraceEvent::Kind::ExactFallback);
      e.values = {{"exact", exact.burning_number}};
      e.sequence.assign(exact.witness.begin(), exact.witness.end());
      check_bound(static_cast<std::uint64_t>(exact.burning_number) <= target,
                  "exact burning number exceeds the target on a fallback tree");
      return exact.witness;
    }
    if (m >= 1 && n == m * (m + 1) + 1) {
      event(TraceEvent::Kind::BaseReduction);
      return build(t, 0, depth);
    }

    const auto p = HalfIntegral::from_twice(4 * static_cast<std::int64_t>(target) - 3);
    const SeparatorCert sep = find_separator(t, p);
    const Vertex v = sep.center;
    const Vertex heavy = sep.heavy();
    const auto branch = component_beyond(t, v, heavy);
    {
      auto& e = event(TraceEvent::Kind::Separator);
      e.values = {{"center", v},
                  {"heavy", heavy},
                  {"p_twice", p.twice()},
                  {"heavy_side", static_cast<std::int64_t>(sep.sizes.back())},
                  {"branch", static_cast<std::int64_t>(branch.size())}};
    }

    std::vector<Vertex> branch_sequence;
    if (branch.size() == 1) {
      branch_sequence = {v, heavy};
      event(TraceEvent::Kind::LeafBranch).sequence = branch_sequence;
    } else {
      std::vector<Vertex> members = branch;
      members.push_back(v);
      const LabeledTree tk = induced_subtree(t, members);
      const Vertex local_v = local_id(tk.origin, v);
      const Vertex local_heavy = local_id(tk.origin, heavy);
      const SmoothResult sr = smooth_without_leaf(tk.tree, local_heavy, local_v);

      const std::size_t smaller = sr.tree.order();
      const std::uint64_t next_m = (m >= 1 && smaller >= m * m + 1) ? m - 1 : 0;
      const std::uint64_t next_target = ceil_sqrt(smaller - next_m);
      check_bound(next_target < target, "recursive target does not decrease");
      check_bound(smaller >= next_m * (next_m + 1) + 1, "recursive order below m'(m'+1)+1");
      check_bound(degree2_census(sr.tree).count == 0, "smoothed tree has a degree-2 vertex");
      {
        auto& e = event(TraceEvent::Kind::Smooth);
        e.values = {{"smoothed", heavy},
                    {"order_after", static_cast<std::int64_t>(smaller)},
                    {"next_m", static_cast<std::int64_t>(next_m)},
                    {"next_target", static_cast<std::int64_t>(next_target)}};
        e.origin.reserve(smaller);
        for (Vertex x : sr.origin) e.origin.push_back(tk.origin[x]);
      }

      const BurningSequence inner = build(sr.tree, next_m, depth + 1);
      const BurningSequence lifted = lift_sequence(tk.tree, local_heavy, local_v, sr, inner);
      check_bound(lifted[0] == local_v, "lifted sequence does not begin with the separator");
      for (Vertex x : lifted) branch_sequence.push_back(tk.origin[x]);
      event(TraceEvent::Kind::Lift).sequence = branch_sequence;
    }

    // Light branches burn from v alone: every vertex there within `target`.
    const auto dist = bfs_distances(t.graph(), v);
    int light_radius = 1;
    for (std::size_t i = 0; i + 1 < sep.neighbors.size(); ++i) {
      for (Vertex w : component_beyond(t, v, sep.neighbors[i])) {
        light_radius = std::max(light_radius, dist[w] + 1);
      }
    }
    check_bound(static_cast<std::uint64_t>(light_radius) <= target,
                "a light component is not burned from the separator within the target");

    std::vector<Schedule::Entry> rounds(branch_sequence.begin(), branch_sequence.end());
    BurningSequence seq = canonicalize(t, Schedule(std::move(rounds)));
    validate_sequence(t, seq);
    check_bound(seq.length() <= target, "composed sequence exceeds the target");
    auto& e = event(TraceEvent::Kind::Compose);
    e.values = {{"light_radius", light_radius}, {"length", static_cast<std::int64_t>(seq.length())}};
    e.sequence.assign(seq.begin(), seq.end());
    return seq;
  }
};

}  // namespace

BoundCertificate construct_no_deg2(const Tree& t, std::uint64_t m) {
  const std::size_t n = t.order();
  if (degree2_census(t).count != 0) {
    fail(ConstructErrc::PreconditionViolated, "tree has degree-2 vertices");
  }
  if (m >= n || n < m * (m + 1) + 1) {
    fail(ConstructErrc::PreconditionViolated,
         "order " + std::to_string(n) + " is below m(m+1)+1 for m = " + std::to_string(m));
  }
  NoDegree2Builder builder;
  BurningSequence seq = builder.build(t, m, 0);
  RoundLabeling labeling = validate_sequence(t, seq);
  const std::uint64_t target = ceil_sqrt(n - m);
  check_bound(seq.length() <= target, "certificate exceeds its target");
  return {BoundCertificate::Kind::NoDegree2, n, 0, m, target, std::move(seq),
          std::move(labeling), std::move(builder.trace)};
}

BurningSequence project_to_subtree(const Tree& sub, const Tree& sup,
                                   std::span<const Vertex> embedding,
                                   const BurningSequence& seq) {
  if (embedding.size() != sub.order()) {
    fail(ConstructErrc::NotInducedSubtree, "embedding size differs from the subtree order");
  }
  std::vector<Vertex> to_sub(sup.order(), -1);
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    const Vertex x = embedding[i];
    if (!sup.graph().has_vertex(x) || to_sub[x] >= 0) {
      fail(ConstructErrc::NotInducedSubtree, "embedding is not injective into the supertree");
    }
    to_sub[x] = static_cast<Vertex>(i);
  }
  for (const auto& [a, b] : sub.edges()) {
    if (!sup.has_edge(embedding[a], embedding[b])) {
      fail(ConstructErrc::NotInducedSubtree, "subtree edge missing from the supertree");
    }
  }
  for (const auto& [a, b] : sup.edges()) {
    if (to_sub[a] >= 0 && to_sub[b] >= 0 && !sub.has_edge(to_sub[a], to_sub[b])) {
      fail(ConstructErrc::NotInducedSubtree, "subtree is not induced");
    }
  }

  // Nearest subtree vertex for every supertree vertex (unique in a tree).
  std::vector<Vertex> nearest(sup.order(), -1);
  std::queue<Vertex> frontier;
  for (std::size_t x = 0; x < sup.order(); ++x) {
    if (to_sub[x] >= 0) {
      nearest[x] = to_sub[x];
      frontier.push(static_cast<Vertex>(x));
    }
  }
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : sup.neighbors(x)) {
      if (nearest[y] < 0) {
        nearest[y] = nearest[x];
        frontier.push(y);
      }
    }
  }

  BurnProcess process(sub.graph());
  std::vector<Schedule::Entry> rounds;
  for (Vertex s : seq) {
    if (process.finished()) break;
    if (!sup.graph().has_vertex(s)) {
      fail(ConstructErrc::StructuralMismatch, "sequence vertex outside the supertree");
    }
    const Vertex c = nearest[s];
    Schedule::Entry entry = process.is_burned(c) ? Schedule::Entry{} : Schedule::Entry{c};
    process.advance(entry);
    rounds.push_back(entry);
  }
  auto projected = canonicalize(sub, Schedule(std::move(rounds)));
  check_bound(projected.length() <= seq.length(), "projection is longer than the source sequence");
  return projected;
}

BurningSequence project_to_subtree(const Tree& sub, const Tree& sup, const BurningSequence& seq) {
  std::vector<Vertex> identity(sub.order());
  std::iota(identity.begin(), identity.end(), 0);
  return project_to_subtree(sub, sup, identity, seq);
}

BoundCertificate construct_general(const Tree& t) {
  const std::uint64_t n = t.order();
  const std::uint64_t n2 = degree2_census(t).count;
  const Augmentation aug = augment_degree2(t);
  const std::uint64_t m = m_of(n + n2);
  check_bound(n + n2 >= m * (m + 1) + 1, "m_of contract n + n2 >= m(m+1)+1 failed");

  BoundCertificate inner = construct_no_deg2(aug.tree, m);
  std::vector<TraceEvent> trace;
  {
    TraceEvent e{TraceEvent::Kind::Augment, 0, aug.tree.order(), m, inner.target, {}, {}, {}};
    e.values = {{"n", static_cast<std::int64_t>(n)}, {"n2", static_cast<std::int64_t>(n2)}};
    for (const auto& [leaf, at] : aug.attachments) {
      e.values.emplace_back("leaf_" + std::to_string(leaf), at);
    }
    trace.push_back(std::move(e));
  }
  for (auto& e : inner.trace) trace.push_back(std::move(e));

  BurningSequence seq = project_to_subtree(t, aug.tree, inner.sequence);
  RoundLabeling labeling = validate_sequence(t, seq);
  const std::uint64_t target = bound_main1(n, n2);
  check_bound(seq.length() <= target, "projected sequence exceeds bound_main1");
  {
    TraceEvent e{TraceEvent::Kind::Project, 0, t.order(), m, target, {}, {}, {}};
    e.sequence.assign(seq.begin(), seq.end());
    trace.push_back(std::move(e));
  }
  return {BoundCertificate::Kind::General, n, n2, m, target, std::move(seq), std::move(labeling),
          std::move(trace)};
}

}  // namespace burning
