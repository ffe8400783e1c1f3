#include "burning/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace burning {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(GraphErrc::InvalidParameter, what);
}

}  // namespace

Tree gen_path(std::size_t n) {
  require(n >= 1, "path order must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return make_tree(n, edges);
}

Graph gen_cycle(std::size_t n) {
  require(n >= 3, "cycle order must be at least 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return build_graph(n, edges);
}

Tree gen_full_binary(std::size_t height) {
  require(height <= 20, "full binary tree height must be at most 20");
  const std::size_t n = (std::size_t{2} << height) - 1;
  std::vector<Edge> edges;
  for (std::size_t child = 1; child < n; ++child) {
    edges.emplace_back(static_cast<Vertex>((child - 1) / 2), static_cast<Vertex>(child));
  }
  return make_tree(n, edges);
}

Tree gen_double_star(std::size_t s, std::size_t t) {
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < s; ++i) edges.emplace_back(0, next++);
  for (std::size_t i = 0; i < t; ++i) edges.emplace_back(1, next++);
  return make_tree(static_cast<std::size_t>(next), edges);
}

Graph gen_complete(std::size_t n) {
  require(n >= 1, "complete graph order must be at least 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return build_graph(n, edges);
}

Tree gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return make_tree(leaves + 1, edges);
}

Tree gen_random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "tree order must be at least 1");
  if (n <= 2) return gen_path(n);
  SplitMix64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  return prufer_decode(code, n);
}

Tree gen_random_no_deg2(std::size_t n_target, std::uint64_t seed) {
  return augment_degree2(gen_random_tree(n_target, seed)).tree;
}

std::vector<Vertex> prufer_encode(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) return {};
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = t.degree(static_cast<Vertex>(v));
  std::vector<bool> removed(n, false);
  std::set<Vertex> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(static_cast<Vertex>(v));
  }
  std::vector<Vertex> code;
  code.reserve(n - 2);
  while (code.size() < n - 2) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[leaf] = true;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--degree[w] == 1) leaves.insert(w);
    }
  }
  return code;
}

Tree prufer_decode(std::span<const Vertex> code, std::size_t n) {
  if (!code.empty()) n = code.size() + 2;
  require(n >= 1 && code.size() + 2 >= n, "code length does not match the order");
  if (n <= 2) return gen_path(n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) {
    require(c >= 0 && static_cast<std::size_t>(c) < n, "code entry out of range");
    ++degree[c];
  }
  std::set<Vertex> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(static_cast<Vertex>(v));
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return make_tree(n, edges);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
  require(n >= 1, "tree order must be at least 1");
  if (n <= 2) {
    visit(gen_path(n));
    return;
  }
  std::vector<Vertex> code(n - 2, 0);
  for (;;) {
    visit(prufer_decode(code, n));
    std::size_t i = code.size();
    while (i > 0 && static_cast<std::size_t>(code[i - 1]) == n - 1) code[--i] = 0;
    if (i == 0) return;
    ++code[i - 1];
  }
}

std::vector<Graph> connected_graphs_up_to_isomorphism(std::size_t n) {
  require(n >= 1 && n <= 6, "isomorphism catalog supports orders 1..6");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      index[u][v] = index[v][u] = static_cast<int>(pairs.size());
      pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto to_graph = [&](std::uint32_t mask) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1U) edges.push_back(pairs[e]);
    }
    return build_graph(n, edges);
  };

  std::set<std::uint32_t> canonical;
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!to_graph(mask).is_connected()) continue;
    std::uint32_t best = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1U) image |= std::uint32_t{1} << index[p[pairs[e].first]][p[pairs[e].second]];
      }
      best = std::min(best, image);
    }
    canonical.insert(best);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask : canonical) out.push_back(to_graph(mask));
  return out;
}

}  // namespace burning
