#include "burning/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace burning {

const char* to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::LoopEdge: return "loop edge";
    case GraphErrc::DuplicateEdge: return "duplicate edge";
    case GraphErrc::VertexOutOfRange: return "vertex out of range";
    case GraphErrc::NotConnected: return "not connected";
    case GraphErrc::NotAcyclic: return "not acyclic";
    case GraphErrc::NotAnEdge: return "not an edge";
    case GraphErrc::InvalidParameter: return "invalid parameter";
  }
  return "unknown";
}

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return false;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  const auto n = static_cast<long long>(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrc::VertexOutOfRange,
                       "edge " + edge_text(u, v) + " has an endpoint outside 0.." +
                           std::to_string(n - 1));
    }
    if (u == v) throw GraphError(GraphErrc::LoopEdge, "loop edge " + edge_text(u, v));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (std::size_t u = 0; u < vertex_count; ++u) {
    auto& nb = g.adjacency_[u];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw GraphError(GraphErrc::DuplicateEdge,
                       "duplicate edge " + edge_text(static_cast<Vertex>(u), *dup));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

Tree as_tree(Graph g) {
  if (!g.is_connected()) throw GraphError(GraphErrc::NotConnected, "graph is not connected");
  if (g.edge_count() != g.vertex_count() - 1) {
    throw GraphError(GraphErrc::NotAcyclic, "graph contains a cycle");
  }
  return Tree(std::move(g));
}

Tree make_tree(std::size_t vertex_count, std::span<const Edge> edges) {
  return as_tree(build_graph(vertex_count, edges));
}

std::size_t Forest::total_order() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.tree.order();
  return total;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> component_beyond(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_edge(u, v)) {
    throw GraphError(GraphErrc::NotAnEdge, edge_text(u, v) + " is not an edge of the tree");
  }
  std::vector<Vertex> out{v};
  std::vector<Vertex> parent(t.order(), -1);
  parent[v] = u;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Vertex x = out[i];
    for (Vertex y : t.neighbors(x)) {
      if (y != parent[x]) {
        parent[y] = x;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t component_size_beyond(const Tree& t, Vertex u, Vertex v) {
  return component_beyond(t, u, v).size();
}

Degree2Census degree2_census(const Tree& t) {
  Degree2Census census;
  for (std::size_t v = 0; v < t.order(); ++v) {
    if (t.degree(static_cast<Vertex>(v)) == 2) census.vertices.push_back(static_cast<Vertex>(v));
  }
  census.count = census.vertices.size();
  return census;
}

Augmentation augment_degree2(const Tree& t) {
  const auto census = degree2_census(t);
  auto edges = t.edges();
  std::map<Vertex, Vertex> attachments;
  auto next = static_cast<Vertex>(t.order());
  for (Vertex w : census.vertices) {
    edges.emplace_back(w, next);
    attachments.emplace(next, w);
    ++next;
  }
  return {make_tree(static_cast<std::size_t>(next), edges), std::move(attachments)};
}

Forest split_at_degree2(const Tree& t) {
  const std::size_t n = t.order();
  // Each vertex owns one generated id, degree-2 vertices own two (one per
  // neighbor, in neighbor order).
  std::vector<Vertex> first_id(n);
  std::vector<Vertex> origin;
  for (std::size_t v = 0; v < n; ++v) {
    first_id[v] = static_cast<Vertex>(origin.size());
    origin.push_back(static_cast<Vertex>(v));
    if (t.degree(static_cast<Vertex>(v)) == 2) origin.push_back(static_cast<Vertex>(v));
  }
  auto copy_toward = [&](Vertex x, Vertex y) {
    if (t.degree(x) != 2) return first_id[x];
    return first_id[x] + (t.neighbors(x)[0] == y ? 0 : 1);
  };

  std::vector<std::vector<Vertex>> adj(origin.size());
  for (const auto& [u, v] : t.edges()) {
    Vertex a = copy_toward(u, v);
    Vertex b = copy_toward(v, u);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  Forest forest;
  std::vector<int> comp(origin.size(), -1);
  for (std::size_t s = 0; s < origin.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{static_cast<Vertex>(s)};
    comp[s] = static_cast<int>(forest.components.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex y : adj[members[i]]) {
        if (comp[y] < 0) {
          comp[y] = comp[s];
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Vertex> local(origin.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    std::vector<Vertex> part_origin;
    for (Vertex x : members) {
      part_origin.push_back(origin[x]);
      for (Vertex y : adj[x]) {
        if (x < y) edges.emplace_back(local[x], local[y]);
      }
    }
    forest.components.push_back({make_tree(members.size(), edges), std::move(part_origin)});
  }
  return forest;
}

LabeledTree induced_subtree(const Tree& t, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> local(t.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!t.graph().has_vertex(sorted[i])) {
      throw GraphError(GraphErrc::VertexOutOfRange, "vertex " + std::to_string(sorted[i]));
    }
    if (local[sorted[i]] >= 0) {
      throw GraphError(GraphErrc::InvalidParameter,
                       "vertex " + std::to_string(sorted[i]) + " listed twice");
    }
    local[sorted[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex x : sorted) {
    for (Vertex y : t.neighbors(x)) {
      if (x < y && local[y] >= 0) edges.emplace_back(local[x], local[y]);
    }
  }
  return {make_tree(sorted.size(), edges), std::move(sorted)};
}

}  // namespace burning
