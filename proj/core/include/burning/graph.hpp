#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burning {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrc {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  NotConnected,
  NotAcyclic,
  NotAnEdge,
  InvalidParameter,
};

const char* to_string(GraphErrc code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_vertex(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }
  bool has_edge(Vertex u, Vertex v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Validates the edge list: loops, duplicates (in either orientation) and
// out-of-range endpoints are rejected with distinct error codes.
Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges);

inline Graph build_graph(std::size_t vertex_count, std::initializer_list<Edge> edges) {
  return build_graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
}

// A connected graph with exactly n-1 edges.
class Tree {
 public:
  const Graph& graph() const noexcept { return graph_; }
  std::size_t order() const noexcept { return graph_.vertex_count(); }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool has_edge(Vertex u, Vertex v) const { return graph_.has_edge(u, v); }
  bool is_leaf(Vertex v) const { return graph_.degree(v) == 1; }
  std::vector<Edge> edges() const { return graph_.edges(); }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  friend Tree as_tree(Graph g);
  explicit Tree(Graph g) : graph_(std::move(g)) {}

  Graph graph_;
};

// Throws GraphError(NotConnected) or GraphError(NotAcyclic).
Tree as_tree(Graph g);

Tree make_tree(std::size_t vertex_count, std::span<const Edge> edges);
inline Tree make_tree(std::size_t vertex_count, std::initializer_list<Edge> edges) {
  return make_tree(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
}

// A tree together with the id each of its vertices had in the structure it
// was derived from: origin[i] is the source id of vertex i.
struct LabeledTree {
  Tree tree;
  std::vector<Vertex> origin;
};

struct Forest {
  std::vector<LabeledTree> components;

  std::size_t total_order() const;
};

// |T_v(uv)|: order of the component of T - uv that contains v.
std::size_t component_size_beyond(const Tree& t, Vertex u, Vertex v);

// Vertices of T - uv on v's side, ascending.
std::vector<Vertex> component_beyond(const Tree& t, Vertex u, Vertex v);

struct Degree2Census {
  std::size_t count = 0;
  std::vector<Vertex> vertices;
};

Degree2Census degree2_census(const Tree& t);

struct Augmentation {
  Tree tree;
  // new leaf id -> the degree-2 vertex it was attached to
  std::map<Vertex, Vertex> attachments;
};

// Adds one pendant leaf to every degree-2 vertex. Original ids are kept;
// new leaves take ids n, n+1, ... in ascending order of their attachment.
Augmentation augment_degree2(const Tree& t);

// Replaces each degree-2 vertex w with two pendant copies, one per side.
// Components are ordered by their smallest generated id; each origin map
// points back to t (both copies of w map to w).
Forest split_at_degree2(const Tree& t);

// Induced subgraph on `vertices` (any order, no repeats), relabeled densely in
// ascending source-id order. Throws GraphError(NotConnected) if the induced
// subgraph is not a tree.
LabeledTree induced_subtree(const Tree& t, std::span<const Vertex> vertices);

// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace burning
