#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nodebal {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v) and sorted, so edge ids follow lexicographic edge order.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput on self-loops, duplicate edges, or endpoints out of
  // range. Edge orientation and order in the input do not matter.
  explicit Graph(int n, std::vector<Edge> edges = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  // Sorted neighbors of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  // Ids of the edges incident to v (the set delta(v)), ascending.
  std::span<const int> incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::optional<int> find_edge(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<int>> incident_;
};

// Subgraph induced on the vertices not in `removed`, relabelled 0..k-1 in
// increasing order. `original[i]` is the id of new vertex i in the input.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Direct neighborhood N(X): vertices adjacent to some member of X. May
// intersect X.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

}  // namespace nodebal
