#pragma once

#include <span>
#include <vector>

#include "nodebal/graph.h"

namespace nodebal {

// Hypergraph on vertices 0..n-1. Each hyperedge is a nonempty set of
// distinct vertices, stored sorted. Repeated hyperedges are allowed and keep
// their input order, which defines their ids.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n, std::vector<std::vector<Vertex>> edges = {});

  static Hypergraph from_graph(const Graph& g);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const std::vector<Vertex>> edges() const { return edges_; }
  const std::vector<Vertex>& edge(int id) const {
    return edges_[static_cast<std::size_t>(id)];
  }
  std::span<const int> incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  int max_edge_size() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace nodebal
