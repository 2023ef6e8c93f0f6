#include "nodebal/hypergraph.h"

#include <algorithm>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("negative vertex count");
  incident_.assign(static_cast<std::size_t>(n), {});
  for (int id = 0; id < num_edges(); ++id) {
    auto& e = edges_[static_cast<std::size_t>(id)];
    if (e.empty()) throw InvalidInput("hyperedge " + std::to_string(id) + " is empty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidInput("hyperedge " + std::to_string(id) + " repeats a vertex");
    }
    if (e.front() < 0 || e.back() >= n) {
      throw InvalidInput("hyperedge " + std::to_string(id) +
                         " has a member outside [0, " + std::to_string(n) + ")");
    }
    for (Vertex v : e) incident_[static_cast<std::size_t>(v)].push_back(id);
  }
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Hypergraph(g.num_vertices(), std::move(edges));
}

int Hypergraph::max_edge_size() const {
  std::size_t best = 0;
  for (const auto& e : edges_) best = std::max(best, e.size());
  return static_cast<int>(best);
}

}  // namespace nodebal
