#include "nodebal/graph.h"

#include <algorithm>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidInput("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidInput("duplicate edge {" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + "}");
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  incident_.assign(static_cast<std::size_t>(n), {});
  for (int id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    incident_[static_cast<std::size_t>(e.u)].push_back(id);
    incident_[static_cast<std::size_t>(e.v)].push_back(id);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<int> Graph::find_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  const int n = g.num_vertices();
  std::vector<int> relabel(static_cast<std::size_t>(n), -1);
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  for (Vertex v : removed) gone.at(static_cast<std::size_t>(v)) = true;
  InducedSubgraph out;
  for (Vertex v = 0; v < n; ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = relabel[static_cast<std::size_t>(e.u)];
    const int b = relabel[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet component;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<bool> mark(static_cast<std::size_t>(g.num_vertices()), false);
  for (Vertex v : x) {
    for (Vertex u : g.neighbors(v)) mark[static_cast<std::size_t>(u)] = true;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

}  // namespace nodebal
