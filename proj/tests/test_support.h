#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nodebal/graph.h"
#include "nodebal/hypergraph.h"
#include "nodebal/plan.h"
#include "nodebal/weights.h"

namespace nodebal::testing {

using Rng = std::mt19937_64;

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, edges);
}

inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Graph whose edge set is the bitmask `code` over pairs (i, j), i < j, in
// lexicographic order.
inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1u) edges.push_back({i, j});
  return Graph(n, edges);
}

// Smallest edge code over the relabellings that list vertices by
// non-increasing degree. The candidate set depends only on the isomorphism
// class, so this is a canonical form.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[static_cast<std::size_t>(j)]) == g.degree(order[static_cast<std::size_t>(i)])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::vector<int> label(static_cast<std::size_t>(n));
  std::uint64_t best = ~std::uint64_t{0};
  auto go = [&](auto&& self, std::size_t group) -> void {
    if (group == groups.size()) {
      for (int pos = 0; pos < n; ++pos) label[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
      std::uint64_t code = 0;
      for (const Edge& e : g.edges()) {
        int a = label[static_cast<std::size_t>(e.u)];
        int b = label[static_cast<std::size_t>(e.v)];
        if (a > b) std::swap(a, b);
        // Bit index of pair (a, b) in lexicographic pair order.
        const int bit = a * n - a * (a + 1) / 2 + (b - a - 1);
        code |= std::uint64_t{1} << bit;
      }
      best = std::min(best, code);
      return;
    }
    const auto [lo, hi] = groups[group];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      self(self, group + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  go(go, 0);
  return best;
}

// One representative of every isomorphism class of graphs on n vertices,
// n <= 7. Each class on n vertices arises from a class on n - 1 vertices
// plus a vertex joined to some subset.
inline std::vector<Graph> graph_catalog(int n) {
  if (n <= 1) return {Graph(n)};
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (const Graph& smaller : graph_catalog(n - 1)) {
    for (std::uint32_t attach = 0; attach < (1u << (n - 1)); ++attach) {
      std::vector<Edge> edges(smaller.edges().begin(), smaller.edges().end());
      for (int v = 0; v < n - 1; ++v)
        if ((attach >> v) & 1u) edges.push_back({v, n - 1});
      Graph g(n, edges);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

inline bool connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

// Random spanning tree plus `extra` further random edges.
inline Graph random_connected_graph(Rng& rng, int n, int extra) {
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.insert({pick(rng), v});
  }
  const int max_edges = pair_count(n);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  while (extra > 0 && static_cast<int>(edges.size()) < max_edges) {
    int a = vertex(rng);
    int b = vertex(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (edges.insert({a, b}).second) --extra;
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

template <class Tag>
CountVector<Tag> random_counts(Rng& rng, int n, Count max) {
  std::uniform_int_distribution<Count> pick(0, max);
  std::vector<Count> values(static_cast<std::size_t>(n));
  for (auto& x : values) x = pick(rng);
  return CountVector<Tag>(std::move(values));
}

inline WeightAssignment random_weights(Rng& rng, int n, Count max) {
  return random_counts<NodeWeightTag>(rng, n, max);
}

inline BVector random_demand(Rng& rng, int n, Count max) { return random_counts<DemandTag>(rng, n, max); }

// Size of a maximum matching by exhaustive search (edge-by-edge).
inline int brute_force_matching_size(const Graph& g) {
  std::vector<bool> used(static_cast<std::size_t>(g.num_vertices()), false);
  int best = 0;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  auto go = [&](auto&& self, std::size_t i, int size) -> void {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    for (std::size_t k = i; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) continue;
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = true;
      self(self, k + 1, size + 1);
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = false;
    }
  };
  go(go, 0, 0);
  return best;
}

inline WeightAssignment unit_assignment(int n, Vertex v) {
  WeightAssignment w = WeightAssignment::zeros(n);
  w.set(v, 1);
  return w;
}

// Plan from (u, v, count) triples.
inline IncrementPlan plan_of(const Graph& g, std::initializer_list<std::tuple<int, int, Count>> items) {
  IncrementPlan plan;
  for (const auto& [u, v, c] : items) plan.add(*g.find_edge(u, v), c);
  return plan;
}

inline Hypergraph random_hypergraph(Rng& rng, int n, int edges, int min_size, int max_size) {
  std::uniform_int_distribution<int> size_pick(min_size, std::min(max_size, n));
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < edges; ++i) {
    std::shuffle(all.begin(), all.end(), rng);
    const int k = size_pick(rng);
    out.emplace_back(all.begin(), all.begin() + k);
  }
  return Hypergraph(n, out);
}

}  // namespace nodebal::testing
