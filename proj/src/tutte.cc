#include "nodebal/tutte.h"

#include <string>

#include "nodebal/errors.h"
#include "nodebal/subsets.h"

namespace nodebal {

namespace {

std::vector<bool> membership(const Graph& g, const VertexSet& u) {
  std::vector<bool> in(static_cast<std::size_t>(g.num_vertices()), false);
  for (Vertex v : u) {
    if (v < 0 || v >= g.num_vertices()) throw InvalidInput("vertex outside the graph");
    in[static_cast<std::size_t>(v)] = true;
  }
  return in;
}

void check_demand(const Graph& g, const BVector& b) {
  if (b.size() != g.num_vertices()) {
    throw InvalidInput("b-vector has " + std::to_string(b.size()) + " entries for " +
                       std::to_string(g.num_vertices()) + " vertices");
  }
}

// Deficiency of the subset `u` using neighbor bitmasks.
Count mask_deficiency(const std::vector<VertexMask>& adj, const BVector& b,
                      VertexMask all, VertexMask u) {
  const VertexMask rest = all & ~u;
  Count value = 0;
  for (VertexMask m = u; m != 0; m &= m - 1) value -= b[std::countr_zero(m)];
  VertexMask pending = rest;
  for (VertexMask m = rest; m != 0; m &= m - 1) {
    const int v = std::countr_zero(m);
    if ((adj[static_cast<std::size_t>(v)] & rest) == 0) {
      value += b[v];
      pending &= ~(VertexMask{1} << v);
    }
  }
  while (pending != 0) {
    VertexMask component = pending & (~pending + 1);
    VertexMask frontier = component;
    while (frontier != 0) {
      VertexMask grown = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) {
        grown |= adj[static_cast<std::size_t>(std::countr_zero(m))];
      }
      frontier = grown & rest & ~component;
      component |= frontier;
    }
    pending &= ~component;
    Count total = 0;
    for (VertexMask m = component; m != 0; m &= m - 1) total += b[std::countr_zero(m)];
    if (total % 2 != 0) ++value;
  }
  return value;
}

}  // namespace

VertexSet isolated_vertices(const Graph& g, const VertexSet& u) {
  const auto in_u = membership(g, u);
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_u[static_cast<std::size_t>(v)]) continue;
    bool isolated = true;
    for (Vertex x : g.neighbors(v)) {
      if (!in_u[static_cast<std::size_t>(x)]) {
        isolated = false;
        break;
      }
    }
    if (isolated) out.push_back(v);
  }
  return out;
}

Count s_count(const Graph& g, const VertexSet& u, const BVector& b) {
  check_demand(g, b);
  const auto in_u = membership(g, u);
  std::vector<bool> seen = in_u;
  Count odd = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    int size = 0;
    Count total = 0;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      total += b[v];
      for (Vertex x : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = true;
          stack.push_back(x);
        }
      }
    }
    if (size >= 2 && total % 2 != 0) ++odd;
  }
  return odd;
}

ViolatingSet evaluate_tutte_set(const Graph& g, const VertexSet& u, const BVector& b) {
  check_demand(g, b);
  ViolatingSet out;
  out.u = u;
  out.isolated = isolated_vertices(g, u);
  out.s_count = s_count(g, u, b);
  Count value = out.s_count;
  for (Vertex v : out.isolated) value += b[v];
  for (Vertex v : u) value -= b[v];
  out.deficiency = value;
  return out;
}

Count tutte_deficiency(const Graph& g, const VertexSet& u, const BVector& b) {
  return evaluate_tutte_set(g, u, b).deficiency;
}

std::optional<ViolatingSet> check_tutte_enumeration(const Graph& g, const BVector& b,
                                                    int limit) {
  check_demand(g, b);
  const int n = g.num_vertices();
  if (n > limit || n > 62) {
    throw BudgetExceeded("Tutte enumeration over " + std::to_string(n) +
                         " vertices exceeds the limit of " + std::to_string(limit));
  }
  const auto adj = adjacency_masks(g);
  const VertexMask all = n == 0 ? 0 : (~VertexMask{0} >> (64 - n));
  Count best = 0;
  std::optional<VertexMask> best_mask;
  for_each_subset_canonical(n, [&](VertexMask u) {
    const Count d = mask_deficiency(adj, b, all, u);
    if (d > best) {
      best = d;
      best_mask = u;
    }
    return false;
  });
  if (!best_mask) return std::nullopt;
  return evaluate_tutte_set(g, to_set(*best_mask), b);
}

bool verify_plan_perfect(const Graph& g, const BVector& b, const IncrementPlan& plan) {
  check_demand(g, b);
  validate_plan(g, plan);
  std::vector<Count> covered(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const auto& [id, count] : plan.entries()) {
    covered[static_cast<std::size_t>(g.edge(id).u)] += count;
    covered[static_cast<std::size_t>(g.edge(id).v)] += count;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (covered[static_cast<std::size_t>(v)] != b[v]) return false;
  }
  return true;
}

}  // namespace nodebal
