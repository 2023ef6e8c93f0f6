#include "nodebal/expansion.h"

#include <algorithm>
#include <limits>
#include <string>

#include "nodebal/blossom.h"
#include "nodebal/errors.h"

namespace nodebal {

namespace {

// Split graph without materialized edges: the neighbors of a copy of v are
// all copies of all neighbors of v.
class SplitAdjacency {
 public:
  SplitAdjacency(const Graph& g, const BVector& b) : g_(g), first_(g.num_vertices() + 1, 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      first_[static_cast<std::size_t>(v) + 1] = first_[static_cast<std::size_t>(v)] + static_cast<int>(b[v]);
    }
    original_.resize(static_cast<std::size_t>(first_.back()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (int c = first(v); c < first(v + 1); ++c) original_[static_cast<std::size_t>(c)] = v;
    }
  }

  int size() const { return first_.back(); }
  int first(Vertex v) const { return first_[static_cast<std::size_t>(v)]; }
  Vertex original(int copy) const { return original_[static_cast<std::size_t>(copy)]; }

  template <class F>
  bool for_each_neighbor(int copy, F&& f) const {
    for (Vertex u : g_.neighbors(original(copy))) {
      for (int c = first(u); c < first(u + 1); ++c) {
        if (f(c)) return true;
      }
    }
    return false;
  }

 private:
  const Graph& g_;
  std::vector<int> first_;
  std::vector<Vertex> original_;
};

// Dinic max-flow, used only for the fractional warm start.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  int add_arc(int from, int to, Count capacity) {
    arcs_.push_back({to, head_[static_cast<std::size_t>(from)], capacity});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    return static_cast<int>(arcs_.size()) - 2;
  }

  // Flow currently on the forward arc `id`.
  Count flow(int id) const { return arcs_[static_cast<std::size_t>(id) ^ 1].capacity; }

  Count run(int source, int sink) {
    Count total = 0;
    while (levels(source, sink)) {
      cursor_ = head_;
      while (Count pushed = push(source, sink, std::numeric_limits<Count>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
    Count capacity;
  };

  bool levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::vector<int> queue{source};
    level_[static_cast<std::size_t>(source)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.capacity > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  Count push(int v, int sink, Count limit) {
    if (v == sink) return limit;
    for (int& a = cursor_[static_cast<std::size_t>(v)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.capacity <= 0 ||
          level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      if (Count pushed = push(arc.to, sink, std::min(limit, arc.capacity))) {
        arc.capacity -= pushed;
        arcs_[static_cast<std::size_t>(a) ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

// Integral b-matching obtained by rounding down a maximum fractional one
// (flow on the bipartite double cover). Leaves only a small residual for
// the blossom algorithm.
std::vector<Count> fractional_floor(const Graph& g, const BVector& b) {
  const int n = g.num_vertices();
  const int source = 2 * n;
  const int sink = 2 * n + 1;
  MaxFlow flow(2 * n + 2);
  const Count unbounded = std::max<Count>(b.total(), 1);
  for (Vertex v = 0; v < n; ++v) {
    flow.add_arc(source, v, b[v]);
    flow.add_arc(n + v, sink, b[v]);
  }
  std::vector<std::pair<int, int>> arcs;
  for (const Edge& e : g.edges()) {
    arcs.emplace_back(flow.add_arc(e.u, n + e.v, unbounded), flow.add_arc(e.v, n + e.u, unbounded));
  }
  flow.run(source, sink);
  std::vector<Count> x(static_cast<std::size_t>(g.num_edges()));
  for (int id = 0; id < g.num_edges(); ++id) {
    const auto [forward, backward] = arcs[static_cast<std::size_t>(id)];
    x[static_cast<std::size_t>(id)] = (flow.flow(forward) + flow.flow(backward)) / 2;
  }
  return x;
}

void check_demand(const Graph& g, const BVector& b) {
  if (b.size() != g.num_vertices()) {
    throw InvalidInput("b-vector has " + std::to_string(b.size()) + " entries for " +
                       std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

void check_expansion_budget(const Graph& g, const BVector& b, const ExpansionBudget& budget) {
  check_demand(g, b);
  const Count copies = b.total();
  if (copies > budget.max_copies) {
    throw BudgetExceeded("vertex-split expansion needs " + std::to_string(copies) +
                         " copies, budget is " + std::to_string(budget.max_copies));
  }
  Count edges = 0;
  for (const Edge& e : g.edges()) edges += b[e.u] * b[e.v];
  if (edges > budget.max_edges) {
    throw BudgetExceeded("vertex-split expansion needs " + std::to_string(edges) +
                         " edges (" + std::to_string(copies) + " copies), budget is " +
                         std::to_string(budget.max_edges));
  }
}

ExpandedGraph expand_graph(const Graph& g, const BVector& b, const ExpansionBudget& budget) {
  check_expansion_budget(g, b, budget);
  ExpandedGraph out;
  out.first_copy.resize(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out.first_copy[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
    for (Count k = 0; k < b[v]; ++k) out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex cu = out.first_copy[static_cast<std::size_t>(e.u)];
    const Vertex cv = out.first_copy[static_cast<std::size_t>(e.v)];
    for (Count i = 0; i < b[e.u]; ++i) {
      for (Count j = 0; j < b[e.v]; ++j) {
        edges.push_back({cu + static_cast<Vertex>(i), cv + static_cast<Vertex>(j)});
      }
    }
  }
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

ExpansionSolution solve_expansion(const Graph& g, const BVector& b, const ExpansionBudget& budget) {
  check_expansion_budget(g, b, budget);
  SplitAdjacency split(g, b);
  BlossomMatcher<SplitAdjacency> matcher(split);

  const auto warm = fractional_floor(g, b);
  std::vector<int> next_free(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) next_free[static_cast<std::size_t>(v)] = split.first(v);
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    for (Count k = 0; k < warm[static_cast<std::size_t>(id)]; ++k) {
      matcher.match(next_free[static_cast<std::size_t>(e.u)]++, next_free[static_cast<std::size_t>(e.v)]++);
    }
  }
  matcher.maximize();

  ExpansionSolution out;
  const auto& mate = matcher.mate();
  for (int c = 0; c < split.size(); ++c) out.exposed += mate[static_cast<std::size_t>(c)] < 0;

  if (out.exposed == 0) {
    IncrementPlan plan;
    for (int c = 0; c < split.size(); ++c) {
      const int m = mate[static_cast<std::size_t>(c)];
      if (m > c) plan.add(*g.find_edge(split.original(c), split.original(m)));
    }
    out.plan = std::move(plan);
    return out;
  }

  const auto labels = matcher.gallai_edmonds_labels();
  std::vector<bool> in_barrier(static_cast<std::size_t>(g.num_vertices()), false);
  for (int c = 0; c < split.size(); ++c) {
    if (labels[static_cast<std::size_t>(c)] == MatchLabel::kOdd) {
      in_barrier[static_cast<std::size_t>(split.original(c))] = true;
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_barrier[static_cast<std::size_t>(v)] || b[v] == 0) out.barrier.push_back(v);
  }
  return out;
}

std::optional<IncrementPlan> solve_bmatching_expansion(const Graph& g, const BVector& b,
                                                       const ExpansionBudget& budget) {
  return solve_expansion(g, b, budget).plan;
}

}  // namespace nodebal
