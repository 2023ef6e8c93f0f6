#include "nodebal/oracles.h"

#include <bit>
#include <string>
#include <unordered_set>

#include "nodebal/errors.h"
#include "nodebal/subsets.h"

namespace nodebal::oracles {

namespace {

struct ResidualHash {
  std::size_t operator()(const std::vector<Count>& r) const {
    std::size_t h = 1469598103934665603ull;
    for (Count x : r) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Repeatedly covers the lowest vertex that still needs steps, trying each
// usable incident edge. Residual vectors already shown to be dead ends are
// remembered.
//
// Pruning uses two counting facts about the active graph (vertices with
// residual left, edges between them): each of its components needs an even
// residual total, and for an independent active set X every step at X also
// lands in N(X), so r(X) <= r(N(X)).
class StepSearch {
 public:
  // Largest active set for which all independent subsets are checked; above
  // it only single vertices are.
  static constexpr int kSubsetPruneLimit = 14;

  StepSearch(const Graph& g, long long max_states) : g_(g), max_states_(max_states) {
    if (g.num_vertices() <= 62) adj_ = adjacency_masks(g);
  }

  bool solve(std::vector<Count>& residual, std::vector<int>& steps) {
    int v = 0;
    while (v < g_.num_vertices() && residual[static_cast<std::size_t>(v)] == 0) ++v;
    if (v == g_.num_vertices()) return true;
    if (dead_.contains(residual)) return false;
    if (hopeless(residual)) return remember(residual);

    for (int id : g_.incident(v)) {
      const Edge& e = g_.edge(id);
      const Vertex other = e.u == v ? e.v : e.u;
      if (residual[static_cast<std::size_t>(other)] == 0) continue;
      --residual[static_cast<std::size_t>(v)];
      --residual[static_cast<std::size_t>(other)];
      steps.push_back(id);
      const bool found = solve(residual, steps);
      ++residual[static_cast<std::size_t>(v)];
      ++residual[static_cast<std::size_t>(other)];
      if (found) return true;
      steps.pop_back();
    }
    return remember(residual);
  }

 private:
  bool hopeless(const std::vector<Count>& residual) const {
    const int n = g_.num_vertices();
    if (adj_.empty()) {
      for (Vertex x = 0; x < n; ++x) {
        Count around = 0;
        for (Vertex y : g_.neighbors(x)) around += residual[static_cast<std::size_t>(y)];
        if (residual[static_cast<std::size_t>(x)] > around) return true;
      }
      return false;
    }
    VertexMask active = 0;
    for (Vertex x = 0; x < n; ++x)
      if (residual[static_cast<std::size_t>(x)] > 0) active |= VertexMask{1} << x;
    const auto sum = [&](VertexMask m) {
      Count total = 0;
      for (; m != 0; m &= m - 1) total += residual[static_cast<std::size_t>(std::countr_zero(m))];
      return total;
    };
    const auto reach = [&](VertexMask m) {
      VertexMask out = 0;
      for (; m != 0; m &= m - 1) out |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
      return out & active;
    };

    for (VertexMask left = active; left != 0;) {
      VertexMask component = left & (~left + 1);
      for (VertexMask grown = component | reach(component); grown != component;
           grown = component | reach(component)) {
        component = grown;
      }
      left &= ~component;
      if (sum(component) % 2 != 0) return true;
      if (std::popcount(component) > kSubsetPruneLimit) {
        for (VertexMask m = component; m != 0; m &= m - 1) {
          const VertexMask x = m & (~m + 1);
          if (sum(x) > sum(reach(x))) return true;
        }
        continue;
      }
      for (VertexMask x = component; x != 0; x = (x - 1) & component) {
        const VertexMask nx = reach(x);
        if ((nx & x) == 0 && sum(x) > sum(nx)) return true;
      }
    }
    return false;
  }

  bool remember(const std::vector<Count>& residual) {
    if (static_cast<long long>(dead_.size()) >= max_states_) {
      throw BudgetExceeded("backtracking oracle exceeded " + std::to_string(max_states_) + " states");
    }
    dead_.insert(residual);
    return false;
  }

  const Graph& g_;
  std::vector<VertexMask> adj_;
  long long max_states_;
  std::unordered_set<std::vector<Count>, ResidualHash> dead_;
};

}  // namespace

std::optional<Count> min_beta_scan(const Graph& g, const WeightAssignment& w, int limit) {
  if (w.size() != g.num_vertices()) throw InvalidInput("weight assignment does not match the graph");
  if (auto uniform = is_uniform(w)) return *uniform;
  if (g.num_vertices() > limit) {
    throw BudgetExceeded("scan oracle enumerates subsets of at most " + std::to_string(limit) +
                         " vertices, got " + std::to_string(g.num_vertices()));
  }
  const Count n = g.num_vertices();
  const Count total = w.total();
  for (Count beta = w.max(); beta <= n * w.max(); ++beta) {
    if ((n * beta - total) % 2 != 0) continue;
    if (!check_tutte_enumeration(g, demand_for_target(w, beta), limit)) return beta;
  }
  return std::nullopt;
}

std::optional<IncrementPlan> equate_backtracking(const Graph& g, const WeightAssignment& w, Count beta,
                                                 const BacktrackLimits& limits) {
  if (w.size() != g.num_vertices()) throw InvalidInput("weight assignment does not match the graph");
  if (beta < w.max()) throw InvalidInput("target is below the largest weight");
  const Count need = static_cast<Count>(g.num_vertices()) * beta - w.total();
  if (need % 2 != 0) return std::nullopt;
  if (g.num_edges() > limits.max_edges) {
    throw BudgetExceeded("backtracking oracle allows " + std::to_string(limits.max_edges) +
                         " edges, got " + std::to_string(g.num_edges()));
  }
  if (beta - w.min() > limits.max_span) {
    throw BudgetExceeded("backtracking oracle allows beta - min w <= " + std::to_string(limits.max_span));
  }
  std::vector<Count> residual(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) residual[static_cast<std::size_t>(v)] = beta - w[v];
  std::vector<int> steps;
  StepSearch search(g, limits.max_states);
  if (!search.solve(residual, steps)) return std::nullopt;
  IncrementPlan plan;
  for (int id : steps) plan.add(id);
  return plan;
}

std::optional<Count> min_beta_backtracking(const Graph& g, const WeightAssignment& w, Count max_beta,
                                           const BacktrackLimits& limits) {
  for (Count beta = w.max(); beta <= max_beta; ++beta) {
    if (equate_backtracking(g, w, beta, limits)) return beta;
  }
  return std::nullopt;
}

}  // namespace nodebal::oracles
