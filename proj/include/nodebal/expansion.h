#pragma once

#include <optional>
#include <vector>

#include "nodebal/graph.h"
#include "nodebal/plan.h"
#include "nodebal/weights.h"

namespace nodebal {

struct ExpansionBudget {
  Count max_copies = 50'000;
  Count max_edges = 5'000'000;
};

// Vertex-split graph: b(v) copies of each vertex v, and every copy of u
// joined to every copy of v for each edge {u, v}. Perfect matchings of it
// are exactly the perfect b-matchings of the original.
struct ExpandedGraph {
  Graph graph;
  std::vector<Vertex> original;    // copy -> original vertex
  std::vector<Vertex> first_copy;  // original vertex -> id of its first copy
};

// Throws BudgetExceeded when sum(b) or sum over edges of b(u) b(v) exceeds
// the budget.
void check_expansion_budget(const Graph& g, const BVector& b, const ExpansionBudget& budget);

ExpandedGraph expand_graph(const Graph& g, const BVector& b, const ExpansionBudget& budget = {});

// Result of the maximum matching on the split graph.
struct ExpansionSolution {
  // Contracted perfect matching, when one exists.
  std::optional<IncrementPlan> plan;
  // Barrier mapped back to the original graph: vertices whose copies are
  // in the odd class of the Gallai-Edmonds decomposition, plus all vertices
  // with b(v) = 0. Empty when a plan exists.
  VertexSet barrier;
  // Copies left exposed by a maximum matching.
  Count exposed = 0;
};

ExpansionSolution solve_expansion(const Graph& g, const BVector& b,
                                  const ExpansionBudget& budget = {});

std::optional<IncrementPlan> solve_bmatching_expansion(const Graph& g, const BVector& b,
                                                       const ExpansionBudget& budget = {});

}  // namespace nodebal
