#pragma once

#include <optional>

#include "nodebal/graph.h"
#include "nodebal/plan.h"
#include "nodebal/weights.h"

namespace nodebal {

inline constexpr int kDefaultEnumerationLimit = 20;

// A subset U at which the Tutte b-matching condition
//   b(U) >= b(I(U)) + S(G - U)
// fails. deficiency = b(I(U)) + S(G - U) - b(U) >= 1.
struct ViolatingSet {
  VertexSet u;
  VertexSet isolated;
  Count s_count = 0;
  Count deficiency = 0;

  friend bool operator==(const ViolatingSet&, const ViolatingSet&) = default;
};

// Vertices outside U whose neighbors all lie in U. Includes vertices that
// are isolated in G itself.
VertexSet isolated_vertices(const Graph& g, const VertexSet& u);

// Components of G - U with at least two vertices and odd total b.
Count s_count(const Graph& g, const VertexSet& u, const BVector& b);

// b(I(U)) + S(G - U) - b(U). Positive means the condition fails at U.
Count tutte_deficiency(const Graph& g, const VertexSet& u, const BVector& b);

// Recomputes all fields of a ViolatingSet for U from scratch. The returned
// deficiency may be <= 0 when U does not actually violate the condition.
ViolatingSet evaluate_tutte_set(const Graph& g, const VertexSet& u, const BVector& b);

// Checks the condition on all 2^n subsets in canonical order (size, then
// lexicographic). Returns nullopt when every subset passes; otherwise the
// violating set of maximum deficiency, earliest in canonical order on ties.
// Throws BudgetExceeded when n > limit.
std::optional<ViolatingSet> check_tutte_enumeration(const Graph& g, const BVector& b,
                                                    int limit = kDefaultEnumerationLimit);

// True iff every vertex v is covered exactly b(v) times by the plan.
bool verify_plan_perfect(const Graph& g, const BVector& b, const IncrementPlan& plan);

}  // namespace nodebal
