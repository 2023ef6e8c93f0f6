#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nodebal/hypergraph.h"
#include "nodebal/plan.h"
#include "nodebal/weights.h"

namespace nodebal {

enum class HyperStatus {
  kFeasible,
  kInfeasibleWithinCap,  // no target up to the cap works
  kInfeasible,           // proven for every target
};

enum class HyperProof {
  kNone,
  kFrozenVertex,  // a vertex in no edge cannot reach the target
  kDivisibility,  // n * beta - sum(w) is never a combination of edge sizes
};

struct HyperEquateResult {
  HyperStatus status = HyperStatus::kInfeasibleWithinCap;
  HyperProof proof = HyperProof::kNone;
  std::optional<Count> beta;
  IncrementPlan plan;
  Count beta_cap = 0;

  bool feasible() const { return status == HyperStatus::kFeasible; }
};

struct HyperSearchOptions {
  // Target cap; nullopt means n * max(w) * max edge size, and at least
  // max(w).
  std::optional<Count> beta_cap;
  // Search nodes allowed across all targets before BudgetExceeded.
  long long max_nodes = 20'000'000;
};

Count default_beta_cap(const Hypergraph& h, const WeightAssignment& w);

// Exhaustive search for the smallest target up to the cap. No polynomial
// algorithm is attempted: the decision problem is NP-complete.
HyperEquateResult hyper_equate(const Hypergraph& h, const WeightAssignment& w,
                               const HyperSearchOptions& options = {});

// Instance whose weights can be equated iff the input has a perfect
// matching: three new weight-1 vertices p, q, r = n, n+1, n+2 joined by the
// edges {p, q} and {q, r}; all original vertices get weight 0.
struct ReductionOutput {
  Hypergraph hypergraph;
  WeightAssignment weights;
  std::array<Vertex, 3> gadget{};
};

ReductionOutput reduce_pm_to_equate(const Hypergraph& h);

inline constexpr int kDefaultMatchingLimit = 24;

// Set of pairwise disjoint edge ids covering every vertex, found by
// covering the lowest uncovered vertex first. Throws BudgetExceeded when
// n > limit.
std::optional<std::vector<int>> hyper_perfect_matching(const Hypergraph& h,
                                                       int limit = kDefaultMatchingLimit);

}  // namespace nodebal
