#pragma once

#include <optional>

#include "nodebal/graph.h"
#include "nodebal/plan.h"
#include "nodebal/tutte.h"
#include "nodebal/weights.h"

// Deliberately naive reference solvers used to cross-check the main
// algorithms. Neither shares code with the matching backend.
namespace nodebal::oracles {

// Smallest target beta in [max w, n * max w] of admissible parity at which
// subset enumeration finds no Tutte violation. Uniform input returns its
// value directly.
std::optional<Count> min_beta_scan(const Graph& g, const WeightAssignment& w,
                                   int limit = kDefaultEnumerationLimit);

struct BacktrackLimits {
  int max_edges = 12;
  Count max_span = 12;         // beta - min w
  long long max_states = 2'000'000;
};

// Exhaustive search for edge multiplicities with sum over edges at v of
// x_e = beta - w(v). Never consults the Tutte condition.
std::optional<IncrementPlan> equate_backtracking(const Graph& g, const WeightAssignment& w, Count beta,
                                                 const BacktrackLimits& limits = {});

// Smallest beta in [max w, max_beta] accepted by equate_backtracking.
std::optional<Count> min_beta_backtracking(const Graph& g, const WeightAssignment& w, Count max_beta,
                                           const BacktrackLimits& limits = {});

}  // namespace nodebal::oracles
