#include "nodebal/bmatching.h"

#include <stdexcept>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

BMatchOutcome perfect_bmatching(const Graph& g, const BVector& b, const BMatchOptions& options) {
  ExpansionSolution solution = solve_expansion(g, b, options.budget);
  if (solution.plan) {
    if (!verify_plan_perfect(g, b, *solution.plan)) {
      throw std::logic_error("expansion backend returned an imperfect b-matching");
    }
    return BMatchOutcome(std::move(*solution.plan));
  }

  ViolatingSet candidate = evaluate_tutte_set(g, solution.barrier, b);
  if (candidate.deficiency >= 1) return BMatchOutcome(std::move(candidate));

  if (g.num_vertices() > options.enumeration_limit) {
    throw WitnessUnavailable("no perfect b-matching, and the barrier check failed on a graph with " +
                             std::to_string(g.num_vertices()) + " vertices");
  }
  auto worst = check_tutte_enumeration(g, b, options.enumeration_limit);
  if (!worst) throw std::logic_error("matching backends disagree on feasibility");
  return BMatchOutcome(std::move(*worst));
}

}  // namespace nodebal
