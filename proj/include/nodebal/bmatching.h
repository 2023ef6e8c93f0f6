#pragma once

#include <variant>

#include "nodebal/expansion.h"
#include "nodebal/tutte.h"

namespace nodebal {

struct BMatchOptions {
  ExpansionBudget budget;
  // Largest n for the subset-enumeration fallback.
  int enumeration_limit = kDefaultEnumerationLimit;
};

// Either a perfect b-matching or a verified violating set.
class BMatchOutcome {
 public:
  explicit BMatchOutcome(IncrementPlan plan) : value_(std::move(plan)) {}
  explicit BMatchOutcome(ViolatingSet witness) : value_(std::move(witness)) {}

  bool feasible() const { return std::holds_alternative<IncrementPlan>(value_); }
  const IncrementPlan& plan() const { return std::get<IncrementPlan>(value_); }
  const ViolatingSet& witness() const { return std::get<ViolatingSet>(value_); }

 private:
  std::variant<IncrementPlan, ViolatingSet> value_;
};

// Decides whether G has a perfect b-matching using the vertex-split
// matching backend. Infeasible outcomes carry the barrier read off the
// Gallai-Edmonds decomposition, re-checked with tutte_deficiency; if that
// check fails the enumeration backend supplies the witness instead, and
// WitnessUnavailable is thrown when n is above options.enumeration_limit.
BMatchOutcome perfect_bmatching(const Graph& g, const BVector& b, const BMatchOptions& options = {});

}  // namespace nodebal
