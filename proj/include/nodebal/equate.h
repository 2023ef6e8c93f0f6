#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nodebal/bmatching.h"
#include "nodebal/graph.h"
#include "nodebal/plan.h"
#include "nodebal/weights.h"

namespace nodebal {

enum class Parity { kEven, kOdd };

std::string_view to_string(Parity p);
inline bool has_parity(Count value, Parity p) {
  return (value % 2 == 0) == (p == Parity::kEven);
}

// Target parities p for which some beta of parity p has n * beta = sum(w)
// (mod 2). Every positive step adds 2 to the total weight.
class ParitySet {
 public:
  ParitySet() = default;
  ParitySet(bool even, bool odd) : even_(even), odd_(odd) {}

  bool contains(Parity p) const { return p == Parity::kEven ? even_ : odd_; }
  bool empty() const { return !even_ && !odd_; }
  // Members in the order even, odd.
  std::vector<Parity> members() const;

  friend bool operator==(const ParitySet&, const ParitySet&) = default;

 private:
  bool even_ = false;
  bool odd_ = false;
};

ParitySet admissible_parities(const Graph& g, const WeightAssignment& w);

// Inputs of the Tutte inequality at one subset U, written as a linear
// inequality in the target beta:
//   (|U| - |I(U)|) * beta >= w(U) - w(I(U)) + S(G - U),
// where S is evaluated for a fixed parity of beta.
struct ConstraintStats {
  Count u_size = 0;
  Count isolated_size = 0;
  Count u_weight = 0;
  Count isolated_weight = 0;
  Count s_count = 0;
};

ConstraintStats constraint_stats(const WeightAssignment& w, const ViolatingSet& set);

enum class BoundKind {
  kAlways,      // satisfied for every beta
  kNever,       // satisfied for no beta
  kLowerBound,  // satisfied iff beta >= bound
  kUpperBound,  // satisfied iff beta <= bound
};

struct ConstraintBound {
  BoundKind kind = BoundKind::kAlways;
  // Parity-aligned bound for kLowerBound / kUpperBound.
  std::optional<Count> beta;

  friend bool operator==(const ConstraintBound&, const ConstraintBound&) = default;
};

ConstraintBound constraint_bound(const ConstraintStats& stats, Parity parity);

// Search interval [alpha, gamma] for beta, both ends of the fixed parity.
struct BetaBounds {
  Count alpha = 0;
  Count gamma = 0;
};

// Initial interval: max w rounded up, n * max w rounded down, to the parity.
BetaBounds initial_bounds(const WeightAssignment& w, Parity parity);

// A violating set that refuted the probe target `beta`.
struct ParityCertificate {
  Parity parity = Parity::kEven;
  Count beta = 0;
  ViolatingSet set;
};

struct ParitySearchResult {
  std::optional<Count> beta;  // smallest feasible target of this parity
  IncrementPlan plan;
  std::optional<ParityCertificate> certificate;  // last refuting set when infeasible
  int probes = 0;
};

using EquateOptions = BMatchOptions;

// Binary search for the smallest feasible beta of one parity. Feasible
// probes lower gamma; refuted probes move alpha or gamma to the bound
// implied by the violating set, or end the search when that set can never
// be satisfied.
ParitySearchResult min_beta_for_parity(const Graph& g, const WeightAssignment& w, Parity parity,
                                       const EquateOptions& options = {});

enum class InfeasibleReason { kNone, kParity, kCertificate };

struct EquateResult {
  std::optional<Count> beta;  // set iff equatable
  IncrementPlan plan;         // smallest equating multiset when equatable
  InfeasibleReason reason = InfeasibleReason::kNone;
  std::vector<ParityCertificate> certificates;  // one per admissible parity

  bool feasible() const { return beta.has_value(); }
};

// Decides equatability and returns the minimum target with its plan. The
// plan has (n * beta - sum(w)) / 2 steps, so the minimum target also gives
// the smallest multiset of edges.
EquateResult equate(const Graph& g, const WeightAssignment& w, const EquateOptions& options = {});

}  // namespace nodebal
