#pragma once

#include <map>

#include "nodebal/graph.h"
#include "nodebal/hypergraph.h"
#include "nodebal/weights.h"

namespace nodebal {

// Multiset of edges: edge id -> number of positive steps on that edge.
// Steps commute, so the multiset is the whole balancing sequence. Zero
// multiplicities are never stored.
class IncrementPlan {
 public:
  void add(int edge_id, Count count = 1);

  Count count(int edge_id) const;
  const std::map<int, Count>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Number of positive steps (total multiplicity).
  Count total_steps() const;

  // Pointwise multiplicity sum.
  IncrementPlan merged(const IncrementPlan& other) const;

  friend bool operator==(const IncrementPlan&, const IncrementPlan&) = default;

 private:
  std::map<int, Count> entries_;
};

// Throws InvalidInput if the plan names an edge the host does not have.
void validate_plan(const Graph& g, const IncrementPlan& plan);
void validate_plan(const Hypergraph& h, const IncrementPlan& plan);

// w'(v) = w(v) + sum of plan(e) over edges e containing v.
WeightAssignment apply_plan(const Graph& g, const WeightAssignment& w,
                            const IncrementPlan& plan);
WeightAssignment apply_plan(const Hypergraph& h, const WeightAssignment& w,
                            const IncrementPlan& plan);

}  // namespace nodebal
