#include "nodebal/plan.h"

#include <string>

namespace nodebal {

void IncrementPlan::add(int edge_id, Count count) {
  if (count < 0) throw InvalidInput("negative multiplicity");
  if (edge_id < 0) throw InvalidInput("negative edge id");
  if (count == 0) return;
  entries_[edge_id] += count;
}

Count IncrementPlan::count(int edge_id) const {
  auto it = entries_.find(edge_id);
  return it == entries_.end() ? 0 : it->second;
}

Count IncrementPlan::total_steps() const {
  Count total = 0;
  for (const auto& [id, count] : entries_) total += count;
  return total;
}

IncrementPlan IncrementPlan::merged(const IncrementPlan& other) const {
  IncrementPlan out = *this;
  for (const auto& [id, count] : other.entries_) out.add(id, count);
  return out;
}

namespace {

void check_ids(int num_edges, const IncrementPlan& plan) {
  if (!plan.empty() && plan.entries().rbegin()->first >= num_edges) {
    throw InvalidInput("plan names edge " + std::to_string(plan.entries().rbegin()->first) +
                       " but the host has " + std::to_string(num_edges) + " edges");
  }
}

void check_weights(int n, const WeightAssignment& w) {
  if (w.size() != n) {
    throw InvalidInput("weight assignment has " + std::to_string(w.size()) +
                       " entries for " + std::to_string(n) + " vertices");
  }
}

}  // namespace

void validate_plan(const Graph& g, const IncrementPlan& plan) {
  check_ids(g.num_edges(), plan);
}

void validate_plan(const Hypergraph& h, const IncrementPlan& plan) {
  check_ids(h.num_edges(), plan);
}

WeightAssignment apply_plan(const Graph& g, const WeightAssignment& w,
                            const IncrementPlan& plan) {
  check_weights(g.num_vertices(), w);
  validate_plan(g, plan);
  std::vector<Count> out(w.values().begin(), w.values().end());
  for (const auto& [id, count] : plan.entries()) {
    const Edge& e = g.edge(id);
    out[static_cast<std::size_t>(e.u)] += count;
    out[static_cast<std::size_t>(e.v)] += count;
  }
  return WeightAssignment(std::move(out));
}

WeightAssignment apply_plan(const Hypergraph& h, const WeightAssignment& w,
                            const IncrementPlan& plan) {
  check_weights(h.num_vertices(), w);
  validate_plan(h, plan);
  std::vector<Count> out(w.values().begin(), w.values().end());
  for (const auto& [id, count] : plan.entries()) {
    for (Vertex v : h.edge(id)) out[static_cast<std::size_t>(v)] += count;
  }
  return WeightAssignment(std::move(out));
}

}  // namespace nodebal
