#include "nodebal/equate.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

namespace {

// Floor and ceiling of a / d for d > 0.
Count floor_div(Count a, Count d) { return a >= 0 ? a / d : -((-a + d - 1) / d); }
Count ceil_div(Count a, Count d) { return -floor_div(-a, d); }

Count align_up(Count x, Parity p) { return has_parity(x, p) ? x : x + 1; }
Count align_down(Count x, Parity p) { return has_parity(x, p) ? x : x - 1; }

struct Probe {
  bool feasible = false;
  IncrementPlan plan;
  ViolatingSet witness;
};

Probe probe(const Graph& g, const WeightAssignment& w, Count beta, const EquateOptions& options) {
  BMatchOutcome outcome = perfect_bmatching(g, demand_for_target(w, beta), options);
  Probe out;
  out.feasible = outcome.feasible();
  if (out.feasible) {
    out.plan = outcome.plan();
  } else {
    out.witness = outcome.witness();
  }
  return out;
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

std::vector<Parity> ParitySet::members() const {
  std::vector<Parity> out;
  if (even_) out.push_back(Parity::kEven);
  if (odd_) out.push_back(Parity::kOdd);
  return out;
}

ParitySet admissible_parities(const Graph& g, const WeightAssignment& w) {
  const bool total_even = w.total() % 2 == 0;
  if (g.num_vertices() % 2 == 0) return total_even ? ParitySet(true, true) : ParitySet();
  return total_even ? ParitySet(true, false) : ParitySet(false, true);
}

ConstraintStats constraint_stats(const WeightAssignment& w, const ViolatingSet& set) {
  ConstraintStats stats;
  stats.u_size = static_cast<Count>(set.u.size());
  stats.isolated_size = static_cast<Count>(set.isolated.size());
  for (Vertex v : set.u) stats.u_weight += w[v];
  for (Vertex v : set.isolated) stats.isolated_weight += w[v];
  stats.s_count = set.s_count;
  return stats;
}

ConstraintBound constraint_bound(const ConstraintStats& stats, Parity parity) {
  const Count slope = stats.u_size - stats.isolated_size;
  const Count constant = stats.u_weight - stats.isolated_weight + stats.s_count;
  if (slope == 0) return {constant <= 0 ? BoundKind::kAlways : BoundKind::kNever, std::nullopt};
  if (slope > 0) return {BoundKind::kLowerBound, align_up(ceil_div(constant, slope), parity)};
  return {BoundKind::kUpperBound, align_down(floor_div(-constant, -slope), parity)};
}

BetaBounds initial_bounds(const WeightAssignment& w, Parity parity) {
  const Count top = w.max();
  return {align_up(top, parity), align_down(static_cast<Count>(w.size()) * top, parity)};
}

ParitySearchResult min_beta_for_parity(const Graph& g, const WeightAssignment& w, Parity parity,
                                       const EquateOptions& options) {
  if (w.size() != g.num_vertices()) throw InvalidInput("weight assignment does not match the graph");
  if (!admissible_parities(g, w).contains(parity)) {
    throw InvalidInput(std::string("parity ") + std::string(to_string(parity)) +
                       " is not admissible for this instance");
  }
  ParitySearchResult result;
  auto [alpha, gamma] = initial_bounds(w, parity);
  bool stalled = false;

  while (alpha <= gamma) {
    const Count mid = alpha + 2 * (((gamma - alpha) / 2) / 2);
    ++result.probes;
    Probe p = probe(g, w, mid, options);
    if (p.feasible) {
      result.beta = mid;
      result.plan = std::move(p.plan);
      gamma = mid - 2;
      continue;
    }
    const ConstraintBound bound = constraint_bound(constraint_stats(w, p.witness), parity);
    result.certificate = ParityCertificate{parity, mid, std::move(p.witness)};
    if (bound.kind == BoundKind::kNever) {
      if (result.beta) throw std::logic_error("unsatisfiable set after a feasible probe");
      return result;
    }
    if (bound.kind == BoundKind::kLowerBound && *bound.beta > mid) {
      alpha = std::max(alpha, *bound.beta);
    } else if (bound.kind == BoundKind::kUpperBound && *bound.beta < mid) {
      gamma = std::min(gamma, *bound.beta);
    } else {
      stalled = true;
      break;
    }
  }

  if (stalled) {
    // The certificate did not tighten the interval; scan what is left.
    for (Count beta = alpha; beta <= gamma; beta += 2) {
      ++result.probes;
      Probe p = probe(g, w, beta, options);
      if (p.feasible) {
        result.beta = beta;
        result.plan = std::move(p.plan);
        break;
      }
      result.certificate = ParityCertificate{parity, beta, std::move(p.witness)};
    }
  }
  if (result.beta) result.certificate.reset();
  return result;
}

EquateResult equate(const Graph& g, const WeightAssignment& w, const EquateOptions& options) {
  if (w.size() != g.num_vertices()) throw InvalidInput("weight assignment does not match the graph");
  EquateResult result;
  if (auto uniform = is_uniform(w)) {
    result.beta = *uniform;
    return result;
  }
  const ParitySet parities = admissible_parities(g, w);
  if (parities.empty()) {
    result.reason = InfeasibleReason::kParity;
    return result;
  }
  std::vector<ParityCertificate> certificates;
  for (Parity parity : parities.members()) {
    ParitySearchResult search = min_beta_for_parity(g, w, parity, options);
    if (search.beta) {
      if (!result.beta || *search.beta < *result.beta) {
        result.beta = search.beta;
        result.plan = std::move(search.plan);
      }
    } else if (search.certificate) {
      certificates.push_back(std::move(*search.certificate));
    }
  }
  if (!result.beta) {
    result.reason = InfeasibleReason::kCertificate;
    result.certificates = std::move(certificates);
  }
  return result;
}

}  // namespace nodebal
