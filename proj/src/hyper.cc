#include "nodebal/hyper.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

namespace {

// Depth-first assignment of edge multiplicities for one target.
class MultiplicitySearch {
 public:
  MultiplicitySearch(const Hypergraph& h, long long& nodes, long long max_nodes)
      : h_(h), nodes_(nodes), max_nodes_(max_nodes) {
    order_.resize(static_cast<std::size_t>(h.num_edges()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const auto& ea = h.edge(a);
      const auto& eb = h.edge(b);
      if (ea.size() != eb.size()) return ea.size() > eb.size();
      return ea < eb;
    });
    last_.assign(static_cast<std::size_t>(h.num_vertices()), -1);
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
      for (Vertex v : h.edge(order_[static_cast<std::size_t>(i)])) last_[static_cast<std::size_t>(v)] = i;
    }
    suffix_gcd_.assign(order_.size() + 1, 0);
    for (int i = static_cast<int>(order_.size()) - 1; i >= 0; --i) {
      suffix_gcd_[static_cast<std::size_t>(i)] =
          std::gcd(suffix_gcd_[static_cast<std::size_t>(i) + 1],
                   static_cast<Count>(h.edge(order_[static_cast<std::size_t>(i)]).size()));
    }
  }

  std::optional<IncrementPlan> run(const WeightAssignment& w, Count beta) {
    residual_.resize(static_cast<std::size_t>(h_.num_vertices()));
    remaining_ = 0;
    for (Vertex v = 0; v < h_.num_vertices(); ++v) {
      residual_[static_cast<std::size_t>(v)] = beta - w[v];
      remaining_ += beta - w[v];
      if (last_[static_cast<std::size_t>(v)] < 0 && beta != w[v]) return std::nullopt;
    }
    chosen_.assign(order_.size(), 0);
    if (!descend(0)) return std::nullopt;
    IncrementPlan plan;
    for (std::size_t i = 0; i < order_.size(); ++i) plan.add(order_[i], chosen_[i]);
    return plan;
  }

 private:
  bool descend(std::size_t i) {
    if (remaining_ == 0) return true;
    if (i == order_.size()) return false;
    if (++nodes_ > max_nodes_) {
      throw BudgetExceeded("hypergraph search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    const Count g = suffix_gcd_[i];
    if (g == 0 || remaining_ % g != 0) return false;

    const auto& edge = h_.edge(order_[i]);
    Count upper = residual_[static_cast<std::size_t>(edge.front())];
    std::optional<Count> forced;
    for (Vertex v : edge) {
      const Count r = residual_[static_cast<std::size_t>(v)];
      upper = std::min(upper, r);
      if (last_[static_cast<std::size_t>(v)] == static_cast<int>(i)) {
        // Last chance to cover v: the multiplicity must be exactly r.
        if (forced && *forced != r) return false;
        forced = r;
      }
    }
    Count hi = upper;
    Count lo = 0;
    if (forced) {
      if (*forced > upper) return false;
      hi = lo = *forced;
    }
    const Count size = static_cast<Count>(edge.size());
    for (Count x = hi; x >= lo; --x) {
      for (Vertex v : edge) residual_[static_cast<std::size_t>(v)] -= x;
      remaining_ -= x * size;
      chosen_[i] = x;
      if (descend(i + 1)) return true;
      for (Vertex v : edge) residual_[static_cast<std::size_t>(v)] += x;
      remaining_ += x * size;
    }
    chosen_[i] = 0;
    return false;
  }

  const Hypergraph& h_;
  long long& nodes_;
  long long max_nodes_;
  std::vector<int> order_;
  std::vector<int> last_;
  std::vector<Count> suffix_gcd_;
  std::vector<Count> residual_;
  std::vector<Count> chosen_;
  Count remaining_ = 0;
};

bool cover(const Hypergraph& h, std::vector<bool>& covered, std::vector<int>& chosen, int covered_count) {
  if (covered_count == h.num_vertices()) return true;
  Vertex v = 0;
  while (covered[static_cast<std::size_t>(v)]) ++v;
  for (int id : h.incident(v)) {
    const auto& e = h.edge(id);
    if (std::any_of(e.begin(), e.end(), [&](Vertex x) { return covered[static_cast<std::size_t>(x)]; })) {
      continue;
    }
    for (Vertex x : e) covered[static_cast<std::size_t>(x)] = true;
    chosen.push_back(id);
    if (cover(h, covered, chosen, covered_count + static_cast<int>(e.size()))) return true;
    chosen.pop_back();
    for (Vertex x : e) covered[static_cast<std::size_t>(x)] = false;
  }
  return false;
}

}  // namespace

Count default_beta_cap(const Hypergraph& h, const WeightAssignment& w) {
  return std::max(w.max(), static_cast<Count>(h.num_vertices()) * w.max() * h.max_edge_size());
}

HyperEquateResult hyper_equate(const Hypergraph& h, const WeightAssignment& w,
                               const HyperSearchOptions& options) {
  const int n = h.num_vertices();
  if (w.size() != n) throw InvalidInput("weight assignment does not match the hypergraph");
  HyperEquateResult result;
  result.beta_cap = options.beta_cap.value_or(default_beta_cap(h, w));
  const Count floor = w.max();
  if (result.beta_cap < floor) throw InvalidInput("beta cap is below the largest weight");

  if (auto uniform = is_uniform(w)) {
    result.status = HyperStatus::kFeasible;
    result.beta = *uniform;
    return result;
  }

  // A vertex in no edge keeps its weight, so it pins the target.
  std::optional<Count> pinned;
  for (Vertex v = 0; v < n; ++v) {
    if (!h.incident(v).empty()) continue;
    if ((pinned && *pinned != w[v]) || w[v] != floor) {
      result.status = HyperStatus::kInfeasible;
      result.proof = HyperProof::kFrozenVertex;
      return result;
    }
    pinned = w[v];
  }

  // sum over edges of x_e |e| = n * beta - sum(w) needs a beta with
  // n * beta = sum(w) modulo the gcd of the edge sizes.
  Count size_gcd = 0;
  for (const auto& e : h.edges()) size_gcd = std::gcd(size_gcd, static_cast<Count>(e.size()));
  const Count total = w.total();
  const auto divisible = [&](Count beta) {
    const Count need = static_cast<Count>(n) * beta - total;
    return size_gcd == 0 ? need == 0 : need % size_gcd == 0;
  };
  const bool any_divisible =
      size_gcd != 0 && total % std::gcd(static_cast<Count>(n), size_gcd) == 0;
  if (!any_divisible || (pinned && !divisible(*pinned))) {
    result.status = HyperStatus::kInfeasible;
    result.proof = HyperProof::kDivisibility;
    return result;
  }

  long long nodes = 0;
  MultiplicitySearch search(h, nodes, options.max_nodes);
  const Count last = pinned ? *pinned : result.beta_cap;
  for (Count beta = floor; beta <= last; ++beta) {
    if (!divisible(beta)) continue;
    if (auto plan = search.run(w, beta)) {
      result.status = HyperStatus::kFeasible;
      result.beta = beta;
      result.plan = std::move(*plan);
      return result;
    }
  }
  if (pinned) {
    result.status = HyperStatus::kInfeasible;
    result.proof = HyperProof::kFrozenVertex;
  }
  return result;
}

ReductionOutput reduce_pm_to_equate(const Hypergraph& h) {
  const int n = h.num_vertices();
  std::vector<std::vector<Vertex>> edges(h.edges().begin(), h.edges().end());
  edges.push_back({n, n + 1});
  edges.push_back({n + 1, n + 2});
  std::vector<Count> weights(static_cast<std::size_t>(n), 0);
  weights.insert(weights.end(), {1, 1, 1});
  return {Hypergraph(n + 3, std::move(edges)), WeightAssignment(std::move(weights)), {n, n + 1, n + 2}};
}

std::optional<std::vector<int>> hyper_perfect_matching(const Hypergraph& h, int limit) {
  if (h.num_vertices() > limit) {
    throw BudgetExceeded("perfect-matching search over " + std::to_string(h.num_vertices()) +
                         " vertices exceeds the limit of " + std::to_string(limit));
  }
  std::vector<bool> covered(static_cast<std::size_t>(h.num_vertices()), false);
  std::vector<int> chosen;
  if (!cover(h, covered, chosen, 0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace nodebal
