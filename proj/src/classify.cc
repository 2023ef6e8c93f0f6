#include "nodebal/classify.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "nodebal/blossom.h"
#include "nodebal/errors.h"
#include "nodebal/subsets.h"
#include "nodebal/tutte.h"

namespace nodebal {

namespace {

void check_limit(int n, int limit, const char* what) {
  if (n > limit || n > 62) {
    throw BudgetExceeded(std::string(what) + " over " + std::to_string(n) +
                         " vertices exceeds the limit of " + std::to_string(limit));
  }
}

VertexMask full_mask(int n) { return n == 0 ? 0 : (~VertexMask{0} >> (64 - n)); }

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool violates_strict_hall(const Graph& g, const Bipartition& part, const VertexSet& x) {
  if (x.empty() || !std::is_sorted(x.begin(), x.end()) ||
      std::adjacent_find(x.begin(), x.end()) != x.end()) {
    return false;
  }
  const bool in_left = is_subset(x, part.left);
  const bool in_right = is_subset(x, part.right);
  if (!in_left && !in_right) return false;
  const VertexSet& side = in_left ? part.left : part.right;
  if (x.size() >= side.size()) return false;
  return neighborhood(g, x).size() <= x.size();
}

// First nonempty proper X of `side` (canonical order over positions in
// `side`) with |N(X)| <= |X|.
std::optional<VertexSet> enumerate_side(const std::vector<VertexMask>& adj, const VertexSet& side) {
  const int k = static_cast<int>(side.size());
  std::optional<VertexSet> found;
  for_each_subset_canonical(k, [&](VertexMask positions) {
    const int size = std::popcount(positions);
    if (size == 0 || size == k) return false;
    VertexMask reach = 0;
    VertexSet x;
    for (VertexMask m = positions; m != 0; m &= m - 1) {
      const Vertex v = side[static_cast<std::size_t>(std::countr_zero(m))];
      x.push_back(v);
      reach |= adj[static_cast<std::size_t>(v)];
    }
    if (std::popcount(reach) <= size) {
      found = std::move(x);
      return true;
    }
    return false;
  });
  return found;
}

HallVerdict strict_hall_enumeration(const Graph& g, const Bipartition& part) {
  check_limit(static_cast<int>(std::max(part.left.size(), part.right.size())),
              kHallEnumerationLimit, "strict Hall enumeration");
  check_limit(g.num_vertices(), 62, "strict Hall enumeration");
  const auto adj = adjacency_masks(g);
  for (const VertexSet* side : {&part.left, &part.right}) {
    if (auto x = enumerate_side(adj, *side)) return {false, std::move(x)};
  }
  return {true, std::nullopt};
}

// Hall-deficient subset of the left side of g - {u, v}, from a maximum
// matching that leaves some left vertex exposed.
VertexSet deficient_left_set(const InducedSubgraph& sub, const std::vector<bool>& is_left,
                             const std::vector<int>& mate) {
  const Graph& h = sub.graph;
  std::vector<bool> seen(static_cast<std::size_t>(h.num_vertices()), false);
  std::vector<Vertex> queue;
  for (Vertex x = 0; x < h.num_vertices(); ++x) {
    if (is_left[static_cast<std::size_t>(sub.original[static_cast<std::size_t>(x)])] &&
        mate[static_cast<std::size_t>(x)] < 0) {
      seen[static_cast<std::size_t>(x)] = true;
      queue.push_back(x);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    for (Vertex y : h.neighbors(x)) {
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      const int m = mate[static_cast<std::size_t>(y)];
      if (m >= 0 && !seen[static_cast<std::size_t>(m)]) {
        seen[static_cast<std::size_t>(m)] = true;
        queue.push_back(m);
      }
    }
  }
  VertexSet x;
  for (Vertex v : queue) x.push_back(sub.original[static_cast<std::size_t>(v)]);
  std::sort(x.begin(), x.end());
  return x;
}

HallVerdict strict_hall_pairwise(const Graph& g, const Bipartition& part) {
  const std::size_t l = part.left.size();
  const std::size_t r = part.right.size();
  if (l <= 1 && r <= 1) return {true, std::nullopt};
  if (l != r) {
    // The larger side has a proper subset at least as large as the other
    // side, and its neighborhood lies in the other side.
    const VertexSet& big = l > r ? part.left : part.right;
    const std::size_t take = std::max<std::size_t>(std::min(l, r), 1);
    return {false, VertexSet(big.begin(), big.begin() + static_cast<std::ptrdiff_t>(take))};
  }
  std::vector<bool> is_left(static_cast<std::size_t>(g.num_vertices()), false);
  for (Vertex v : part.left) is_left[static_cast<std::size_t>(v)] = true;
  const int expected = static_cast<int>(l) - 1;
  for (Vertex u : part.left) {
    for (Vertex v : part.right) {
      const InducedSubgraph sub = remove_vertices(g, {std::min(u, v), std::max(u, v)});
      const auto mate = maximum_matching(sub.graph);
      const int size = static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int m) { return m >= 0; })) / 2;
      if (size == expected) continue;
      VertexSet x = deficient_left_set(sub, is_left, mate);
      if (violates_strict_hall(g, part, x)) return {false, std::move(x)};
      HallVerdict fallback = strict_hall_enumeration(g, part);
      if (fallback.verdict) throw std::logic_error("strict Hall methods disagree");
      return fallback;
    }
  }
  return {true, std::nullopt};
}

}  // namespace

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

UniversalVerdict universal_equatable(const Graph& g, const BMatchOptions& options) {
  const int n = g.num_vertices();
  if (n <= 1) return {};
  if (!is_connected(g)) return {false, UniversalFailure::kDisconnected, {}};
  if (n % 2 == 0) return {false, UniversalFailure::kEvenOrder, {}};
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Count> probe(static_cast<std::size_t>(n), 2 * static_cast<Count>(n) + 1);
    probe[static_cast<std::size_t>(v)] = 2 * static_cast<Count>(n);
    BMatchOutcome outcome = perfect_bmatching(g, BVector(std::move(probe)), options);
    if (outcome.feasible()) continue;
    const VertexSet& u = outcome.witness().u;
    if (!u.empty() && isolated_vertices(g, u).size() >= u.size()) {
      return {false, UniversalFailure::kIsolatedCondition, u};
    }
    if (n > options.enumeration_limit) {
      throw WitnessUnavailable("probe infeasible but its violating set is not an isolated-vertex witness");
    }
    auto found = isolated_condition_enum(g, options.enumeration_limit);
    if (!found) throw std::logic_error("probe infeasible but no isolated-vertex witness exists");
    return {false, UniversalFailure::kIsolatedCondition, std::move(*found)};
  }
  return {};
}

std::optional<VertexSet> isolated_condition_enum(const Graph& g, int limit) {
  const int n = g.num_vertices();
  check_limit(n, limit, "isolated-vertex enumeration");
  const auto adj = adjacency_masks(g);
  const VertexMask all = full_mask(n);
  std::optional<VertexSet> found;
  for_each_subset_canonical(n, [&](VertexMask u) {
    if (u == 0) return false;
    const VertexMask rest = all & ~u;
    int isolated = 0;
    for (VertexMask m = rest; m != 0; m &= m - 1) {
      isolated += (adj[static_cast<std::size_t>(std::countr_zero(m))] & rest) == 0;
    }
    if (isolated >= std::popcount(u)) {
      found = to_set(u);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<VertexSet> independent_set_condition(const Graph& g, int limit) {
  const int n = g.num_vertices();
  if (n < 2) throw InvalidInput("independent-set condition needs at least two vertices");
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw InvalidInput("independent-set condition needs a graph without isolated vertices");
    }
  }
  check_limit(n, limit, "independent-set enumeration");
  const auto adj = adjacency_masks(g);
  std::optional<VertexSet> found;
  int best_surplus = -1;
  for_each_subset_canonical(n, [&](VertexMask s) {
    if (s == 0) return false;
    VertexMask reach = 0;
    for (VertexMask m = s; m != 0; m &= m - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(m))];
    if ((reach & s) != 0) return false;
    const int surplus = std::popcount(s) - std::popcount(reach);
    if (surplus > best_surplus) {
      best_surplus = surplus;
      found = to_set(s);
    }
    return false;
  });
  return found;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = queue[i];
      for (Vertex u : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(u)] < 0) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition part;
  for (Vertex v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? part.left : part.right).push_back(v);
  return part;
}

void validate_bipartition(const Graph& g, const Bipartition& part) {
  std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), -1);
  auto place = [&](const VertexSet& vs, int label) {
    for (Vertex v : vs) {
      if (v < 0 || v >= g.num_vertices()) throw InvalidInput("bipartition names a vertex outside the graph");
      if (side[static_cast<std::size_t>(v)] >= 0) throw InvalidInput("bipartition sides overlap");
      side[static_cast<std::size_t>(v)] = label;
    }
  };
  place(part.left, 0);
  place(part.right, 1);
  if (std::find(side.begin(), side.end(), -1) != side.end()) {
    throw InvalidInput("bipartition does not cover every vertex");
  }
  if (!std::is_sorted(part.left.begin(), part.left.end()) ||
      !std::is_sorted(part.right.begin(), part.right.end())) {
    throw InvalidInput("bipartition sides must be sorted");
  }
  for (const Edge& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} does not cross the bipartition");
    }
  }
}

bool is_balanced(const WeightAssignment& w, const Bipartition& part) {
  Count left = 0;
  Count right = 0;
  for (Vertex v : part.left) left += w[v];
  for (Vertex v : part.right) right += w[v];
  return left == right;
}

HallVerdict strict_hall(const Graph& g, const Bipartition& part, HallMethod method) {
  validate_bipartition(g, part);
  return method == HallMethod::kEnumeration ? strict_hall_enumeration(g, part)
                                            : strict_hall_pairwise(g, part);
}

WeightAssignment hall_witness_assignment(const Graph& g, const Bipartition& part, const VertexSet& x) {
  validate_bipartition(g, part);
  if (!violates_strict_hall(g, part, x)) {
    throw InvalidInput("X does not violate the strict Hall condition");
  }
  const bool in_left = is_subset(x, part.left);
  const VertexSet& side = in_left ? part.left : part.right;
  const VertexSet& other = in_left ? part.right : part.left;
  VertexSet rest;
  std::set_difference(side.begin(), side.end(), x.begin(), x.end(), std::back_inserter(rest));
  const VertexSet reach = neighborhood(g, x);
  if (reach.empty() && other.empty()) {
    throw InvalidInput("no balanced counterexample exists when one side is empty");
  }
  WeightAssignment w = WeightAssignment::zeros(g.num_vertices());
  w.set(rest.front(), 1);
  w.set(reach.empty() ? other.front() : reach.front(), 1);
  return w;
}

}  // namespace nodebal
