#pragma once

#include <optional>

#include "nodebal/bmatching.h"
#include "nodebal/graph.h"
#include "nodebal/weights.h"

namespace nodebal {

bool is_connected(const Graph& g);

enum class UniversalFailure { kNone, kDisconnected, kEvenOrder, kIsolatedCondition };

// Whether every assignment is equatable on G. On kIsolatedCondition the
// witness U is nonempty and G - U has at least |U| isolated vertices.
struct UniversalVerdict {
  bool verdict = true;
  UniversalFailure failure = UniversalFailure::kNone;
  VertexSet witness;
};

// Fails fast on disconnected graphs and even order; otherwise probes, for
// each vertex v, the perfect b-matching with b(v) = 2n and b(u) = 2n + 1
// elsewhere. Graphs with n <= 1 are universally equatable.
UniversalVerdict universal_equatable(const Graph& g, const BMatchOptions& options = {});

// First nonempty U in canonical order with |I(U)| >= |U|.
std::optional<VertexSet> isolated_condition_enum(const Graph& g, int limit = kDefaultEnumerationLimit);

// Nonempty independent S with |N(S)| <= |S| maximizing |S| - |N(S)|,
// earliest in canonical order on ties. Requires n >= 2 and no isolated
// vertices.
std::optional<VertexSet> independent_set_condition(const Graph& g,
                                                   int limit = kDefaultEnumerationLimit);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

// Two-coloring with the lowest vertex of every component on the left, or
// nullopt when G has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// Throws InvalidInput unless the sides partition V and every edge crosses.
void validate_bipartition(const Graph& g, const Bipartition& part);

bool is_balanced(const WeightAssignment& w, const Bipartition& part);

// Strict Hall condition: |N(X)| > |X| for every nonempty X properly
// contained in one side. The witness, when present, is such an X with
// |N(X)| <= |X|.
struct HallVerdict {
  bool verdict = true;
  std::optional<VertexSet> witness;
};

enum class HallMethod {
  kPairwiseDeletion,  // G - {u, v} has a perfect matching for all u in L, v in R
  kEnumeration,       // by definition, over all subsets of each side
};

HallVerdict strict_hall(const Graph& g, const Bipartition& part,
                        HallMethod method = HallMethod::kPairwiseDeletion);

// Largest side allowed for HallMethod::kEnumeration.
inline constexpr int kHallEnumerationLimit = 20;

// Balanced assignment that no sequence of steps can equate, built from a
// strict Hall violation X: weight 1 on the lowest vertex of X's side
// outside X and on the lowest vertex of N(X) (of the other side when N(X)
// is empty), 0 elsewhere. Throws InvalidInput if X is not a violation or
// the other side is empty.
WeightAssignment hall_witness_assignment(const Graph& g, const Bipartition& part, const VertexSet& x);

}  // namespace nodebal
