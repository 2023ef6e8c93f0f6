#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "nodebal/graph.h"

namespace nodebal {

using VertexMask = std::uint64_t;

inline VertexMask to_mask(const VertexSet& set) {
  VertexMask mask = 0;
  for (Vertex v : set) mask |= VertexMask{1} << v;
  return mask;
}

inline VertexSet to_set(VertexMask mask) {
  VertexSet set;
  while (mask != 0) {
    set.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return set;
}

// Visits every subset of {0, ..., n-1} ordered by size, then
// lexicographically by sorted member list. Stops early once `visit`
// returns true; the return value says whether that happened. n <= 63.
template <class Visit>
bool for_each_subset_canonical(int n, Visit&& visit) {
  std::vector<int> index;
  for (int k = 0; k <= n; ++k) {
    index.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) index[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexMask mask = 0;
      for (int i : index) mask |= VertexMask{1} << i;
      if (visit(mask)) return true;
      int i = k - 1;
      while (i >= 0 && index[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++index[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        index[static_cast<std::size_t>(j)] = index[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return false;
}

// Neighbor bitmask per vertex.
inline std::vector<VertexMask> adjacency_masks(const Graph& g) {
  std::vector<VertexMask> masks(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) {
    masks[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
    masks[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
  }
  return masks;
}

}  // namespace nodebal
