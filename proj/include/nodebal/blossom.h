#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nodebal/graph.h"

namespace nodebal {

// Vertex classes of the Gallai-Edmonds decomposition, read off the
// alternating forest grown from all exposed vertices of a maximum matching:
// even = D (missed by some maximum matching), odd = A (neighbors of D
// outside D), unreached = C.
enum class MatchLabel : std::int8_t { kUnreached = -1, kEven = 0, kOdd = 1 };

// Exact maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm with union-find blossom bases).
//
// Adjacency must provide
//   int size() const;
//   template <class F> bool for_each_neighbor(int v, F&& f) const;
// where for_each_neighbor stops and returns true as soon as f returns true.
// This lets callers run on implicit graphs such as vertex-split expansions.
//
// Per-search state is reset lazily, so a search costs time proportional to
// the part of the graph it reaches.
template <class Adjacency>
class BlossomMatcher {
 public:
  static constexpr int kNone = -1;

  explicit BlossomMatcher(const Adjacency& adjacency)
      : adj_(adjacency),
        n_(adjacency.size()),
        mate_(static_cast<std::size_t>(n_), kNone),
        label_(static_cast<std::size_t>(n_), MatchLabel::kUnreached),
        parent_(static_cast<std::size_t>(n_), kNone),
        base_(static_cast<std::size_t>(n_), kNone),
        epoch_of_(static_cast<std::size_t>(n_), 0),
        aux_(static_cast<std::size_t>(n_), 0) {}

  // Seeds the matching with the edge {a, b}. Both must be exposed, and the
  // caller guarantees they are adjacent.
  void match(int a, int b) {
    if (mate_[idx(a)] != kNone || mate_[idx(b)] != kNone || a == b) {
      throw std::logic_error("seed pair is not a valid matching edge");
    }
    mate_[idx(a)] = b;
    mate_[idx(b)] = a;
  }

  // Grows the matching to maximum cardinality and returns its size. A
  // vertex whose search fails stays exposed in every later matching, so one
  // pass over the vertices suffices.
  int maximize() {
    for (int v = 0; v < n_; ++v) {
      if (mate_[idx(v)] == kNone) {
        const int root[1] = {v};
        search(root);
      }
    }
    return size();
  }

  int size() const {
    int matched = 0;
    for (int m : mate_) matched += m != kNone;
    return matched / 2;
  }

  const std::vector<int>& mate() const { return mate_; }

  // Labels of the alternating forest rooted at every exposed vertex. Only
  // meaningful once the matching is maximum.
  std::vector<MatchLabel> gallai_edmonds_labels() {
    std::vector<int> roots;
    for (int v = 0; v < n_; ++v) {
      if (mate_[idx(v)] == kNone) roots.push_back(v);
    }
    std::vector<MatchLabel> out(static_cast<std::size_t>(n_), MatchLabel::kUnreached);
    if (roots.empty()) return out;
    if (search(roots)) throw std::logic_error("matching was not maximum");
    for (int v = 0; v < n_; ++v) {
      if (epoch_of_[idx(v)] == epoch_) out[idx(v)] = label_[idx(v)];
    }
    return out;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  void touch(int v) {
    if (epoch_of_[idx(v)] != epoch_) {
      epoch_of_[idx(v)] = epoch_;
      label_[idx(v)] = MatchLabel::kUnreached;
      parent_[idx(v)] = kNone;
      base_[idx(v)] = v;
    }
  }

  int find(int v) {
    touch(v);
    int root = v;
    while (base_[idx(root)] != root) root = base_[idx(root)];
    while (base_[idx(v)] != root) {
      const int next = base_[idx(v)];
      base_[idx(v)] = root;
      v = next;
    }
    return root;
  }

  // Common base of the blossoms with bases x and y, walking both tree paths
  // towards their roots. kNone when they lie in different trees.
  int lca(int x, int y) {
    ++lca_clock_;
    while (true) {
      if (x == kNone && y == kNone) return kNone;
      if (x != kNone) {
        if (aux_[idx(x)] == lca_clock_) return x;
        aux_[idx(x)] = lca_clock_;
        x = mate_[idx(x)] == kNone ? kNone : find(parent_[idx(mate_[idx(x)])]);
      }
      std::swap(x, y);
    }
  }

  // Folds the tree path from v up to base a into the blossom, relinking
  // parents through the edge {v, w}.
  void contract(int v, int w, int a) {
    while (find(v) != a) {
      parent_[idx(v)] = w;
      w = mate_[idx(v)];
      touch(w);
      if (label_[idx(w)] == MatchLabel::kOdd) {
        label_[idx(w)] = MatchLabel::kEven;
        queue_.push_back(w);
      }
      base_[idx(find(v))] = a;
      base_[idx(find(w))] = a;
      v = parent_[idx(w)];
    }
  }

  void augment(int x) {
    while (x != kNone) {
      const int pv = parent_[idx(x)];
      const int next = mate_[idx(pv)];
      mate_[idx(x)] = pv;
      mate_[idx(pv)] = x;
      x = next;
    }
  }

  // Grows an alternating forest from `roots`; augments and returns true on
  // reaching an exposed vertex outside the forest.
  bool search(std::span<const int> roots) {
    ++epoch_;
    queue_.clear();
    for (int r : roots) {
      touch(r);
      label_[idx(r)] = MatchLabel::kEven;
      queue_.push_back(r);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      const bool augmented = adj_.for_each_neighbor(v, [&](int x) {
        touch(x);
        if (label_[idx(x)] == MatchLabel::kUnreached) {
          parent_[idx(x)] = v;
          if (mate_[idx(x)] == kNone) {
            augment(x);
            return true;
          }
          label_[idx(x)] = MatchLabel::kOdd;
          const int m = mate_[idx(x)];
          touch(m);
          label_[idx(m)] = MatchLabel::kEven;
          queue_.push_back(m);
        } else if (label_[idx(x)] == MatchLabel::kEven) {
          const int bv = find(v);
          const int bx = find(x);
          if (bv != bx) {
            const int a = lca(bv, bx);
            if (a == kNone) throw std::logic_error("augmenting path between search trees");
            contract(x, v, a);
            contract(v, x, a);
          }
        }
        return false;
      });
      if (augmented) return true;
    }
    return false;
  }

  const Adjacency& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<MatchLabel> label_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<std::uint32_t> epoch_of_;
  std::vector<std::uint64_t> aux_;
  std::vector<int> queue_;
  std::uint32_t epoch_ = 0;
  std::uint64_t lca_clock_ = 0;
};

class GraphAdjacency {
 public:
  explicit GraphAdjacency(const Graph& g) : g_(g) {}

  int size() const { return g_.num_vertices(); }

  template <class F>
  bool for_each_neighbor(int v, F&& f) const {
    for (Vertex u : g_.neighbors(v)) {
      if (f(u)) return true;
    }
    return false;
  }

 private:
  const Graph& g_;
};

// Mate of each vertex in a maximum matching of g, or -1 if exposed.
inline std::vector<int> maximum_matching(const Graph& g) {
  GraphAdjacency adjacency(g);
  BlossomMatcher<GraphAdjacency> matcher(adjacency);
  matcher.maximize();
  return matcher.mate();
}

}  // namespace nodebal
