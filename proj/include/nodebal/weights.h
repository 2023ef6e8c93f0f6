#pragma once

#include <algorithm>
#include <functional>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nodebal/errors.h"

namespace nodebal {

using Count = std::int64_t;

// Non-negative integer per vertex. The tag keeps node weights and
// b-matching demands from being mixed up.
template <class Tag>
class CountVector {
 public:
  CountVector() = default;

  explicit CountVector(std::vector<Count> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
      if (values_[v] < 0) {
        throw InvalidInput("negative entry " + std::to_string(values_[v]) +
                           " at vertex " + std::to_string(v));
      }
    }
  }

  CountVector(std::initializer_list<Count> values)
      : CountVector(std::vector<Count>(values)) {}

  static CountVector zeros(int n) {
    return CountVector(std::vector<Count>(static_cast<std::size_t>(n), 0));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  Count operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }

  void set(int v, Count value) {
    if (value < 0) throw InvalidInput("negative entry");
    values_.at(static_cast<std::size_t>(v)) = value;
  }

  std::span<const Count> values() const { return values_; }

  Count total() const { return std::accumulate(values_.begin(), values_.end(), Count{0}); }
  Count max() const {
    return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
  }
  Count min() const {
    return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end());
  }

  friend bool operator==(const CountVector&, const CountVector&) = default;

 private:
  std::vector<Count> values_;
};

struct NodeWeightTag {};
struct DemandTag {};

using WeightAssignment = CountVector<NodeWeightTag>;
using BVector = CountVector<DemandTag>;

// Common value of all entries, or nullopt. The empty assignment is uniform
// with value 0.
template <class Tag>
std::optional<Count> is_uniform(const CountVector<Tag>& w) {
  if (w.empty()) return Count{0};
  const auto values = w.values();
  if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) !=
      values.end()) {
    return std::nullopt;
  }
  return values.front();
}

// b(v) = beta - w(v). Requires beta >= max w.
inline BVector demand_for_target(const WeightAssignment& w, Count beta) {
  std::vector<Count> b(static_cast<std::size_t>(w.size()));
  for (int v = 0; v < w.size(); ++v) {
    if (w[v] > beta) {
      throw InvalidInput("target " + std::to_string(beta) +
                         " is below the weight of vertex " + std::to_string(v));
    }
    b[static_cast<std::size_t>(v)] = beta - w[v];
  }
  return BVector(std::move(b));
}

}  // namespace nodebal
