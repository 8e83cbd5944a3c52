#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace grushin {

// Multi-index alpha in N^n labelling a tensor Hermite mode.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }
  static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(n, 0)); }

  int dim() const { return static_cast<int>(e_.size()); }
  int order() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int operator[](int j) const { return e_.at(j); }
  const std::vector<int>& entries() const { return e_; }

  MultiIndex raised(int j) const {
    auto v = e_;
    ++v.at(j);
    return MultiIndex(std::move(v));
  }
  // defined only when entry j >= 1
  MultiIndex lowered(int j) const {
    auto v = e_;
    if (v.at(j) < 1) throw std::invalid_argument("MultiIndex: lower at zero");
    --v[j];
    return MultiIndex(std::move(v));
  }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> e_;
};

// Visits every alpha in N^n with |alpha| <= max_degree.
inline void for_each_multi_index(int n, int max_degree,
                                 const std::function<void(const MultiIndex&)>& fn) {
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int axis, int budget) {
    if (axis == n - 1) {
      for (int v = 0; v <= budget; ++v) {
        cur[axis] = v;
        fn(MultiIndex(cur));
      }
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      cur[axis] = v;
      rec(axis + 1, budget - v);
    }
  };
  if (n == 0) return;
  rec(0, max_degree);
}

}  // namespace grushin
