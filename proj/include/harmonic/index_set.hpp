#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic {

/// Sorted set of 1-based vertex/row/column indices. Range checks against a
/// concrete dimension happen at the operations that know it.
class IndexSet {
public:
  IndexSet() = default;

  explicit IndexSet(std::vector<int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    if (!elems_.empty() && elems_.front() < 1)
      fail(errc::invalid_index_set,
           "index " + std::to_string(elems_.front()) + " is not positive");
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
      fail(errc::invalid_index_set, "duplicate index in index set");
  }

  IndexSet(std::initializer_list<int> elems)
      : IndexSet(std::vector<int>(elems)) {}

  /// {1, 2, ..., n}
  static IndexSet full(int n) {
    std::vector<int> v(static_cast<size_t>(n > 0 ? n : 0));
    std::iota(v.begin(), v.end(), 1);
    return IndexSet(std::move(v));
  }

  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  int operator[](size_t k) const { return elems_[k]; }

  bool contains(int v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  /// Position of v among the elements (0-based); -1 if absent.
  int rank(int v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) return -1;
    return static_cast<int>(it - elems_.begin());
  }

  long long sum() const {
    return std::accumulate(elems_.begin(), elems_.end(), 0LL);
  }

  const std::vector<int>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const IndexSet&) const = default;

  std::string str() const {
    std::string s = "{";
    for (size_t k = 0; k < elems_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(elems_[k]);
    }
    return s + "}";
  }

private:
  std::vector<int> elems_;
};

/// All size-k subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> index_subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.emplace_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace harmonic
