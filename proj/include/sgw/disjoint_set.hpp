#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace sgw {

/// Union-find with path halving and union by size. Root identity is arbitrary;
/// min_member() gives a stable label for a set.
class DisjointSet {
 public:
  DisjointSet() = default;
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), min_(n), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::iota(min_.begin(), min_.end(), std::size_t{0});
  }

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t set_count() const noexcept { return sets_; }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when two distinct sets were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    min_[a] = std::min(min_[a], min_[b]);
    --sets_;
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

  /// Smallest element of the set containing x.
  std::size_t min_member(std::size_t x) { return min_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> min_;
  std::size_t sets_ = 0;
};

}  // namespace sgw
