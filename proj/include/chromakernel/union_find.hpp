#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace ck {

// Disjoint sets over 0..n-1 with union by size and path halving. Every
// successful unite() is appended to history() as the pair of arguments.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    std::size_t ra = find(a);
    std::size_t rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    --components_;
    history_.emplace_back(a, b);
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
  std::size_t components() const { return components_; }
  std::size_t size() const { return parent_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& history() const { return history_; }

  // Dense labels 0..components-1, numbered by smallest member.
  std::vector<int> labels() {
    std::vector<int> label_of_root(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      int& l = label_of_root[find(i)];
      if (l < 0) l = next++;
      out[i] = l;
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
  std::vector<std::pair<std::size_t, std::size_t>> history_;
};

}  // namespace ck
