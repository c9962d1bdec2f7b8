#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreathlab {

using BigInt = boost::multiprecision::cpp_int;

// Ordered list of cyclic orders (i1,...,im) defining the iterated wreath
// product C_{i1} wr C_{i2} wr ... wr C_{im}, active group leftmost.
//
// Elements act on the truncated tree whose level l (0-based, 0 <= l <= m)
// has i1*...*il vertices; a vertex at level l branches into i_{l+1}
// children, so labels stored at level l are cycle powers mod i_{l+1}.
class Signature {
 public:
  explicit Signature(std::vector<int> orders);

  // m, the number of wreath factors / label levels.
  int levels() const { return static_cast<int>(orders_.size()); }

  // i_{level+1}: the cyclic order acting below a level-`level` vertex.
  int order(int level) const { return orders_.at(static_cast<std::size_t>(level)); }

  // Number of vertices at level l (0 <= l <= m); width(0) == 1 (root).
  std::size_t width(int level) const { return widths_.at(static_cast<std::size_t>(level)); }

  std::size_t leaf_count() const { return widths_.back(); }

  const std::vector<int>& orders() const { return orders_; }

  bool operator==(const Signature& other) const = default;

 private:
  std::vector<int> orders_;
  std::vector<std::size_t> widths_;  // widths_[l] = i1*...*il, l = 0..m
};

// |C_{i1} wr ... wr C_{im}| = prod_k i_k ^ (i1*...*i_{k-1}), exact.
BigInt group_order(const Signature& sig);

// A leaf of the truncated tree: digits (x1,...,xm) with x_l in [0, i_l).
using LeafWord = std::vector<int>;

}  // namespace wreathlab
