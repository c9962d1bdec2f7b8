#pragma once

#include <random>
#include <vector>

#include "wreathlab/signature.hpp"
#include "wreathlab/tree_element.hpp"

namespace wreathlab::testing {

inline TreeElement random_element(const Signature& sig, std::mt19937_64& rng) {
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(sig.levels()));
  for (int level = 0; level < sig.levels(); ++level) {
    std::uniform_int_distribution<int> dist(0, sig.order(level) - 1);
    auto& row = labels[static_cast<std::size_t>(level)];
    row.resize(sig.width(level));
    for (int& value : row) value = dist(rng);
  }
  return TreeElement(sig, std::move(labels));
}

inline std::vector<LeafWord> all_leaves(const Signature& sig) {
  std::vector<LeafWord> leaves;
  LeafWord current(static_cast<std::size_t>(sig.levels()), 0);
  while (true) {
    leaves.push_back(current);
    int pos = sig.levels() - 1;
    while (pos >= 0) {
      if (++current[static_cast<std::size_t>(pos)] < sig.order(pos)) break;
      current[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return leaves;
}

// Leaf permutation computed through act_on_leaf alone; composing these is
// the independent oracle for the product recursion.
inline std::vector<std::size_t> leaf_permutation(const TreeElement& g) {
  auto leaves = all_leaves(g.signature());
  std::vector<std::size_t> perm(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    LeafWord image = act_on_leaf(g, leaves[i]);
    std::size_t index = 0;
    for (int l = 0; l < g.signature().levels(); ++l) {
      index = index * static_cast<std::size_t>(g.signature().order(l)) +
              static_cast<std::size_t>(image[static_cast<std::size_t>(l)]);
    }
    perm[i] = index;
  }
  return perm;
}

}  // namespace wreathlab::testing
