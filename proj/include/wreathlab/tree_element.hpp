#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathlab/signature.hpp"

namespace wreathlab {

// An automorphism of the truncated tree, stored as its tableau: one integer
// label per vertex, levels 0..m-1, where the label at a level-l vertex is
// the cycle power (mod i_{l+1}) permuting that vertex's children. Vertices
// within a level are ordered lexicographically by root-to-vertex path.
//
// Immutable value type; all arithmetic lives in the free functions below.
class TreeElement {
 public:
  // Identity automorphism (all labels zero).
  explicit TreeElement(Signature sig);

  // Validates label ranges and per-level widths against the signature.
  TreeElement(Signature sig, std::vector<std::vector<int>> labels);

  const Signature& signature() const { return sig_; }
  const std::vector<std::vector<int>>& labels() const { return labels_; }
  int label(int level, std::size_t vertex) const {
    return labels_.at(static_cast<std::size_t>(level)).at(vertex);
  }

  bool is_identity() const;

  // Canonical byte encoding of the label vectors; equal encodings (for a
  // shared signature) mean equal elements. Used for hashing, dedup and
  // deterministic set ordering.
  std::string encode() const;

  bool operator==(const TreeElement& other) const {
    return sig_ == other.sig_ && labels_ == other.labels_;
  }

 private:
  Signature sig_;
  std::vector<std::vector<int>> labels_;
};

// Group multiplication. Leaf-action convention:
//   act_on_leaf(mul(g, h), w) == act_on_leaf(h, act_on_leaf(g, w))
// i.e. g applies first. Throws std::invalid_argument on signature mismatch.
TreeElement mul(const TreeElement& g, const TreeElement& h);

TreeElement inv(const TreeElement& g);

// Binary exponentiation; negative k routes through inv.
TreeElement pow(const TreeElement& g, long long k);

// Image of a leaf (x1,...,xm): digit l of the image is x_l plus the label
// of g at the level-(l-1) vertex addressed by x1...x_{l-1}, mod i_l,
// applied top-down. Throws std::out_of_range on a bad digit.
LeafWord act_on_leaf(const TreeElement& g, const LeafWord& leaf);

// Images of all level-`level` vertices under g, 0 <= level <= m.
std::vector<std::size_t> vertex_images(const TreeElement& g, int level);

// Least k >= 1 with pow(g, k) == identity; computed from the cycle
// structure of the (faithful) leaf action.
long long element_order(const TreeElement& g);

}  // namespace wreathlab
