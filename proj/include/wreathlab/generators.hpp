#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wreathlab/closure.hpp"
#include "wreathlab/signature.hpp"
#include "wreathlab/tree_element.hpp"

namespace wreathlab {

// Ray digits (d_1,...,d_{m-1}), one per level 1..m-1, with d_l in [0, i_l).
// The directed generator hangs its nonzero labels one step off this ray.
using SpinePath = std::vector<int>;

// Rooted generator: root label 1 (the cycle generating C_{i1}), everything
// else trivial.
TreeElement rooted_generator(const Signature& sig);

// The ray whose level-l label sits at path (d_1,...,d_{l-1}, off_l).
// Defaults to digit 1 at every level, which reproduces the tableau with
// the level-l nonzero label offset by sum_{j=2}^{l} prod_{t=j}^{l} i_t
// from the start of its level.
SpinePath default_spine(const Signature& sig);

// Directed generator: trivial root, and at each level l in 1..m-1 a single
// label 1 at the vertex (d_1,...,d_{l-1}, off_l), where off_l is 0 unless
// the spine digit d_l is 0 (then 1). Requires m >= 2.
TreeElement directed_generator(const Signature& sig, const SpinePath& spine);
TreeElement directed_generator(const Signature& sig);

// lcm of all orders except i_k; k is 1-based.
long long lcm_except(const Signature& sig, int k);

// Canonical generating set (sigma_1,...,sigma_m) extracted from the pair
// {rooted, directed} by lcm powers: sigma_k = (b^{lcm_k})^{lcm_k^{-1} mod i_k}
// with b the running state remainder b <- sigma_k^{-1} b. Each sigma_k has a
// single label 1 at level k-1. Requires pairwise coprime orders; throws
// std::invalid_argument when the modular inverse does not exist.
std::vector<TreeElement> canonical_generators(const Signature& sig);

// One single-label generator per level (label 1 at the leftmost vertex);
// generates the full iterated wreath product for any signature.
std::vector<TreeElement> level_generators(const Signature& sig);

// The two state recursions for the directed generator: remainder extraction
// sigma_2^{-1} b and the plain power b^{i_2}. Both carry the next
// state on the ray; the subgroups they generate with the rooted generator
// coincide for coprime signatures.
TreeElement directed_state_extracted(const Signature& sig);
TreeElement directed_state_powered(const Signature& sig);

// BFS closure over tree elements (see closure.hpp for the generic engine).
std::vector<TreeElement> wreath_closure(const Signature& sig,
                                        const std::vector<TreeElement>& gens,
                                        std::size_t limit = kDefaultClosureLimit);

// True iff the generated subgroup is the whole group.
bool verify_generation(const std::vector<TreeElement>& gens, const Signature& sig,
                       std::size_t limit = kDefaultClosureLimit);

// Element of a direct product of two iterated wreath products.
struct DirectProductElement {
  TreeElement a;
  TreeElement b;

  bool operator==(const DirectProductElement& other) const {
    return a == other.a && b == other.b;
  }
};

DirectProductElement product_mul(const DirectProductElement& x, const DirectProductElement& y);
DirectProductElement product_inv(const DirectProductElement& x);
std::string product_encode(const DirectProductElement& x);

// Two-element generating set for (wr C_{i_j}) x (wr C_{k_l}): pairs the
// rooted generators together and the directed generators together when
// their orders are coprime, or crosses them when the crossed orders are
// coprime (both signatures need a directed generator for the crossed
// pattern). Throws std::invalid_argument when neither pattern applies.
std::pair<DirectProductElement, DirectProductElement> two_generator_direct_product(
    const Signature& sigA, const Signature& sigB);

std::vector<DirectProductElement> product_closure(
    const Signature& sigA, const Signature& sigB,
    const std::vector<DirectProductElement>& gens,
    std::size_t limit = kDefaultClosureLimit);

}  // namespace wreathlab
