#include "wreathlab/generators.hpp"

#include <numeric>
#include <stdexcept>

namespace wreathlab {

namespace {

// Extended Euclid; returns x with (a*x) % m == 1. Throws when gcd(a, m) != 1.
long long modular_inverse(long long a, long long m) {
  if (m == 1) return 0;
  long long r0 = m, r1 = ((a % m) + m) % m;
  long long x0 = 0, x1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long x2 = x0 - q * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  if (r0 != 1) {
    throw std::invalid_argument("orders are not coprime: modular inverse does not exist");
  }
  return ((x0 % m) + m) % m;
}

std::size_t vertex_index(const Signature& sig, const std::vector<int>& path) {
  std::size_t idx = 0;
  for (std::size_t l = 0; l < path.size(); ++l) {
    idx = idx * static_cast<std::size_t>(sig.order(static_cast<int>(l))) +
          static_cast<std::size_t>(path[l]);
  }
  return idx;
}

// Single label `value` at `vertex` of `level`, zero elsewhere.
TreeElement single_label(const Signature& sig, int level, std::size_t vertex, int value) {
  std::vector<std::vector<int>> labels(static_cast<std::size_t>(sig.levels()));
  for (int l = 0; l < sig.levels(); ++l) {
    labels[static_cast<std::size_t>(l)].assign(sig.width(l), 0);
  }
  labels[static_cast<std::size_t>(level)][vertex] = value % sig.order(level);
  return TreeElement(sig, std::move(labels));
}

}  // namespace

TreeElement rooted_generator(const Signature& sig) {
  return single_label(sig, 0, 0, sig.order(0) > 1 ? 1 : 0);
}

SpinePath default_spine(const Signature& sig) {
  SpinePath spine;
  for (int l = 1; l < sig.levels(); ++l) {
    spine.push_back(sig.order(l - 1) > 1 ? 1 : 0);
  }
  return spine;
}

TreeElement directed_generator(const Signature& sig, const SpinePath& spine) {
  if (sig.levels() < 2) {
    throw std::invalid_argument("directed generator needs at least two levels");
  }
  if (spine.size() != static_cast<std::size_t>(sig.levels() - 1)) {
    throw std::invalid_argument("spine must have one digit per level 1..m-1");
  }
  for (int l = 1; l < sig.levels(); ++l) {
    int digit = spine[static_cast<std::size_t>(l - 1)];
    if (digit < 0 || digit >= sig.order(l - 1)) {
      throw std::invalid_argument("spine digit out of range");
    }
  }

  std::vector<std::vector<int>> labels(static_cast<std::size_t>(sig.levels()));
  for (int l = 0; l < sig.levels(); ++l) {
    labels[static_cast<std::size_t>(l)].assign(sig.width(l), 0);
  }
  std::vector<int> path;  // ray prefix (d_1,...,d_{l-1})
  for (int l = 1; l < sig.levels(); ++l) {
    int ray_digit = spine[static_cast<std::size_t>(l - 1)];
    int off_digit = ray_digit != 0 ? 0 : (sig.order(l - 1) > 1 ? 1 : 0);
    path.push_back(off_digit);
    std::size_t vertex = vertex_index(sig, path);
    labels[static_cast<std::size_t>(l)][vertex] = sig.order(l) > 1 ? 1 : 0;
    path.back() = ray_digit;
  }
  return TreeElement(sig, std::move(labels));
}

TreeElement directed_generator(const Signature& sig) {
  return directed_generator(sig, default_spine(sig));
}

long long lcm_except(const Signature& sig, int k) {
  if (k < 1 || k > sig.levels()) {
    throw std::invalid_argument("lcm_except index out of range");
  }
  long long result = 1;
  for (int l = 0; l < sig.levels(); ++l) {
    if (l == k - 1) continue;
    result = std::lcm(result, static_cast<long long>(sig.order(l)));
  }
  return result;
}

std::vector<TreeElement> canonical_generators(const Signature& sig) {
  std::vector<TreeElement> gens;
  gens.push_back(rooted_generator(sig));
  if (sig.levels() == 1) return gens;

  TreeElement state = directed_generator(sig);
  for (int k = 2; k <= sig.levels(); ++k) {
    long long order_k = sig.order(k - 1);
    long long l = lcm_except(sig, k);
    long long linv = modular_inverse(l % order_k, order_k);
    TreeElement sigma = pow(state, l * linv);
    gens.push_back(sigma);
    state = mul(inv(sigma), state);
  }
  if (!state.is_identity()) {
    throw std::logic_error("state recursion did not terminate at the identity");
  }
  return gens;
}

std::vector<TreeElement> level_generators(const Signature& sig) {
  std::vector<TreeElement> gens;
  for (int l = 0; l < sig.levels(); ++l) {
    gens.push_back(single_label(sig, l, 0, sig.order(l) > 1 ? 1 : 0));
  }
  return gens;
}

TreeElement directed_state_extracted(const Signature& sig) {
  TreeElement b = directed_generator(sig);
  long long order2 = sig.order(1);
  long long l = lcm_except(sig, 2);
  TreeElement sigma = pow(b, l * modular_inverse(l % order2, order2));
  return mul(inv(sigma), b);
}

TreeElement directed_state_powered(const Signature& sig) {
  return pow(directed_generator(sig), sig.order(1));
}

std::vector<TreeElement> wreath_closure(const Signature& sig,
                                        const std::vector<TreeElement>& gens,
                                        std::size_t limit) {
  for (const TreeElement& g : gens) {
    if (!(g.signature() == sig)) {
      throw std::invalid_argument("generator signature mismatch");
    }
  }
  return bfs_closure(
      TreeElement(sig), gens,
      [](const TreeElement& x, const TreeElement& y) { return mul(x, y); },
      [](const TreeElement& x) { return inv(x); },
      [](const TreeElement& x) { return x.encode(); }, limit);
}

bool verify_generation(const std::vector<TreeElement>& gens, const Signature& sig,
                       std::size_t limit) {
  auto elements = wreath_closure(sig, gens, limit);
  return BigInt(elements.size()) == group_order(sig);
}

DirectProductElement product_mul(const DirectProductElement& x, const DirectProductElement& y) {
  return {mul(x.a, y.a), mul(x.b, y.b)};
}

DirectProductElement product_inv(const DirectProductElement& x) {
  return {inv(x.a), inv(x.b)};
}

std::string product_encode(const DirectProductElement& x) {
  // per-signature encodings have fixed length, so concatenation is unambiguous
  return x.a.encode() + x.b.encode();
}

std::pair<DirectProductElement, DirectProductElement> two_generator_direct_product(
    const Signature& sigA, const Signature& sigB) {
  TreeElement rootedA = rooted_generator(sigA);
  TreeElement rootedB = rooted_generator(sigB);
  bool hasDirA = sigA.levels() >= 2;
  bool hasDirB = sigB.levels() >= 2;
  TreeElement dirA = hasDirA ? directed_generator(sigA) : TreeElement(sigA);
  TreeElement dirB = hasDirB ? directed_generator(sigB) : TreeElement(sigB);

  long long ordRA = element_order(rootedA);
  long long ordRB = element_order(rootedB);
  long long ordDA = element_order(dirA);
  long long ordDB = element_order(dirB);

  if (std::gcd(ordRA, ordRB) == 1 && std::gcd(ordDA, ordDB) == 1) {
    return {DirectProductElement{rootedA, rootedB}, DirectProductElement{dirA, dirB}};
  }
  // crossed pattern: swap which generator of A rides with which of B;
  // only meaningful when both directed generators exist
  if (hasDirA && hasDirB && std::gcd(ordRB, ordDA) == 1 && std::gcd(ordRA, ordDB) == 1) {
    return {DirectProductElement{dirA, rootedB}, DirectProductElement{rootedA, dirB}};
  }
  throw std::invalid_argument("generator orders admit no coprime pairing");
}

std::vector<DirectProductElement> product_closure(
    const Signature& sigA, const Signature& sigB,
    const std::vector<DirectProductElement>& gens, std::size_t limit) {
  DirectProductElement identity{TreeElement(sigA), TreeElement(sigB)};
  return bfs_closure(
      identity, gens, product_mul, product_inv,
      [](const DirectProductElement& x) { return product_encode(x); }, limit);
}

}  // namespace wreathlab
