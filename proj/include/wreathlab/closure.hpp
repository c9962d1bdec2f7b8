#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wreathlab {

inline constexpr std::size_t kDefaultClosureLimit = 1'000'000;

// Thrown when a closure would exceed its element limit. Signals that the
// instance is too large for exhaustive enumeration, not a logic failure.
struct ClosureLimitExceeded : std::runtime_error {
  explicit ClosureLimitExceeded(std::size_t limit)
      : std::runtime_error("closure exceeded element limit " + std::to_string(limit)),
        limit(limit) {}
  std::size_t limit;
};

// Breadth-first closure of `gens` under `mul` and `inv`, starting from the
// identity and deduplicating by canonical encoding. Returns the generated
// subgroup sorted by encoding, so the result is deterministic.
template <typename Elem, typename MulFn, typename InvFn, typename EncodeFn>
std::vector<Elem> bfs_closure(const Elem& identity, const std::vector<Elem>& gens,
                              MulFn&& mul, InvFn&& inv, EncodeFn&& encode,
                              std::size_t limit = kDefaultClosureLimit) {
  if (limit < 1) throw std::invalid_argument("closure limit must be >= 1");

  std::vector<Elem> multipliers;
  {
    std::unordered_set<std::string> seen;
    for (const Elem& g : gens) {
      if (seen.insert(encode(g)).second) multipliers.push_back(g);
      Elem gi = inv(g);
      if (seen.insert(encode(gi)).second) multipliers.push_back(std::move(gi));
    }
  }

  std::vector<std::pair<std::string, Elem>> found;
  std::unordered_set<std::string> seen;
  std::deque<Elem> frontier;

  seen.insert(encode(identity));
  found.emplace_back(encode(identity), identity);
  frontier.push_back(identity);

  while (!frontier.empty()) {
    Elem current = std::move(frontier.front());
    frontier.pop_front();
    for (const Elem& m : multipliers) {
      Elem next = mul(current, m);
      std::string key = encode(next);
      if (seen.insert(key).second) {
        if (seen.size() > limit) throw ClosureLimitExceeded(limit);
        found.emplace_back(std::move(key), next);
        frontier.push_back(std::move(next));
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Elem> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

// Smallest k such that some k-subset of `elements` generates the whole set;
// exhaustive over subsets, intended for groups of at most a few dozen
// elements (minimal generating set searches at desk scale).
template <typename Elem, typename MulFn, typename InvFn, typename EncodeFn>
std::size_t minimal_generating_size(const Elem& identity, const std::vector<Elem>& elements,
                                    MulFn&& mul, InvFn&& inv, EncodeFn&& encode) {
  if (elements.size() > 64) {
    throw std::invalid_argument("minimal_generating_size is exhaustive; group too large");
  }
  std::size_t n = elements.size();
  for (std::size_t k = 0; k <= n; ++k) {
    // iterate k-combinations of indices
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    bool more = true;
    while (more) {
      std::vector<Elem> gens;
      gens.reserve(k);
      for (std::size_t idx : pick) gens.push_back(elements[idx]);
      auto generated = bfs_closure(identity, gens, mul, inv, encode, elements.size() + 1);
      if (generated.size() == n) return k;
      if (k == 0) break;
      // next combination
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (pick[i] + (k - i) < n) {
          ++pick[i];
          for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
        if (i == 0) more = false;
      }
    }
  }
  throw std::logic_error("element set is not closed under its own products");
}

}  // namespace wreathlab
