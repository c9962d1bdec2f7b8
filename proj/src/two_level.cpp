#include "wreathlab/two_level.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wreathlab/generators.hpp"

namespace wreathlab {

PassiveGroup PassiveGroup::cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic order must be >= 1");
  PassiveGroup g;
  g.order_ = order;
  g.abelian_ = true;
  g.build_derived();
  return g;
}

PassiveGroup PassiveGroup::enumerated(const Signature& sig, std::size_t limit) {
  auto elements = wreath_closure(sig, level_generators(sig), limit);
  PassiveGroup g;
  g.order_ = static_cast<int>(elements.size());

  std::unordered_map<std::string, int> index;
  index.reserve(elements.size());
  for (int i = 0; i < g.order_; ++i) {
    index.emplace(elements[static_cast<std::size_t>(i)].encode(), i);
  }

  std::size_t n = elements.size();
  g.table_.assign(n * n, 0);
  g.inverse_.assign(n, 0);
  g.abelian_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int product = index.at(mul(elements[i], elements[j]).encode());
      g.table_[i * n + j] = product;
      if (product == 0) g.inverse_[i] = static_cast<int>(j);
    }
  }
  for (std::size_t i = 0; i < n && g.abelian_; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.table_[i * n + j] != g.table_[j * n + i]) {
        g.abelian_ = false;
        break;
      }
    }
  }
  g.build_derived();
  return g;
}

int PassiveGroup::op(int a, int b) const {
  if (table_.empty()) {
    int sum = a + b;
    if (sum >= order_) sum -= order_;
    return sum;
  }
  return table_.at(static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                   static_cast<std::size_t>(b));
}

int PassiveGroup::inverse(int a) const {
  if (table_.empty()) return a == 0 ? 0 : order_ - a;
  return inverse_.at(static_cast<std::size_t>(a));
}

void PassiveGroup::build_derived() {
  derived_mask_.assign(static_cast<std::size_t>(order_), 0);
  if (abelian_) {
    derived_ = {0};
    derived_mask_[0] = 1;
    return;
  }
  // seed with every commutator, then close under the group operation
  std::vector<char> seen(static_cast<std::size_t>(order_), 0);
  std::deque<int> frontier;
  auto push = [&](int x) {
    if (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      frontier.push_back(x);
    }
  };
  push(0);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      push(op(op(a, b), op(inverse(a), inverse(b))));
    }
  }
  std::vector<int> members(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (int m : members) {
      int y = op(x, m);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        frontier.push_back(y);
      }
    }
  }
  derived_.clear();
  for (int x = 0; x < order_; ++x) {
    if (seen[static_cast<std::size_t>(x)]) {
      derived_.push_back(x);
      derived_mask_[static_cast<std::size_t>(x)] = 1;
    }
  }
}

std::vector<int> PassiveGroup::center() const {
  std::vector<int> out;
  for (int c = 0; c < order_; ++c) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) {
      central = op(c, b) == op(b, c);
    }
    if (central) out.push_back(c);
  }
  return out;
}

TwoLevelWreath::TwoLevelWreath(int active_order, int point_count, PassiveGroup passive)
    : active_order_(active_order), point_count_(point_count), passive_(std::move(passive)) {
  if (active_order_ < 1 || point_count_ < 1) {
    throw std::invalid_argument("active order and point count must be >= 1");
  }
  if (active_order_ % point_count_ != 0) {
    throw std::invalid_argument("shift action is not a homomorphism unless n divides r");
  }
}

BigInt TwoLevelWreath::size() const {
  return BigInt(active_order_) *
         boost::multiprecision::pow(BigInt(passive_.order()),
                                    static_cast<unsigned>(point_count_));
}

WreathPair TwoLevelWreath::identity_pair() const {
  WreathPair id;
  id.base.assign(static_cast<std::size_t>(point_count_), 0);
  return id;
}

void TwoLevelWreath::validate(const WreathPair& x) const {
  if (x.top < 0 || x.top >= active_order_) {
    throw std::invalid_argument("pair top out of range");
  }
  if (x.base.size() != static_cast<std::size_t>(point_count_)) {
    throw std::invalid_argument("pair base width does not match point count");
  }
  for (int value : x.base) {
    if (value < 0 || value >= passive_.order()) {
      throw std::invalid_argument("pair base entry out of range");
    }
  }
}

WreathPair pair_mul(const TwoLevelWreath& w, const WreathPair& x, const WreathPair& y) {
  w.validate(x);
  w.validate(y);
  int n = w.point_count();
  WreathPair out;
  out.top = (x.top + y.top) % w.active_order();
  out.base.resize(static_cast<std::size_t>(n));
  int shift = w.shift_of(x.top);
  for (int i = 0; i < n; ++i) {
    int moved = i + shift;
    if (moved >= n) moved -= n;
    out.base[static_cast<std::size_t>(i)] =
        w.passive().op(x.base[static_cast<std::size_t>(i)],
                       y.base[static_cast<std::size_t>(moved)]);
  }
  return out;
}

WreathPair pair_inv(const TwoLevelWreath& w, const WreathPair& x) {
  w.validate(x);
  int n = w.point_count();
  WreathPair out;
  out.top = x.top == 0 ? 0 : w.active_order() - x.top;
  out.base.resize(static_cast<std::size_t>(n));
  int shift = w.shift_of(x.top);
  for (int i = 0; i < n; ++i) {
    int source = i - shift;
    if (source < 0) source += n;
    out.base[static_cast<std::size_t>(i)] =
        w.passive().inverse(x.base[static_cast<std::size_t>(source)]);
  }
  return out;
}

std::string pair_encode(const WreathPair& x) {
  std::string out;
  auto put = [&out](int value) {
    auto u = static_cast<std::uint32_t>(value);
    for (int b = 3; b >= 0; --b) {
      out.push_back(static_cast<char>((u >> (8 * b)) & 0xFF));
    }
  };
  put(x.top);
  for (int value : x.base) put(value);
  return out;
}

bool is_in_commutator(const TwoLevelWreath& w, const WreathPair& x) {
  w.validate(x);
  if (x.top != 0) return false;  // Z_r is abelian, so A' is trivial
  int product = 0;
  for (int value : x.base) product = w.passive().op(product, value);
  return w.passive().in_commutator(product);
}

std::vector<WreathPair> commutator_generators(int n, int m) {
  if (n < 2 || m < 1) {
    throw std::invalid_argument("commutator_generators needs n >= 2, m >= 1");
  }
  std::vector<WreathPair> gens;
  for (int i = 1; i <= n - 1; ++i) {
    WreathPair h;
    h.base.assign(static_cast<std::size_t>(n), 0);
    h.base[static_cast<std::size_t>(i - 1)] = 1 % m;
    h.base[static_cast<std::size_t>(n - 1)] = (m - 1) % m;
    gens.push_back(std::move(h));
  }
  return gens;
}

std::vector<WreathPair> enumerate_group(const TwoLevelWreath& w, std::size_t limit) {
  if (w.size() > BigInt(limit)) throw ClosureLimitExceeded(limit);
  std::vector<WreathPair> out;
  out.reserve(w.size().convert_to<std::size_t>());
  int n = w.point_count();
  int m = w.passive().order();
  WreathPair current = w.identity_pair();
  for (int top = 0; top < w.active_order(); ++top) {
    current.top = top;
    std::fill(current.base.begin(), current.base.end(), 0);
    while (true) {
      out.push_back(current);
      int pos = n - 1;
      while (pos >= 0) {
        int next = current.base[static_cast<std::size_t>(pos)] + 1;
        if (next < m) {
          current.base[static_cast<std::size_t>(pos)] = next;
          break;
        }
        current.base[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

std::vector<WreathPair> commutator_subgroup_oracle(const TwoLevelWreath& w, std::size_t limit) {
  auto elements = enumerate_group(w, limit);
  std::vector<WreathPair> commutators;
  std::unordered_set<std::string> seen;
  for (const WreathPair& x : elements) {
    WreathPair xi = pair_inv(w, x);
    for (const WreathPair& y : elements) {
      WreathPair c = pair_mul(w, pair_mul(w, x, y), pair_mul(w, xi, pair_inv(w, y)));
      if (seen.insert(pair_encode(c)).second) commutators.push_back(std::move(c));
    }
  }
  return bfs_closure(
      w.identity_pair(), commutators,
      [&w](const WreathPair& a, const WreathPair& b) { return pair_mul(w, a, b); },
      [&w](const WreathPair& a) { return pair_inv(w, a); },
      [](const WreathPair& a) { return pair_encode(a); }, limit);
}

std::vector<int> action_kernel(const TwoLevelWreath& w) {
  std::vector<int> kernel;
  for (int a = 0; a < w.active_order(); ++a) {
    if (w.shift_of(a) == 0) kernel.push_back(a);
  }
  return kernel;
}

std::vector<WreathPair> center(const TwoLevelWreath& w) {
  // Z(A) is all of Z_r, so the top component ranges over the action kernel;
  // the base is constant on the (single) orbit with value in Z(B).
  std::vector<WreathPair> out;
  std::vector<int> passive_center = w.passive().center();
  for (int a : action_kernel(w)) {
    for (int c : passive_center) {
      WreathPair z;
      z.top = a;
      z.base.assign(static_cast<std::size_t>(w.point_count()), c);
      out.push_back(std::move(z));
    }
  }
  return out;
}

std::vector<WreathPair> center_oracle(const TwoLevelWreath& w, std::size_t limit) {
  auto elements = enumerate_group(w, limit);
  std::vector<WreathPair> out;
  for (const WreathPair& x : elements) {
    bool central = true;
    for (const WreathPair& y : elements) {
      if (!(pair_mul(w, x, y) == pair_mul(w, y, x))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(x);
  }
  return out;
}

Abelianization abelianization(const TwoLevelWreath& w) {
  if (!w.passive().is_cyclic()) {
    throw std::invalid_argument("abelianization implemented for cyclic passive groups");
  }
  long long r = w.active_order();
  long long m = w.passive().order();
  Abelianization out;
  out.quotient_order = r * m;
  long long g = std::gcd(r, m);
  if (g == 1) {
    out.invariant_factors = {r * m};
  } else {
    out.invariant_factors = {g, std::lcm(r, m)};
  }
  return out;
}

long long dprime_upper_bound(long long n, long long dB, long long dBprime, long long dAprime) {
  if (n < 0 || dB < 0 || dBprime < 0 || dAprime < 0) {
    throw std::invalid_argument("dprime_upper_bound needs nonnegative inputs");
  }
  return (n - 1) * dB + dBprime + dAprime;
}

}  // namespace wreathlab
