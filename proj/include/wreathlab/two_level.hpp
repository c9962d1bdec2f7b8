#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wreathlab/closure.hpp"
#include "wreathlab/signature.hpp"

namespace wreathlab {

// Finite passive group with elements numbered 0..order-1, identity at 0.
// Either a cyclic group Z_m (implicit arithmetic) or a group enumerated
// from an iterated wreath product signature (explicit tables).
class PassiveGroup {
 public:
  static PassiveGroup cyclic(int order);
  static PassiveGroup enumerated(const Signature& sig,
                                 std::size_t limit = kDefaultClosureLimit);

  int order() const { return order_; }
  int op(int a, int b) const;
  int inverse(int a) const;
  bool is_abelian() const { return abelian_; }
  bool is_cyclic() const { return table_.empty(); }

  // Exact commutator subgroup (closure of all commutators), sorted.
  const std::vector<int>& commutator_subgroup() const { return derived_; }
  bool in_commutator(int a) const { return derived_mask_.at(static_cast<std::size_t>(a)) != 0; }

  std::vector<int> center() const;

 private:
  PassiveGroup() = default;
  void build_derived();

  int order_ = 1;
  std::vector<int> table_;    // row-major op table; empty for cyclic groups
  std::vector<int> inverse_;  // empty for cyclic groups
  bool abelian_ = true;
  std::vector<int> derived_;
  std::vector<char> derived_mask_;
};

// Element of (Z_r, X) wr B: a top shift and one passive element per point.
struct WreathPair {
  int top = 0;
  std::vector<int> base;

  bool operator==(const WreathPair& other) const = default;
};

// The two-level wreath product W = (Z_r, X) wr B, with Z_r acting on
// X = {0..n-1} by x -> x + a (mod n). The action is a homomorphism exactly
// when n divides r; it is faithful iff r == n, and always transitive.
class TwoLevelWreath {
 public:
  TwoLevelWreath(int active_order, int point_count, PassiveGroup passive);
  TwoLevelWreath(int active_order, int point_count, int passive_order)
      : TwoLevelWreath(active_order, point_count, PassiveGroup::cyclic(passive_order)) {}

  int active_order() const { return active_order_; }
  int point_count() const { return point_count_; }
  const PassiveGroup& passive() const { return passive_; }

  int shift_of(int a) const { return a % point_count_; }

  BigInt size() const;

  WreathPair identity_pair() const;
  void validate(const WreathPair& x) const;

 private:
  int active_order_;
  int point_count_;
  PassiveGroup passive_;
};

// (a1, f1)(a2, f2) = (a1 + a2, x -> f1(x) * f2(x + a1)); agrees with the
// tree-element product under the embedding r == n.
WreathPair pair_mul(const TwoLevelWreath& w, const WreathPair& x, const WreathPair& y);
WreathPair pair_inv(const TwoLevelWreath& w, const WreathPair& x);
std::string pair_encode(const WreathPair& x);

// Membership test for the commutator subgroup: trivial top and the ordered
// product of base coordinates in B'. For cyclic B this is top == 0 and
// sum(base) == 0 (mod m).
bool is_in_commutator(const TwoLevelWreath& w, const WreathPair& x);

// The n-1 pairs (0; ..,1,..,m-1) generating the commutator subgroup of
// Z_n wr Z_m: pair i carries 1 at position i and m-1 at the last position.
std::vector<WreathPair> commutator_generators(int n, int m);

// All r * m^n elements, sorted by encoding. Throws ClosureLimitExceeded
// when the group is larger than `limit`.
std::vector<WreathPair> enumerate_group(const TwoLevelWreath& w, std::size_t limit);

// Exact commutator subgroup: closure of the set of all commutators.
std::vector<WreathPair> commutator_subgroup_oracle(const TwoLevelWreath& w, std::size_t limit);

// Elements of Z_r acting trivially on X: the multiples of n.
std::vector<int> action_kernel(const TwoLevelWreath& w);

// Center by the structural formula: {(a; c,...,c) : a in Z(A) n K, c in Z(B)}.
std::vector<WreathPair> center(const TwoLevelWreath& w);

// Center by exhaustive commutation against every element.
std::vector<WreathPair> center_oracle(const TwoLevelWreath& w, std::size_t limit);

// Invariant factors of W/W' = Z_r x Z_m (cyclic passive only) and the
// quotient order r*m.
struct Abelianization {
  std::vector<long long> invariant_factors;
  long long quotient_order = 1;
};
Abelianization abelianization(const TwoLevelWreath& w);

// (n-1)*d(B) + d(B') + d(A')
long long dprime_upper_bound(long long n, long long dB, long long dBprime, long long dAprime);

}  // namespace wreathlab
