#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace wreathlab {

// The twist automorphism of Z^n: a cyclic coordinate shift, either negating
// the wrapped coordinate (signed) or not (unsigned). The signed twist has
// order 2n, the unsigned one order n.
enum class PhiVariant { Signed, Unsigned };

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = std::vector<long long>;

// One application: signed (x1,...,xn) -> (-xn, x1, ..., x_{n-1});
// unsigned drops the sign.
IntVector phi_apply(const IntVector& s, PhiVariant variant);

// phi^alpha via the shift/sign closed form, any integer alpha.
IntVector phi_iterate(const IntVector& s, long long alpha, PhiVariant variant);

// Matrix whose action on coordinate vectors equals phi_apply.
IntMatrix phi_matrix(int n, PhiVariant variant);

// Iterated matrix product; negative exponents use the transpose (signed
// permutation matrices are orthogonal).
IntMatrix phi_power(int n, long long alpha, PhiVariant variant);

// The k-th-coordinate sign/index pattern for the signed phi^alpha:
// entry (-1)^floor((alpha+n-k)/n) at column (k - alpha) mod n of row k.
// Kept as an independent route; phi_power is the ground truth.
IntMatrix phi_power_closed_form(int n, long long alpha);

bool is_signed_permutation(const IntMatrix& m);

// Element of H = Z x| Z^n in canonical form rho^k tau_1^{s1} ... tau_n^{sn}.
// The fixed convention: conjugation by rho moves tau indices upward,
// rho tau_i rho^-1 = tau_{i+1}, with the variant controlling the sign
// picked up at the index wrap.
struct HElement {
  long long k = 0;
  IntVector s;
  PhiVariant variant = PhiVariant::Signed;

  int rank() const { return static_cast<int>(s.size()); }
  bool is_identity() const;
  bool operator==(const HElement& other) const = default;
};

HElement h_identity(int n, PhiVariant variant);
HElement h_rho(int n, PhiVariant variant, long long power = 1);
HElement h_tau(int n, int index, PhiVariant variant, long long power = 1);

// (k1; s) * (k2; t) = (k1 + k2; phi^{-k2}(s) + t).
HElement h_mul(const HElement& x, const HElement& y);
HElement h_inv(const HElement& x);

// A word over {rho, tau_1..tau_n}: letters with nonzero exponents.
struct WordLetter {
  int symbol = 0;  // 0 = rho, 1..n = tau_i
  long long exponent = 1;

  bool operator==(const WordLetter& other) const = default;
};

struct HWord {
  std::vector<WordLetter> letters;

  bool operator==(const HWord& other) const = default;
};

// Fold of h_mul over the letters: the arithmetic route.
HElement evaluate_word(const HWord& word, int n, PhiVariant variant);

// Left normal form by rewriting: bubbles every rho one position leftward at
// a time using tau_i rho = rho tau_{i-1} / tau_i rho^-1 = rho^-1 tau_{i+1}
// (exponent negated at the index wrap in the signed variant), then collects
// the commuting tau exponents. Independent of evaluate_word.
HElement normalize(const HWord& word, int n, PhiVariant variant);

bool is_trivial_word(const HWord& word, int n, PhiVariant variant);

// Defining relators rho tau_i rho^-1 tau_{i+1}^{-1} (wrap sign by variant)
// and the tau commutators.
std::vector<HWord> presentation_relators(int n, PhiVariant variant);

struct RelationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

// Evaluates the structural relations of H as h_mul identities:
// rho^n tau rho^-n = tau^-1, commuting rho-conjugates of tau, the central
// power rho^{2n}, the shift relators, and tau commutativity.
RelationReport check_relations(int n, PhiVariant variant);

// Commutation against the generating set {rho, tau_1..tau_n}.
bool is_central(const HElement& x);

}  // namespace wreathlab
