#include "doctest.h"

#include <random>

#include "wreathlab/morse_orbit.hpp"

using namespace wreathlab;

namespace {

IntVector apply_matrix(const IntMatrix& m, const IntVector& s) {
  IntVector out(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    long long sum = 0;
    for (int j = 0; j < m.cols(); ++j) sum += m(i, j) * s[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

IntVector unit(int n, int i) {
  IntVector e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

HElement random_h(std::mt19937_64& rng, int n, PhiVariant variant) {
  std::uniform_int_distribution<long long> dist(-6, 6);
  HElement x = h_identity(n, variant);
  x.k = dist(rng);
  for (long long& v : x.s) v = dist(rng);
  return x;
}

HWord random_word(std::mt19937_64& rng, int n, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  std::uniform_int_distribution<int> symbol_dist(0, n);
  std::uniform_int_distribution<long long> exponent_dist(-3, 3);
  HWord word;
  std::size_t length = length_dist(rng);
  for (std::size_t i = 0; i < length; ++i) {
    long long exponent = 0;
    while (exponent == 0) exponent = exponent_dist(rng);
    word.letters.push_back(WordLetter{symbol_dist(rng), exponent});
  }
  return word;
}

}  // namespace

TEST_CASE("phi_apply") {
  CHECK(phi_apply({1, 0, 0, 0}, PhiVariant::Signed) == IntVector{0, 1, 0, 0});
  CHECK(phi_apply({0, 0, 0, 1}, PhiVariant::Signed) == IntVector{-1, 0, 0, 0});
  CHECK(phi_apply({0, 0, 0, 0}, PhiVariant::Signed) == IntVector{0, 0, 0, 0});
  CHECK(phi_apply({0, 0, 0, 1}, PhiVariant::Unsigned) == IntVector{1, 0, 0, 0});
  CHECK(phi_apply({5}, PhiVariant::Signed) == IntVector{-5});
}

TEST_CASE("phi matrix entries") {
  IntMatrix expected(4, 4);
  expected << 0, 0, 0, -1,
              1, 0, 0, 0,
              0, 1, 0, 0,
              0, 0, 1, 0;
  CHECK(phi_matrix(4, PhiVariant::Signed) == expected);

  IntMatrix negated(1, 1);
  negated << -1;
  CHECK(phi_matrix(1, PhiVariant::Signed) == negated);

  for (int n = 1; n <= 8; ++n) {
    for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
      IntMatrix m = phi_matrix(n, variant);
      CHECK(is_signed_permutation(m));
      for (int i = 1; i <= n; ++i) {
        CHECK(apply_matrix(m, unit(n, i)) == phi_apply(unit(n, i), variant));
      }
    }
  }
}

TEST_CASE("phi powers") {
  IntMatrix identity = IntMatrix::Identity(4, 4);
  CHECK(phi_power(4, 0, PhiVariant::Signed) == identity);
  CHECK(phi_power(4, 4, PhiVariant::Signed) == (-identity).eval());
  CHECK(phi_power(4, 8, PhiVariant::Signed) == identity);

  for (int n = 1; n <= 8; ++n) {
    IntMatrix e = IntMatrix::Identity(n, n);
    CHECK(phi_power(n, n, PhiVariant::Signed) == (-e).eval());
    CHECK(phi_power(n, 2 * n, PhiVariant::Signed) == e);
    CHECK(phi_power(n, n, PhiVariant::Unsigned) == e);
  }

  // negative exponents invert: phi^a * phi^-a = E
  for (int n = 2; n <= 5; ++n) {
    for (long long a = -2 * n; a <= 2 * n; ++a) {
      IntMatrix product = phi_power(n, a, PhiVariant::Signed) *
                          phi_power(n, -a, PhiVariant::Signed);
      CHECK(product == IntMatrix::Identity(n, n));
      CHECK(is_signed_permutation(phi_power(n, a, PhiVariant::Signed)));
    }
  }
}

TEST_CASE("closed-form power formula matches iterated matrices") {
  for (int n = 2; n <= 6; ++n) {
    for (long long alpha = -2 * n; alpha <= 2 * n; ++alpha) {
      CHECK(phi_power_closed_form(n, alpha) == phi_power(n, alpha, PhiVariant::Signed));
    }
  }
}

TEST_CASE("phi_iterate matches matrix powers") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(-9, 9);
  for (int n : {1, 2, 3, 5}) {
    for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
      for (long long alpha = -2 * n - 3; alpha <= 2 * n + 3; ++alpha) {
        IntVector s(static_cast<std::size_t>(n));
        for (long long& v : s) v = dist(rng);
        CHECK(phi_iterate(s, alpha, variant) ==
              apply_matrix(phi_power(n, alpha, variant), s));
      }
    }
  }
}

TEST_CASE("h_mul convention: conjugation by rho raises the index") {
  // n = 2, signed
  HElement tau1 = h_tau(2, 1, PhiVariant::Signed);
  HElement rho = h_rho(2, PhiVariant::Signed);
  HElement conj = h_mul(h_mul(rho, tau1), h_inv(rho));
  CHECK(conj == h_tau(2, 2, PhiVariant::Signed));

  HElement conj2 = h_mul(h_mul(h_rho(2, PhiVariant::Signed, 2), tau1),
                         h_rho(2, PhiVariant::Signed, -2));
  CHECK(conj2 == h_tau(2, 1, PhiVariant::Signed, -1));  // rho^n tau rho^-n = tau^-1

  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    HElement x = random_h(rng, 3, PhiVariant::Signed);
    HElement y = random_h(rng, 3, PhiVariant::Signed);
    HElement id = h_identity(3, PhiVariant::Signed);
    CHECK(h_mul(x, id) == x);
    CHECK(h_mul(id, x) == x);
    CHECK(h_mul(x, h_inv(x)) == id);
    CHECK(h_inv(h_mul(x, y)) == h_mul(h_inv(y), h_inv(x)));
    HElement z = random_h(rng, 3, PhiVariant::Signed);
    CHECK(h_mul(h_mul(x, y), z) == h_mul(x, h_mul(y, z)));
  }

  CHECK_THROWS_AS(h_mul(h_identity(2, PhiVariant::Signed), h_identity(3, PhiVariant::Signed)),
                  std::invalid_argument);
  CHECK_THROWS_AS(h_mul(h_identity(2, PhiVariant::Signed), h_identity(2, PhiVariant::Unsigned)),
                  std::invalid_argument);
}

TEST_CASE("h_inv basics") {
  CHECK(h_inv(h_identity(3, PhiVariant::Signed)) == h_identity(3, PhiVariant::Signed));
  CHECK(h_inv(h_rho(3, PhiVariant::Signed)) == h_rho(3, PhiVariant::Signed, -1));
}

TEST_CASE("normalize: empty word and single moves") {
  CHECK(normalize(HWord{}, 4, PhiVariant::Signed) == h_identity(4, PhiVariant::Signed));

  // tau_1 rho = rho tau_n^{-1} under the signed raise-index convention
  HWord w1{{WordLetter{1, 1}, WordLetter{0, 1}}};
  HElement n1 = normalize(w1, 4, PhiVariant::Signed);
  CHECK(n1 == HElement{1, {0, 0, 0, -1}, PhiVariant::Signed});
  CHECK(n1 == evaluate_word(w1, 4, PhiVariant::Signed));

  // unsigned: no sign at the wrap
  CHECK(normalize(w1, 4, PhiVariant::Unsigned) ==
        HElement{1, {0, 0, 0, 1}, PhiVariant::Unsigned});

  // away from the wrap the index simply drops by one
  HWord w2{{WordLetter{2, 1}, WordLetter{0, 1}}};
  CHECK(normalize(w2, 2, PhiVariant::Signed) ==
        HElement{1, {1, 0}, PhiVariant::Signed});
  CHECK(normalize(w2, 2, PhiVariant::Signed) == evaluate_word(w2, 2, PhiVariant::Signed));

  // moving rho^-1 raises the index
  HWord w3{{WordLetter{1, 2}, WordLetter{0, -1}}};
  CHECK(normalize(w3, 3, PhiVariant::Signed) ==
        HElement{-1, {0, 2, 0}, PhiVariant::Signed});
  CHECK(normalize(w3, 3, PhiVariant::Signed) == evaluate_word(w3, 3, PhiVariant::Signed));
}

TEST_CASE("normalizer agrees with the arithmetic fold") {
  std::mt19937_64 rng(13);
  for (int n : {1, 2, 3, 4}) {
    for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
      for (int i = 0; i < 300; ++i) {
        HWord w = random_word(rng, n, 30);
        HElement via_rewriting = normalize(w, n, variant);
        HElement via_fold = evaluate_word(w, n, variant);
        CHECK(via_rewriting == via_fold);

        // rho exponent sum is conserved exactly
        long long rho_sum = 0;
        for (const WordLetter& letter : w.letters) {
          if (letter.symbol == 0) rho_sum += letter.exponent;
        }
        CHECK(via_rewriting.k == rho_sum);
      }
    }
  }
}

TEST_CASE("normalize is a homomorphism on concatenation") {
  std::mt19937_64 rng(14);
  int checked = 0;
  for (int n : {2, 3, 4}) {
    for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
      for (int i = 0; i < 1667; ++i) {
        HWord a = random_word(rng, n, 50);
        HWord b = random_word(rng, n, 50);
        HWord ab = a;
        ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
        if (normalize(ab, n, variant) ==
            h_mul(normalize(a, n, variant), normalize(b, n, variant))) {
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 3 * 2 * 1667);  // 1e4 random word pairs
}

TEST_CASE("trivial words") {
  for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
    for (int n : {2, 3, 4}) {
      for (const HWord& relator : presentation_relators(n, variant)) {
        CHECK(is_trivial_word(relator, n, variant));
      }
    }
  }

  // rho tau_1 rho^-1 tau_2^-1 is a relator for both variants when n >= 3
  HWord relator{{WordLetter{0, 1}, WordLetter{1, 1}, WordLetter{0, -1}, WordLetter{2, -1}}};
  CHECK(is_trivial_word(relator, 3, PhiVariant::Signed));
  CHECK(is_trivial_word(relator, 3, PhiVariant::Unsigned));

  HWord commutator{{WordLetter{1, 1}, WordLetter{2, 1}, WordLetter{1, -1}, WordLetter{2, -1}}};
  CHECK(is_trivial_word(commutator, 3, PhiVariant::Signed));

  HWord rho_only{{WordLetter{0, 1}}};
  CHECK_FALSE(is_trivial_word(rho_only, 3, PhiVariant::Signed));

  // conjugates of relators stay trivial
  std::mt19937_64 rng(15);
  auto relators = presentation_relators(3, PhiVariant::Signed);
  for (int i = 0; i < 100; ++i) {
    HWord u = random_word(rng, 3, 10);
    HWord conjugated = u;
    const HWord& r = relators[rng() % relators.size()];
    conjugated.letters.insert(conjugated.letters.end(), r.letters.begin(), r.letters.end());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it) {
      conjugated.letters.push_back(WordLetter{it->symbol, -it->exponent});
    }
    CHECK(is_trivial_word(conjugated, 3, PhiVariant::Signed));
  }
}

TEST_CASE("relation report") {
  for (int n = 1; n <= 6; ++n) {
    RelationReport report = check_relations(n, PhiVariant::Signed);
    CHECK(report.all_passed());
  }

  RelationReport unsigned_report = check_relations(3, PhiVariant::Unsigned);
  CHECK_FALSE(unsigned_report.all_passed());  // rho^n tau rho^-n = tau, not tau^-1
  bool inversion_failed = false;
  for (const RelationCheck& check : unsigned_report.checks) {
    if (check.name.find("rho^n tau rho^-n") != std::string::npos) {
      inversion_failed = !check.passed;
    }
  }
  CHECK(inversion_failed);
}

TEST_CASE("centrality predicates") {
  CHECK(is_central(h_identity(3, PhiVariant::Signed)));

  // unsigned: rho^n and the diagonal are central
  CHECK(is_central(h_rho(3, PhiVariant::Unsigned, 3)));
  HElement diagonal_unsigned = h_identity(3, PhiVariant::Unsigned);
  diagonal_unsigned.s = {2, 2, 2};
  CHECK(is_central(diagonal_unsigned));

  // signed: only rho^{2n} powers survive
  CHECK(is_central(h_rho(3, PhiVariant::Signed, 6)));
  CHECK_FALSE(is_central(h_rho(3, PhiVariant::Signed, 3)));
  HElement diagonal_signed = h_identity(3, PhiVariant::Signed);
  diagonal_signed.s = {1, 1, 1};
  CHECK_FALSE(is_central(diagonal_signed));

  for (int n : {2, 3, 4}) {
    for (long long t = -5; t <= 5; ++t) {
      CHECK(is_central(h_rho(n, PhiVariant::Signed, 2 * n * t)));
      for (long long c = -5; c <= 5; ++c) {
        HElement z = h_rho(n, PhiVariant::Unsigned, n * t);
        z.s.assign(static_cast<std::size_t>(n), c);
        CHECK(is_central(z));
      }
    }
  }
}

TEST_CASE("word validation") {
  HWord bad_index{{WordLetter{5, 1}}};
  CHECK_THROWS_AS(normalize(bad_index, 3, PhiVariant::Signed), std::invalid_argument);
  HWord zero_exponent{{WordLetter{1, 0}}};
  CHECK_THROWS_AS(evaluate_word(zero_exponent, 3, PhiVariant::Signed), std::invalid_argument);
}
