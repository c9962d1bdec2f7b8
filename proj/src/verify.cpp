#include "wreathlab/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wreathlab/generators.hpp"
#include "wreathlab/morse_orbit.hpp"
#include "wreathlab/two_level.hpp"

namespace wreathlab {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

void run_claim(VerifyReport& report, const std::string& claim, const std::string& paper_ref,
               const std::function<Outcome()>& body) {
  ClaimResult result;
  result.claim = claim;
  result.paper_ref = paper_ref;
  try {
    Outcome outcome = body();
    result.status = outcome.passed ? "pass" : "fail";
    result.detail = outcome.detail;
  } catch (const std::exception& error) {
    result.status = "fail";
    result.detail = std::string("exception: ") + error.what();
  }
  report.claims.push_back(std::move(result));
}

int count_nonzero_labels(const TreeElement& g) {
  int count = 0;
  for (const auto& row : g.labels()) {
    for (int value : row) {
      if (value != 0) ++count;
    }
  }
  return count;
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

HWord concat(const HWord& a, const HWord& b) {
  HWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

HWord inverse_word(const HWord& w) {
  HWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(WordLetter{it->symbol, -it->exponent});
  }
  return out;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const ClaimResult& claim : claims) {
    if (claim.status == "fail") return false;
  }
  return true;
}

std::string diagonal_center_note() {
  return "Corollary 1 note: the claimed center 2nZ x Z includes a diagonal factor "
         "(0; h,...,h), but the signed twist maps the constant diagonal to its "
         "negation (h = -h forces h = 0), so generator commutation finds only the "
         "rho^{2n} kernel; the diagonal factor is central in the unsigned variant "
         "(Corollary 2). Reported, not asserted.";
}

VerifyReport run_verification(VerifyScale scale) {
  VerifyReport report;
  bool full = scale == VerifyScale::Full;

  run_claim(report, "two generators: closure({rooted, directed}) is the whole group",
            "Theorem 1", [&]() -> Outcome {
    auto start = Clock::now();
    std::ostringstream detail;
    Signature small({2, 3});
    auto closure_small = wreath_closure(small, {rooted_generator(small), directed_generator(small)});
    bool ok = closure_small.size() == 18 && group_order(small) == 18;
    detail << "sig 2x3: " << closure_small.size() << "/18";
    if (full) {
      Signature big({2, 3, 5});
      auto closure_big = wreath_closure(big, {rooted_generator(big), directed_generator(big)});
      ok = ok && closure_big.size() == 281250 && group_order(big) == 281250;
      double ms = elapsed_ms(start);
      ok = ok && ms < 30000.0;
      detail << "; sig 2x3x5: " << closure_big.size() << "/281250 in " << ms << " ms (< 30 s)";
    } else {
      detail << "; sig 2x3x5 skipped at small scale (281250 > 1e5 cap)";
    }
    return {ok, detail.str()};
  });

  run_claim(report, "canonical set extraction via lcm powers",
            "Theorem 1, canonical set (1)", [&]() -> Outcome {
    Signature sig = full ? Signature({2, 3, 5}) : Signature({2, 3});
    std::size_t expected = full ? 281250 : 18;
    auto sigmas = canonical_generators(sig);
    bool ok = sigmas.size() == static_cast<std::size_t>(sig.levels());
    for (int k = 1; k <= sig.levels() && ok; ++k) {
      const TreeElement& sigma = sigmas[static_cast<std::size_t>(k - 1)];
      ok = count_nonzero_labels(sigma) == 1 && element_order(sigma) == sig.order(k - 1);
    }
    auto generated = wreath_closure(sig, sigmas, 300000);
    ok = ok && generated.size() == expected;
    std::ostringstream detail;
    detail << "sig " << (full ? "2x3x5" : "2x3 (small scale)") << ": " << sigmas.size()
           << " single-label generators, closure " << generated.size() << "/" << expected;
    return {ok, detail.str()};
  });

  run_claim(report, "two-generator set for the direct product (2x3) x (5)",
            "Theorem 2", [&]() -> Outcome {
    Signature sigA({2, 3});
    Signature sigB({5});
    auto [g1, g2] = two_generator_direct_product(sigA, sigB);
    auto generated = product_closure(sigA, sigB, {g1, g2});
    bool ok = generated.size() == 90;
    std::ostringstream detail;
    detail << "closure of the pair: " << generated.size() << "/90";
    return {ok, detail.str()};
  });

  run_claim(report, "commutator membership: trivial top and coordinate sum in B'",
            "Theorem 3, conditions (2)/(3)", [&]() -> Outcome {
    struct Instance { int r, n, m; };
    std::vector<Instance> instances = {{2, 2, 2}, {2, 2, 3}, {3, 3, 2}};
    bool ok = true;
    std::ostringstream detail;
    for (const Instance& inst : instances) {
      TwoLevelWreath w(inst.r, inst.n, inst.m);
      auto elements = enumerate_group(w, 100000);
      auto derived = commutator_subgroup_oracle(w, 100000);
      std::unordered_set<std::string> derived_keys;
      for (const WreathPair& x : derived) derived_keys.insert(pair_encode(x));
      for (const WreathPair& x : elements) {
        if (is_in_commutator(w, x) != (derived_keys.count(pair_encode(x)) > 0)) {
          ok = false;
          break;
        }
      }
      BigInt expected = boost::multiprecision::pow(BigInt(inst.m),
                                                   static_cast<unsigned>(inst.n - 1));
      ok = ok && BigInt(derived.size()) == expected;
      detail << "Z" << inst.r << " wr Z" << inst.m << ": |W|=" << elements.size()
             << ", |W'|=" << derived.size() << "=m^(n-1); ";
    }
    detail << "membership agrees exhaustively";
    return {ok, detail.str()};
  });

  run_claim(report, "commutator generating pairs and d(W') = n-1",
            "Example 1, Example 2", [&]() -> Outcome {
    TwoLevelWreath w(3, 3, 2);
    auto gens = commutator_generators(3, 2);
    bool ok = true;
    for (const WreathPair& h : gens) ok = ok && is_in_commutator(w, h);
    auto generated = bfs_closure(
        w.identity_pair(), gens,
        [&w](const WreathPair& a, const WreathPair& b) { return pair_mul(w, a, b); },
        [&w](const WreathPair& a) { return pair_inv(w, a); },
        [](const WreathPair& a) { return pair_encode(a); });
    auto derived = commutator_subgroup_oracle(w, 100000);
    ok = ok && generated == derived && derived.size() == 4;
    std::size_t minimal = minimal_generating_size(
        w.identity_pair(), derived,
        [&w](const WreathPair& a, const WreathPair& b) { return pair_mul(w, a, b); },
        [&w](const WreathPair& a) { return pair_inv(w, a); },
        [](const WreathPair& a) { return pair_encode(a); });
    ok = ok && minimal == 2 && dprime_upper_bound(3, 1, 0, 0) == 2;
    std::ostringstream detail;
    detail << "closure of the " << gens.size() << " pairs = W' (" << derived.size()
           << " elements); minimal generating size " << minimal << " = n-1, bound "
           << dprime_upper_bound(3, 1, 0, 0);
    return {ok, detail.str()};
  });

  run_claim(report, "abelianization W/W' = Z_r x Z_m; single factor iff coprime",
            "Remark 1", [&]() -> Outcome {
    struct Instance { int r, n, m; };
    std::vector<Instance> instances = {{2, 2, 2}, {2, 2, 3}, {3, 3, 2}, {4, 2, 3}};
    bool ok = true;
    std::ostringstream detail;
    for (const Instance& inst : instances) {
      TwoLevelWreath w(inst.r, inst.n, inst.m);
      auto derived = commutator_subgroup_oracle(w, 100000);
      Abelianization ab = abelianization(w);
      ok = ok && w.size() == BigInt(derived.size()) * BigInt(ab.quotient_order);
      bool coprime = std::gcd(inst.r, inst.m) == 1;
      ok = ok && (ab.invariant_factors.size() == (coprime ? 1u : 2u));
      detail << "(r=" << inst.r << ",n=" << inst.n << ",m=" << inst.m << "): |W|/|W'|="
             << ab.quotient_order << (coprime ? " cyclic" : " two factors") << "; ";
    }
    TwoLevelWreath z2z3(2, 2, 3);
    ok = ok && abelianization(z2z3).invariant_factors == std::vector<long long>{6};
    detail << "Z2 wr Z3 abelianization = Z6";
    return {ok, detail.str()};
  });

  run_claim(report, "center formula (Z(A) n K) x Z(diagonal) matches exhaustive center",
            "Proposition 1", [&]() -> Outcome {
    auto start = Clock::now();
    TwoLevelWreath faithful(2, 2, 2);
    TwoLevelWreath lax(4, 2, 3);
    bool ok = center(faithful) == center_oracle(faithful, 100000) &&
              center(faithful).size() == 2;
    ok = ok && center(lax) == center_oracle(lax, 100000) && center(lax).size() == 6;
    double ms = elapsed_ms(start);
    ok = ok && ms < 5000.0;
    std::ostringstream detail;
    detail << "faithful r=n=2: 2 central elements; non-faithful r=4,n=2,m=3: 6 = |K|*|Z(B)|"
           << "; " << ms << " ms (< 5 s)";
    return {ok, detail.str()};
  });

  run_claim(report, "twist matrix entries and powers: phi^n = -E, phi^2n = E",
            "displayed phi, phi^4", [&]() -> Outcome {
    IntMatrix expected(4, 4);
    expected << 0, 0, 0, -1,
                1, 0, 0, 0,
                0, 1, 0, 0,
                0, 0, 1, 0;
    bool ok = phi_matrix(4, PhiVariant::Signed) == expected;
    IntMatrix identity = IntMatrix::Identity(4, 4);
    ok = ok && phi_power(4, 4, PhiVariant::Signed) == (-identity).eval();
    ok = ok && phi_power(4, 8, PhiVariant::Signed) == identity;
    return {ok, "n=4 matrix matches entrywise; phi^4 = -E, phi^8 = E"};
  });

  run_claim(report, "defining relations hold in the signed variant for n = 1..6",
            "Theorem 4", [&]() -> Outcome {
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
      ok = check_relations(n, PhiVariant::Signed).all_passed();
    }
    return {ok, "rho^n tau rho^-n = tau^-1, commuting conjugates, rho^2n central, "
                "Baumslag-Solitar relation"};
  });

  run_claim(report, "normalizer agrees with the arithmetic fold; relators normalize to 1",
            "Theorem 4 proof, presentation (4)", [&]() -> Outcome {
    auto start = Clock::now();
    std::mt19937_64 rng(20240611);
    bool ok = true;
    std::size_t words = 0;
    for (int n : {2, 3, 4}) {
      for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
        for (int i = 0; i < 1667 && ok; ++i) {
          HWord w = random_word(rng, n, 50);
          ok = normalize(w, n, variant) == evaluate_word(w, n, variant);
          ++words;
        }
      }
    }
    std::size_t relator_checks = 0;
    for (int n : {2, 3, 4}) {
      for (PhiVariant variant : {PhiVariant::Signed, PhiVariant::Unsigned}) {
        auto relators = presentation_relators(n, variant);
        for (const HWord& r : relators) {
          ok = ok && is_trivial_word(r, n, variant);
          ++relator_checks;
        }
        std::uniform_int_distribution<std::size_t> pick(0, relators.size() - 1);
        for (int i = 0; i < 167 && ok; ++i) {
          HWord u = random_word(rng, n, 10);
          HWord conjugated = concat(concat(u, relators[pick(rng)]), inverse_word(u));
          HWord product = concat(conjugated, relators[pick(rng)]);
          ok = is_trivial_word(conjugated, n, variant) && is_trivial_word(product, n, variant);
          relator_checks += 2;
        }
      }
    }
    double ms = elapsed_ms(start);
    ok = ok && ms < 60000.0;
    std::ostringstream detail;
    detail << words << " random words matched; " << relator_checks
           << " relator/conjugate/product words trivial; " << ms << " ms (< 60 s)";
    return {ok, detail.str()};
  });

  run_claim(report, "center predicates: rho^{2n} powers (signed); nZ and diagonal (unsigned)",
            "Corollary 1, Corollary 2", [&]() -> Outcome {
    bool ok = true;
    for (int n : {2, 3, 4}) {
      for (long long t = -5; t <= 5 && ok; ++t) {
        ok = is_central(h_rho(n, PhiVariant::Signed, 2LL * n * t));
      }
      HElement diagonal = h_identity(n, PhiVariant::Signed);
      diagonal.s.assign(static_cast<std::size_t>(n), 1);
      ok = ok && !is_central(diagonal);
      for (long long t = -5; t <= 5 && ok; ++t) {
        for (long long c = -5; c <= 5 && ok; ++c) {
          HElement z = h_rho(n, PhiVariant::Unsigned, static_cast<long long>(n) * t);
          z.s.assign(static_cast<std::size_t>(n), c);
          ok = is_central(z);
        }
      }
    }
    return {ok, "signed: (2nt; 0,...,0) central, (0; 1,...,1) not; "
                "unsigned: (nt; c,...,c) central"};
  });

  report.claims.push_back(ClaimResult{"signed-variant diagonal is not central",
                                      "Corollary 1 vs Corollary 2", "info",
                                      diagonal_center_note()});

  return report;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const ClaimResult& claim : report.claims) {
    out.push_back({{"claim", claim.claim},
                   {"paper_ref", claim.paper_ref},
                   {"status", claim.status},
                   {"detail", claim.detail}});
  }
  return out;
}

}  // namespace wreathlab
