#include "doctest.h"

#include <numeric>
#include <random>

#include "wreathlab/generators.hpp"
#include "test_helpers.hpp"

using namespace wreathlab;

namespace {

int nonzero_labels(const TreeElement& g) {
  int count = 0;
  for (const auto& row : g.labels()) {
    for (int value : row) {
      if (value != 0) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("rooted generator") {
  Signature sig({2, 3});
  TreeElement beta0 = rooted_generator(sig);
  CHECK(beta0 == TreeElement(sig, {{1}, {0, 0}}));
  CHECK(element_order(beta0) == 2);

  // moves only first digits
  for (const LeafWord& leaf : testing::all_leaves(sig)) {
    LeafWord image = act_on_leaf(beta0, leaf);
    CHECK(image[0] == (leaf[0] + 1) % 2);
    CHECK(image[1] == leaf[1]);
  }
}

TEST_CASE("directed generator label placement") {
  Signature sig({2, 3});
  CHECK(directed_generator(sig) == TreeElement(sig, {{0}, {1, 0}}));

  // level-2 label sits after i_2 = 3 zeros within its level
  Signature deep({2, 3, 5});
  TreeElement beta1 = directed_generator(deep);
  CHECK(beta1.label(0, 0) == 0);
  CHECK(beta1.labels()[1] == std::vector<int>{1, 0});
  CHECK(beta1.labels()[2] == std::vector<int>{0, 0, 0, 1, 0, 0});

  // offset pattern sum_{j=2}^{l} prod_{t=j}^{l} i_t at each level
  Signature deeper({2, 3, 2, 2});
  TreeElement g = directed_generator(deeper);
  CHECK(g.labels()[1][0] == 1);
  CHECK(g.labels()[2][3] == 1);             // i_2 = 3
  CHECK(g.labels()[3][3 * 2 + 2] == 1);     // i_2*i_3 + i_3 = 8
  CHECK(nonzero_labels(g) == 3);

  CHECK_THROWS_AS(directed_generator(Signature({5})), std::invalid_argument);
  CHECK_THROWS_AS(directed_generator(sig, SpinePath{7}), std::invalid_argument);
}

TEST_CASE("two generators fill the group") {
  Signature sig({2, 3});
  CHECK(verify_generation({rooted_generator(sig), directed_generator(sig)}, sig));
  CHECK_FALSE(verify_generation({rooted_generator(sig)}, sig));
}

TEST_CASE("alternate spines still generate (coprime orders)") {
  Signature sig23({2, 3});
  for (const SpinePath& spine : {SpinePath{0}, SpinePath{1}}) {
    CHECK(verify_generation({rooted_generator(sig23), directed_generator(sig23, spine)}, sig23));
  }

  Signature sig52({5, 2});
  for (const SpinePath& spine : {SpinePath{0}, SpinePath{2}, SpinePath{4}}) {
    TreeElement beta1 = directed_generator(sig52, spine);
    CHECK(nonzero_labels(beta1) == 1);
    CHECK(verify_generation({rooted_generator(sig52), beta1}, sig52));
  }

  Signature deep({2, 3, 5});
  TreeElement conjugate = directed_generator(deep, SpinePath{0, 2});
  CHECK(nonzero_labels(conjugate) == 2);
  CHECK(verify_generation({rooted_generator(deep), conjugate}, deep, 300000));
}

TEST_CASE("coprimality is essential: a non-coprime tower is not 2-generated this way") {
  Signature sig({3, 2, 2});
  for (const SpinePath& spine : {SpinePath{0, 0}, SpinePath{2, 1}, SpinePath{1, 0}}) {
    CHECK_FALSE(verify_generation({rooted_generator(sig), directed_generator(sig, spine)}, sig));
  }
}

TEST_CASE("lcm_except") {
  Signature sig({2, 3});
  CHECK(lcm_except(sig, 2) == 2);
  Signature deep({2, 3, 5});
  CHECK(lcm_except(deep, 1) == 15);
  CHECK(lcm_except(deep, 2) == 10);
  CHECK(lcm_except(deep, 3) == 6);
  CHECK_THROWS_AS(lcm_except(sig, 0), std::invalid_argument);
  CHECK_THROWS_AS(lcm_except(sig, 3), std::invalid_argument);
}

TEST_CASE("canonical generators for 2x3") {
  Signature sig({2, 3});
  auto sigmas = canonical_generators(sig);
  REQUIRE(sigmas.size() == 2);
  CHECK(sigmas[0] == rooted_generator(sig));
  CHECK(sigmas[1] == TreeElement(sig, {{0}, {1, 0}}));

  // the extraction path: (beta1^lcm2)^(lcm2^-1 mod i2) with 2^-1 mod 3 = 2
  TreeElement beta1 = directed_generator(sig);
  CHECK(sigmas[1] == pow(pow(beta1, 2), 2));

  CHECK(verify_generation(sigmas, sig));
}

TEST_CASE("canonical generators structure and closure") {
  for (const Signature& sig : {Signature({3, 2}), Signature({2, 3, 5})}) {
    auto sigmas = canonical_generators(sig);
    REQUIRE(sigmas.size() == static_cast<std::size_t>(sig.levels()));
    for (int k = 1; k <= sig.levels(); ++k) {
      const TreeElement& sigma = sigmas[static_cast<std::size_t>(k - 1)];
      CHECK(nonzero_labels(sigma) == 1);
      CHECK(element_order(sigma) == sig.order(k - 1));
      // the single label lives at level k-1
      bool at_level = false;
      for (int value : sigma.labels()[static_cast<std::size_t>(k - 1)]) {
        if (value != 0) at_level = true;
      }
      CHECK(at_level);
    }
  }
  Signature sig32({3, 2});
  CHECK(wreath_closure(sig32, canonical_generators(sig32)).size() == 24);
}

TEST_CASE("canonical generators need coprime orders") {
  CHECK_THROWS_AS(canonical_generators(Signature({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(canonical_generators(Signature({2, 3, 4})), std::invalid_argument);
  CHECK(canonical_generators(Signature({5})).size() == 1);
}

TEST_CASE("closures of the pair and of the canonical set coincide") {
  for (const Signature& sig : {Signature({2, 3}), Signature({3, 2}), Signature({5, 2})}) {
    auto from_pair =
        wreath_closure(sig, {rooted_generator(sig), directed_generator(sig)});
    auto from_canonical = wreath_closure(sig, canonical_generators(sig));
    CHECK(from_pair == from_canonical);
    CHECK(BigInt(from_pair.size()) == group_order(sig));
  }
}

TEST_CASE("both state recursions generate the same subgroup") {
  Signature sig({2, 3, 5});
  TreeElement extracted = directed_state_extracted(sig);
  TreeElement powered = directed_state_powered(sig);
  TreeElement beta0 = rooted_generator(sig);
  auto a = wreath_closure(sig, {beta0, extracted}, 300000);
  auto b = wreath_closure(sig, {beta0, powered}, 300000);
  CHECK(a == b);

  // the extracted remainder reconstructs the directed generator
  auto sigmas = canonical_generators(sig);
  CHECK(mul(sigmas[1], extracted) == directed_generator(sig));
}

TEST_CASE("two-generator direct product") {
  // straight pattern: rooted orders 2,5 coprime; directed orders 3,7 coprime
  auto [g1, g2] = two_generator_direct_product(Signature({2, 3}), Signature({5, 7}));
  CHECK(element_order(g1.a) == 2);
  CHECK(element_order(g1.b) == 5);
  CHECK(element_order(g2.a) == 3);
  CHECK(element_order(g2.b) == 7);

  CHECK_THROWS_AS(two_generator_direct_product(Signature({2}), Signature({2})),
                  std::invalid_argument);

  auto pair90 = two_generator_direct_product(Signature({2, 3}), Signature({5}));
  auto generated = product_closure(Signature({2, 3}), Signature({5}),
                                   {pair90.first, pair90.second});
  CHECK(generated.size() == 90);
}

TEST_CASE("crossed pattern pairs rooted with directed") {
  Signature sigA({2, 3});
  Signature sigB({2, 5});
  // rooted orders share the factor 2, so the straight pattern fails
  auto [g1, g2] = two_generator_direct_product(sigA, sigB);
  CHECK(std::gcd(element_order(g1.a), element_order(g1.b)) == 1);
  CHECK(std::gcd(element_order(g2.a), element_order(g2.b)) == 1);
  auto generated = product_closure(sigA, sigB, {g1, g2}, 2000);
  CHECK(generated.size() == 18 * 50);
}

TEST_CASE("verify_generation at larger scale") {
  Signature sig({2, 3, 5});
  CHECK(verify_generation(canonical_generators(sig), sig, 300000));
}
