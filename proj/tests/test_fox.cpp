#include "doctest.h"
#include "foxcalc/fox.hpp"
#include "foxcalc/magnus.hpp"
#include "foxcalc/selftest.hpp"
#include "support.hpp"

using namespace foxcalc;

namespace {

FreeRingElement fr(const char* text, int rank) { return parse_free_ring(text, rank); }
Word w(const char* text, int rank) { return parse_word(text, rank); }

}  // namespace

TEST_CASE("derivatives of short words") {
  CHECK(fox_word(w("x1 x2", 2), 1, 2) == fr("1", 2));
  CHECK(fox_word(w("x1 x2", 2), 2, 2) == fr("g1", 2));
  CHECK(fox_word(w("x1^-1", 2), 1, 2) == fr("-g1^-1", 2));
  CHECK(fox_word(w("x1^-1", 2), 2, 2).is_zero());
  CHECK(fox_word(w("x1^3", 1), 1, 1) == fr("1 + g1 + g1^2", 1));
  CHECK(fox_word(Word{}, 1, 1).is_zero());
  const auto grad = fox_gradient(w("x1 x2 x1^-1 x2^-1", 2), 2);
  CHECK(grad[0] == fr("1 + -g1*g2*g1^-1", 2));
  CHECK(grad[1] == fr("g1 + -g1*g2*g1^-1*g2^-1", 2));
  CHECK_THROWS_AS(fox_word(w("x1", 2), 3, 2), Error);
}

TEST_CASE("ring derivative is additive and matches the word derivative") {
  const FreeRingElement e = fr("2*g1*g2 + -g2^-1", 2);
  CHECK(fox_ring(e, 2) == 2 * fox_word(w("x1 x2", 2), 2, 2) - fox_word(w("x2^-1", 2), 2, 2));
}

TEST_CASE("abelianized and mapped derivatives") {
  const Word v = w("x1 x2 x1^-1", 2);
  CHECK(fox_abelian(v, 1, 2) == fox_word(v, 1, 2).abelianize());
  CHECK(fox_mapped(v, 1, {{1}, {1}}, 1) == fox_word(v, 1, 2).abelianize().specialize({1, 1}));
}

TEST_CASE("Jacobian layout: rows are generators, columns relators") {
  const auto j = fox_jacobian({w("x1 x2", 3), w("x3", 3)}, 3);
  CHECK(j.rows() == 3);
  CHECK(j.cols() == 2);
  CHECK(j(1, 0) == fr("g1", 3));
  CHECK(j(2, 1) == fr("1", 3));
}

TEST_CASE("chain rule on the Artin generator") {
  const Endomorphism s1 = artin_generator(1, 2);
  CHECK(chain_rule_check(s1, w("x1 x2", 2)).ok);
  CHECK(chain_rule_check(Endomorphism::identity(3), w("x1 x3^-1 x2", 3)).ok);
}

TEST_CASE("vanishing derivatives detect the second derived subgroup of the kernel") {
  CHECK(derivatives_vanish_under({0, 0}, commutator(Word{1}, Word{2})));
  CHECK_FALSE(derivatives_vanish_under({0, 0}, Word{1}));
  // kernel words of x1 -> t, x2 -> t
  const Word a = w("x1 x2^-1", 2), b = w("x1^2 x2^-2", 2);
  CHECK(derivatives_vanish_under({1, 1}, commutator(a, b)));
  CHECK_FALSE(derivatives_vanish_under({1, 1}, commutator(Word{1}, Word{2})));
}

TEST_CASE("random property checks") {
  Rng rng(support::seed(23));
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + trial % 4;
    const Word u = random_word(rng, rank, 20), v = random_word(rng, rank, 20);
    const FreeRingElement uu(rank, u), vv(rank, v);
    FreeRingElement rebuilt = FreeRingElement::constant(rank, uu.trivializer());
    for (int j = 1; j <= rank; ++j) {
      CHECK(fox_word(u * v, j, rank) == fox_word(u, j, rank) + uu * fox_word(v, j, rank));
      rebuilt += fox_word(u, j, rank) * (FreeRingElement(rank, Word{j}) - FreeRingElement::constant(rank, 1));
    }
    CHECK(rebuilt == uu);
    const Endomorphism phi = random_endomorphism(rng, rank, 5);
    CHECK(chain_rule_check(phi, u).ok);
  }
}
