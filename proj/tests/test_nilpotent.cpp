#include "doctest.h"
#include "foxcalc/nilpotent.hpp"
#include "foxcalc/selftest.hpp"
#include "support.hpp"

using namespace foxcalc;

namespace {

const Word c12 = commutator(Word{1}, Word{2});

}  // namespace

TEST_CASE("expansion of a commutator") {
  const TruncatedSeries e = expansion(c12, 2, 3);
  CHECK(to_string(e) == "1 + X1*X2 + -X2*X1");
  CHECK(expansion(Word{1}, 2, 3) * expansion(Word{-1}, 2, 3) == TruncatedSeries::one(2, 3));
  CHECK(expansion(Word{}, 2, 4).is_one());
  CHECK_THROWS_AS(expansion(c12, 2, 9), Error);
}

TEST_CASE("equality in free nilpotent quotients") {
  CHECK(nilpotent_equal(c12, Word{}, 2, 2));
  CHECK_FALSE(nilpotent_equal(c12, Word{}, 2, 3));
  CHECK(nilpotent_equal(Word({1, 2}), Word({2, 1}), 2, 2));
  CHECK(nilpotent_equal(commutator(c12, Word{1}), Word{}, 2, 3));
  CHECK_FALSE(nilpotent_equal(commutator(c12, Word{1}), Word{}, 2, 4));
}

TEST_CASE("nilpotent equality agrees with the Heisenberg normal form") {
  Rng rng(support::seed(41));
  for (int trial = 0; trial < 60; ++trial) {
    const Word a = random_word(rng, 2, 14);
    Word b = random_word(rng, 2, 14);
    if (trial % 3 == 0) b = a * commutator(random_word(rng, 2, 3), random_word(rng, 2, 3));
    for (int k = 1; k <= 3; ++k) CHECK(nilpotent_equal(a, b, 2, k) == support::collected_equal(a, b, k));
  }
}

TEST_CASE("filtration depth and Johnson homomorphisms") {
  const Endomorphism depth2(2, {Word{1} * c12, Word{2}});
  const Endomorphism depth3(2, {Word{1} * commutator(c12, Word{1}), Word{2}});
  CHECK(filtration_depth(Endomorphism::identity(2), 4) == 4);
  CHECK(filtration_depth(depth2, 5) == 2);
  CHECK(filtration_depth(depth3, 5) == 3);
  CHECK(filtration_depth(Endomorphism(2, {Word{1}, Word({2, 1})}), 4) == 1);

  const auto tau1 = johnson_tau(depth2, 1);
  CHECK(to_string(tau1[0]) == "X1*X2 + -X2*X1");
  CHECK(tau1[1].is_zero());
  for (const auto& t : johnson_tau(depth3, 1)) CHECK(t.is_zero());
  CHECK_FALSE(johnson_tau(depth3, 2)[0].is_zero());
  for (const auto& t : johnson_tau(Endomorphism::identity(3), 2)) CHECK(t.is_zero());
  try {
    johnson_tau(depth2, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DepthPrecondition);
  }
}
