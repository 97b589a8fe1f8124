#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "foxcalc/linalg.hpp"
#include "foxcalc/ring.hpp"
#include "foxcalc/selftest.hpp"
#include "support.hpp"

using namespace foxcalc;

namespace {

LaurentPolynomial lp(const char* text, int rank) { return parse_laurent(text, rank); }

// Leibniz expansion, used as an independent determinant oracle.
LaurentPolynomial leibniz(const LaurentMatrix& m, int rank) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial total(rank);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    LaurentPolynomial term = LaurentPolynomial::constant(rank, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

LaurentPolynomial random_laurent(Rng& rng, int rank) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2), count(0, 3);
  LaurentPolynomial p(rank);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Exponent e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = expo(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("free ring arithmetic") {
  const FreeRingElement a = parse_free_ring("g1 + -2*g2^-1*g1", 2);
  const FreeRingElement b = parse_free_ring("1 + g2", 2);
  CHECK(a * b == parse_free_ring("g1 + g1*g2 + -2*g2^-1*g1 + -2*g2^-1*g1*g2", 2));
  CHECK(a.trivializer() == -1);
  CHECK(a.bar() == parse_free_ring("g1^-1 + -2*g1^-1*g2", 2));
  CHECK(a.abelianize() == lp("g1 + -2*g1*g2^-1", 2));
  CHECK((a - a).is_zero());
  CHECK(parse_free_ring(to_string(a), 2) == a);
}

TEST_CASE("Laurent polynomials") {
  const LaurentPolynomial p = lp("t^2 + -t + 1", 1);
  CHECK(to_string(p) == "t^2 + -t + 1");
  CHECK(p.bar() == lp("t^-2 + -t^-1 + 1", 1));
  CHECK(p.trivializer() == 1);
  CHECK((p * lp("t + 1", 1)) == lp("t^3 + 1", 1));
  CHECK(lp("t^3 + 1", 1).exact_divide(lp("t + 1", 1)) == p);
  CHECK_FALSE(lp("t^3 + 2", 1).exact_divide(lp("t + 1", 1)).has_value());
  CHECK(lp("g1*g2 + -g1", 2).specialize({1, 1}) == lp("t^2 + -t", 1));
  CHECK(lp("2*g1 + 4*g2", 2).content() == 2);
  CHECK(to_string(lp("g3*g4 + -g3 + -g4", 4)) == "g3*g4 + -g3 + -g4");
  CHECK_THROWS_AS(lp("t^", 1), ParseError);
}

TEST_CASE("equality up to units") {
  const auto u = eq_up_to_unit(lp("t^2 + -t + 1", 1), lp("-t^3 + t^2 + -t", 1));
  REQUIRE(u.has_value());
  CHECK(u->sign == -1);
  CHECK(u->monomial == Exponent{-1});
  const auto v = eq_up_to_unit(LaurentFraction(lp("1", 2), lp("g2", 2)), LaurentFraction::constant(2, 1));
  REQUIRE(v.has_value());
  CHECK(v->sign == 1);
  CHECK(v->monomial == Exponent{0, -1});
  CHECK_FALSE(eq_up_to_unit(lp("t^2 + -t + 1", 1), lp("t^2 + -3*t + 1", 1)).has_value());
  CHECK(unit_normalized(lp("-g1^3*g2 + g1^2", 2)) == unit_normalized(lp("g1^-1 + -g2", 2)));
  CHECK(origin_normalized(lp("-t^-1 + 3 + -t", 1)) == lp("t^2 + -3*t + 1", 1));
}

TEST_CASE("fractions") {
  const LaurentFraction f(lp("g1 + -1", 1 + 1), lp("g1^2 + -1", 2));
  CHECK(f == LaurentFraction(LaurentPolynomial::constant(2, 1), lp("g1 + 1", 2)));
  CHECK(f * f.inverse() == LaurentFraction::constant(2, 1));
  CHECK((f - f).is_zero());
  CHECK(parse_fraction(to_string(f), 2) == f);
  CHECK(LaurentFraction(lp("g1^2 + -g1", 2), lp("g1", 2)).is_polynomial());
  CHECK_THROWS_AS(LaurentFraction(lp("g1", 2), LaurentPolynomial(2)), Error);
  CHECK(f.bar() == LaurentFraction(lp("g1", 2), lp("g1 + 1", 2)));
}

TEST_CASE("Bareiss determinant agrees with the Leibniz expansion") {
  Rng rng(support::seed(7));
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    LaurentMatrix m(n, n, LaurentPolynomial(2));
    for (auto& x : m.raw()) x = random_laurent(rng, 2);
    CHECK(determinant(m) == leibniz(m, 2));
    if (determinant(m).is_zero()) continue;
    LaurentPolynomial d(2);
    const LaurentMatrix adj = adjugate_solve(m, laurent_identity(n, 2), &d);
    CHECK(d == leibniz(m, 2));
    CHECK(m * adj == laurent_identity(n, 2).map([&](const LaurentPolynomial& x) { return x * d; }));
  }
}

TEST_CASE("integer linear algebra") {
  IntMatrix m(2, 2, 0);
  m(0, 0) = 2;
  m(1, 1) = 3;
  const SmithForm s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Coefficient>{1, 6});
  IntMatrix u(2, 2, 0);
  u(0, 0) = 2, u(0, 1) = 1, u(1, 0) = 1, u(1, 1) = 1;
  CHECK(u * inverse_unimodular(u) == identity_matrix<Coefficient>(2, 0, 1));
  CHECK(solve_unimodular(u, {3, 2}) == std::vector<Coefficient>{1, 1});
  CHECK(determinant(u) == 1);
  CHECK_THROWS_AS(inverse_unimodular(m), Error);
}

TEST_CASE("checked arithmetic reports overflow") {
  const LaurentPolynomial big = LaurentPolynomial::constant(1, Coefficient{1} << 62);
  try {
    (void)(big * big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}
