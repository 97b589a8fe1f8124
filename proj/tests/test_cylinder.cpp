#include "doctest.h"
#include "foxcalc/cylinder.hpp"
#include "foxcalc/magnus.hpp"
#include "foxcalc/selftest.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace foxcalc;

namespace {

AdmissiblePresentation load(const char* name) { return parse_cylinder(support::read_corpus(name)).presentation; }

}  // namespace

TEST_CASE("string link cylinder reproduces the displayed matrices") {
  const AdmissiblePresentation p = load("string_link.cyl");
  CHECK(p.genus == 2);
  CHECK(p.extra == 1);
  const Diagnostics d = validate(p);
  CHECK(d.ok);
  CHECK(std::llabs(d.trivial_det) == 1);

  const AbelianMarking m = marking_q2(p);
  CHECK(m.images[0] == Exponent{1, 0, -1, 1});
  CHECK(m.images[1] == Exponent{0, 1, 1, 0});
  CHECK(m.images[4] == Exponent{0, 0, 1, 0});

  const FoxBlocks blocks = abc_matrices(p);
  CHECK(blocks.stacked() == golden::string_link_ab());
  CHECK(blocks.c == golden::string_link_c());

  const CylinderMagnus r = magnus_cylinder(p);
  const FractionMatrix expected = golden::string_link_magnus();
  const FractionMatrix entries = r.entries();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(entries(i, j) == expected(i, j));
    }
  CHECK(r.det() == golden::string_link_det());
  CHECK(eq_up_to_unit(torsion_plus(p), golden::string_link_torsion()).has_value());
  CHECK(rhat_relation_check(p));
  CHECK(check_symplectic_cylinder(p));
}

TEST_CASE("Seifert surface cylinders") {
  for (const char* name : {"seifert_r.cyl", "trefoil_fiber.cyl"}) {
    const AdmissiblePresentation p = load(name);
    CHECK(validate(p).ok);
    const FractionMatrix r = magnus_cylinder(p).entries();
    CHECK(r == to_fractions(golden::seifert_magnus()));
    CHECK(rhat_relation_check(p));
    CHECK(check_symplectic_cylinder(p));
  }
  CHECK(eq_up_to_unit(torsion_plus(load("seifert_r.cyl")), golden::seifert_r_torsion()).has_value());
  const auto u = eq_up_to_unit(torsion_plus(load("trefoil_fiber.cyl")), golden::trefoil_fiber_torsion());
  REQUIRE(u.has_value());
}

TEST_CASE("validation rejects bad presentations") {
  CHECK(validate(trivial_cylinder(2)).ok);
  AdmissiblePresentation doubled = trivial_cylinder(1);
  doubled.relators[1] = doubled.relators[0];
  const Diagnostics d = validate(doubled);
  CHECK_FALSE(d.ok);
  CHECK_FALSE(d.messages.empty());
  try {
    cylinder_report(doubled);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCylinder);
  }
  CHECK_THROWS_AS(parse_cylinder("genus 1\nextra 0\nrel m1 q1\n"), ParseError);
  CHECK_THROWS_AS(parse_cylinder("genus 1\nextra 0\nrel m1 p1^-1\n"), Error);
}

TEST_CASE("cylinder files round-trip") {
  const CylinderSource src = parse_cylinder(support::read_corpus("trefoil_fiber.cyl"));
  REQUIRE(src.rho1.has_value());
  CHECK(src.rho1->size() == 7);
  CHECK(parse_cylinder(to_string(src.presentation)).presentation == src.presentation);
  const CylinderSource named = parse_cylinder("genus 1\nextra 0\nrel i-(g1) i+(g1)^-1\nrel i-(g2) i+(g2)^-1\n");
  CHECK(named.presentation == trivial_cylinder(1));
}

TEST_CASE("mapping class cylinders") {
  CHECK(from_mapping_class(Endomorphism::identity(2), 1) == trivial_cylinder(1));
  CHECK(magnus_cylinder(trivial_cylinder(2)).entries() == to_fractions(laurent_identity(4, 4)));
  for (int g = 1; g <= 2; ++g)
    for (const auto& t : twist_catalogue(g)) {
      const AdmissiblePresentation p = from_mapping_class(t, g);
      const CylinderMagnus r = magnus_cylinder(p);
      CHECK(r.entries() == to_fractions(magnus_abelian(t)));
      CHECK(r.sigma == homology_action(t));
      CHECK(torsion_plus(p).is_monomial());
      CHECK(check_symplectic_cylinder(p));
    }
}

TEST_CASE("stacking cylinders") {
  const AdmissiblePresentation sl = load("string_link.cyl");
  const AdmissiblePresentation t2 = trivial_cylinder(2);
  CHECK(validate(compose(t2, t2)).ok);
  CHECK(magnus_cylinder(compose(sl, t2)).entries() == magnus_cylinder(sl).entries());
  CHECK(magnus_cylinder(compose(t2, sl)).entries() == magnus_cylinder(sl).entries());
  CHECK_THROWS_AS(compose(sl, trivial_cylinder(1)), Error);

  Rng rng(support::seed(53));
  for (int trial = 0; trial < 6; ++trial) {
    const Endomorphism phi = random_twist_product(rng, 2, 3), psi = random_twist_product(rng, 2, 3);
    const AdmissiblePresentation m = trial % 2 ? sl : from_mapping_class(phi, 2);
    const AdmissiblePresentation n = from_mapping_class(psi, 2);
    const AdmissiblePresentation mn = compose(m, n);
    const CylinderMagnus rm = magnus_cylinder(m), rn = magnus_cylinder(n), rmn = magnus_cylinder(mn);
    CHECK(magnus_functorial(rmn, rm, rn));
    CHECK(torsion_functorial(rmn.den, rm.den, rm.sigma, rn.den));
    if (trial % 2 == 0) CHECK(rmn.entries() == to_fractions(magnus_abelian(compose(phi, psi))));
  }
}
