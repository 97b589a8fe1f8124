#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "foxcalc/alexander.hpp"
#include "foxcalc/cylinder.hpp"
#include "foxcalc/fox.hpp"
#include "foxcalc/magnus.hpp"
#include "foxcalc/nilpotent.hpp"
#include "foxcalc/selftest.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace foxcalc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = "failed: " + what;
    }
  }
};

struct Criterion {
  int number;
  const char* name;
  double budget_ms;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

AdmissiblePresentation load_cylinder(const char* name) {
  return parse_cylinder(support::read_corpus(name)).presentation;
}

std::vector<std::pair<std::string, AdmissiblePresentation>> corpus_cylinders() {
  return {{"string_link", load_cylinder("string_link.cyl")},
          {"seifert_r", load_cylinder("seifert_r.cyl")},
          {"trefoil_fiber", load_cylinder("trefoil_fiber.cyl")}};
}

FreeRingElement one(int rank) { return FreeRingElement::constant(rank, 1); }

FractionMatrix twist_fractions(const FractionMatrix& m, const IntMatrix& sigma) {
  const auto images = column_images(sigma);
  return m.map([&](const LaurentFraction& x) { return x.substitute(images, static_cast<int>(sigma.rows())); });
}

FractionMatrix bar_transpose(const FractionMatrix& m) {
  return m.transpose().map([](const LaurentFraction& x) { return x.bar(); });
}

bool is_signed_monomial(const LaurentPolynomial& p) {
  return p.is_monomial() && (p.leading().second == 1 || p.leading().second == -1);
}

Outcome golden_string_link() {
  Outcome o;
  const AdmissiblePresentation p = load_cylinder("string_link.cyl");
  const FractionMatrix r = magnus_cylinder(p).entries();
  const FractionMatrix expected = golden::string_link_magnus();
  int matched = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) matched += r(i, j) == expected(i, j);
  o.require(matched == 16, std::to_string(matched) + "/16 entries");
  o.require(determinant(r) == golden::string_link_det(), "det r");
  o.require(eq_up_to_unit(torsion_plus(p), golden::string_link_torsion()).has_value(), "torsion");
  o.detail = o.pass ? "16/16 entries, det and torsion match" : o.detail;
  return o;
}

Outcome golden_seifert() {
  Outcome o;
  const AdmissiblePresentation r = load_cylinder("seifert_r.cyl");
  const AdmissiblePresentation f = load_cylinder("trefoil_fiber.cyl");
  o.require(eq_up_to_unit(torsion_plus(r), golden::seifert_r_torsion()).has_value(), "torsion of M_R");
  const LaurentPolynomial tf = torsion_plus(f);
  o.require(eq_up_to_unit(tf, golden::trefoil_fiber_torsion()).has_value(), "torsion of M_R'");
  o.require(is_signed_monomial(tf), "torsion of M_R' is a unit");
  const FractionMatrix expected = to_fractions(golden::seifert_magnus());
  o.require(magnus_cylinder(r).entries() == expected, "Magnus matrix of M_R");
  o.require(magnus_cylinder(f).entries() == expected, "Magnus matrix of M_R'");
  if (o.pass) o.detail = "both torsions and both 2x2 matrices match";
  return o;
}

Outcome fox_properties() {
  Outcome o;
  Rng rng(support::seed(3001));
  std::uniform_int_distribution<int> pick_rank(1, 6);
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0, n5 = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = pick_rank(rng);
    std::uniform_int_distribution<int> pick(1, rank);
    const int i = pick(rng), j = pick(rng);
    // (1)
    const FreeRingElement d = fox_word(Word{-i}, j, rank);
    o.require(d == (i == j ? -1 * FreeRingElement(rank, Word{-i}) : FreeRingElement(rank)), "inverse rule");
    ++n1;
    // (2)
    const FreeRingElement g = random_ring_element(rng, rank, 4, 40), h = random_ring_element(rng, rank, 4, 40);
    o.require(fox_ring(g * h, j) == fox_ring(g, j) * FreeRingElement::constant(rank, h.trivializer()) + g * fox_ring(h, j),
              "product rule");
    ++n2;
    // (3)
    const Endomorphism phi = random_endomorphism(rng, rank, 6);
    const Word w = random_word(rng, rank, 40);
    FreeRingElement rhs(rank);
    for (int k = 1; k <= rank; ++k) rhs += fox_word(w, k, rank).apply(phi) * fox_word(phi.image(k), j, rank);
    o.require(fox_word(phi.apply(w), j, rank) == rhs, "chain rule");
    ++n3;
    // (4)
    FreeRingElement sum(rank);
    for (int k = 1; k <= rank; ++k) sum += fox_ring(g, k) * (FreeRingElement(rank, Word{k}) - one(rank));
    o.require(sum == g - FreeRingElement::constant(rank, g.trivializer()), "fundamental formula");
    ++n4;
  }
  // (5), one direction: commutators of kernel words have vanishing derivatives.
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 2 + trial % 5;
    std::uniform_int_distribution<int> expo(-1, 2);
    std::vector<int> e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = expo(rng);
    e[0] = 1;
    auto kernel_word = [&] {
      Word u = random_word(rng, rank, 12);
      int total = 0;
      for (int l : u.letters()) total += (l > 0 ? 1 : -1) * e[static_cast<std::size_t>(std::abs(l) - 1)];
      return u * Word::generator(1, -total);
    };
    const Word u = kernel_word(), v = kernel_word();
    const Word c = random_word(rng, rank, 6);
    const Word x = c * commutator(u, v) * c.inverse() * commutator(kernel_word(), kernel_word());
    bool vanish = true;
    for (int j = 1; j <= rank; ++j) vanish = vanish && fox_word(x, j, rank).abelianize().specialize(e).is_zero();
    o.require(vanish, "vanishing on [ker, ker]");
    ++n5;
  }
  if (o.pass)
    o.detail = "(1) " + std::to_string(n1) + ", (2) " + std::to_string(n2) + ", (3) " + std::to_string(n3) + ", (4) " +
               std::to_string(n4) + ", (5) " + std::to_string(n5) + " instances";
  return o;
}

Outcome symplecticity() {
  Outcome o;
  Rng rng(support::seed(4001));
  int products = 0;
  for (int g = 1; g <= 3; ++g) {
    const FreeMatrix j = jtilde(g);
    for (int trial = 0; trial < 50; ++trial) {
      const Endomorphism phi = random_twist_product(rng, g, 1 + trial % 4);
      const FreeMatrix r = magnus(phi);
      o.require(bar_transpose(r) * j * r == twist(j, phi), "twisted symplecticity at g=" + std::to_string(g));
      ++products;
    }
  }
  int cylinders = 0;
  auto check = [&](const std::string& name, const AdmissiblePresentation& p) {
    const CylinderMagnus cm = magnus_cylinder(p);
    const FractionMatrix r = cm.entries();
    const FractionMatrix jq = to_fractions(reduce_abelian(jtilde(p.genus)));
    o.require(bar_transpose(r) * jq * r == twist_fractions(jq, cm.sigma), "cylinder symplecticity of " + name);
    ++cylinders;
  };
  for (const auto& [name, p] : corpus_cylinders()) check(name, p);
  for (int g = 1; g <= 2; ++g)
    for (const auto& t : twist_catalogue(g)) check("catalogue twist", from_mapping_class(t, g));
  if (o.pass)
    o.detail = std::to_string(products) + " twist products, " + std::to_string(cylinders) + " cylinders";
  return o;
}

Outcome crossed_laws() {
  Outcome o;
  Rng rng(support::seed(5001));
  int pairs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 2 + trial % 3;
    const Endomorphism phi = random_endomorphism(rng, rank, 5), psi = random_endomorphism(rng, rank, 5);
    o.require(magnus(compose(phi, psi)) == magnus(phi) * twist(magnus(psi), phi), "crossed law");
    ++pairs;
  }
  int compositions = 0;
  const auto corpus = corpus_cylinders();
  for (int trial = 0; trial < 24; ++trial) {
    const int g = 1 + trial % 2;
    auto pick = [&](int which) {
      if (which == 0) return from_mapping_class(random_twist_product(rng, g, 2), g);
      if (g == 2) return corpus[0].second;
      return corpus[1 + trial % 2].second;
    };
    const AdmissiblePresentation m = pick(trial % 3 == 0 ? 1 : 0), n = pick(trial % 3 == 1 ? 1 : 0);
    const AdmissiblePresentation mn = compose(m, n);
    const CylinderMagnus rm = magnus_cylinder(m), rn = magnus_cylinder(n), rmn = magnus_cylinder(mn);
    o.require(rmn.entries() == rm.entries() * twist_fractions(rn.entries(), rm.sigma), "cylinder functoriality");
    o.require(rmn.sigma == rm.sigma * rn.sigma, "homology action of a product");
    const LaurentPolynomial expected = rm.den * twist(rn.den, rm.sigma);
    o.require(eq_up_to_unit(rmn.den, expected).has_value(), "torsion functoriality");
    ++compositions;
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(compositions) + " compositions";
  return o;
}

Outcome rhat_relation() {
  Outcome o;
  int count = 0;
  for (const auto& [name, p] : corpus_cylinders()) {
    const LaurentPolynomial tau = torsion_plus(p);
    const LaurentFraction det = determinant(magnus_cylinder(p).entries());
    o.require(eq_up_to_unit(det, LaurentFraction(tau.bar(), tau)).has_value(), name);
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " corpus cylinders";
  return o;
}

Outcome alexander_consistency() {
  Outcome o;
  const LaurentPolynomial expected = parse_laurent("t^2 + -t + 1", 1);
  const LaurentPolynomial knot = alexander_knot(parse_presentation(support::read_corpus("trefoil.pres")));
  const LaurentPolynomial fibered =
      fibered_alexander(parse_endomorphism(support::read_corpus("trefoil_monodromy.endo")), 1);
  o.require(eq_up_to_unit(knot, expected).has_value(), "Wirtinger trefoil");
  o.require(eq_up_to_unit(fibered, expected).has_value(), "trefoil monodromy");
  const CylinderSource fiber = parse_cylinder(support::read_corpus("trefoil_fiber.cyl"));
  o.require(factorization_check(fiber.presentation, *fiber.rho1, knot).ok, "factorization");
  for (int g = 1; g <= 3; ++g) {
    const LaurentPolynomial lambda = LaurentPolynomial::variable(2 * g + 1, 2 * g + 1);
    const LaurentPolynomial base = LaurentPolynomial::constant(2 * g + 1, 1) - lambda;
    o.require(eq_up_to_unit(mapping_torus_alexander(Endomorphism::identity(2 * g), g),
                            LaurentFraction(base.pow(2 * g - 2)))
                  .has_value(),
              "mapping torus of the identity, g=" + std::to_string(g));
  }
  if (o.pass) o.detail = "trefoil three ways, factorization, identity mapping tori g=1..3";
  return o;
}

Outcome nilpotent_oracle() {
  Outcome o;
  Rng rng(support::seed(8001));
  int pairs = 0, agree_true = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Word a = random_word(rng, 2, 16);
    Word b = random_word(rng, 2, 16);
    if (trial % 4 == 1) b = a * commutator(random_word(rng, 2, 4), random_word(rng, 2, 4));
    if (trial % 4 == 2) b = a * commutator(commutator(random_word(rng, 2, 3), random_word(rng, 2, 3)), random_word(rng, 2, 3));
    for (int k = 1; k <= 3; ++k) {
      const bool oracle = support::collected_equal(a, b, k);
      o.require(nilpotent_equal(a, b, 2, k) == oracle, "N_" + std::to_string(k) + " equality");
      agree_true += oracle;
    }
    ++pairs;
  }
  // basic commutators of exact weight 2, 3, 4
  const Word x1{1}, x2{2}, c2 = commutator(x1, x2);
  const std::vector<std::vector<Word>> basic = {
      {c2},
      {commutator(c2, x1), commutator(c2, x2)},
      {commutator(commutator(c2, x1), x1), commutator(commutator(c2, x2), x2), commutator(commutator(c2, x1), x2)}};
  int endos = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> weight(2, 4), which(0, 2);
    const int w1 = weight(rng), w2 = weight(rng);
    auto element = [&](int w) {
      const auto& list = basic[static_cast<std::size_t>(w - 2)];
      const Word c = random_word(rng, 2, 5);
      return c * list[static_cast<std::size_t>(which(rng)) % list.size()] * c.inverse();
    };
    const Endomorphism phi(2, {x1 * element(w1), x2 * element(w2)});
    const int depth = std::min(w1, w2);
    for (int k = 1; k + 1 <= depth && k <= 3; ++k) {
      bool zero = true;
      for (const auto& t : johnson_tau(phi, k)) zero = zero && t.is_zero();
      o.require(zero == (depth >= k + 2), "tau_" + std::to_string(k) + " at depth " + std::to_string(depth));
    }
    ++endos;
  }
  if (o.pass)
    o.detail = std::to_string(pairs) + " word pairs (" + std::to_string(agree_true) + " equal cases), " +
               std::to_string(endos) + " filtered endomorphisms";
  return o;
}

Outcome earle_cocycle() {
  Outcome o;
  std::vector<std::pair<int, Endomorphism>> fixing;
  for (int g = 1; g <= 3; ++g)
    for (const auto& t : twist_catalogue(g)) fixing.emplace_back(g, t);
  fixing.emplace_back(1, parse_endomorphism(support::read_corpus("trefoil_monodromy.endo")));
  Rng rng(support::seed(9001));
  for (int g = 1; g <= 3; ++g)
    for (int i = 0; i < 5; ++i) fixing.emplace_back(g, random_twist_product(rng, g, 3));
  int monomials = 0;
  for (const auto& [g, phi] : fixing) {
    o.require(fixes_boundary(phi, g), "boundary fixed");
    const LaurentPolynomial d = determinant(magnus_abelian(phi));
    o.require(is_signed_monomial(d), "det is a signed monomial");
    const Unit u = earle_det(phi, g);
    o.require(d == LaurentPolynomial::monomial(u.monomial, u.sign), "earle_det agrees with the determinant");
    ++monomials;
  }
  int pairs = 0;
  for (int g = 1; g <= 3; ++g) {
    const auto cat = twist_catalogue(g);
    for (const auto& phi : cat)
      for (const auto& psi : cat) {
        const Unit kp = earle_det(phi, g), kq = earle_det(psi, g), kpq = earle_det(compose(phi, psi), g);
        const IntMatrix sigma = homology_action(phi);
        Exponent expected = kp.monomial;
        for (std::size_t i = 0; i < expected.size(); ++i)
          for (std::size_t j = 0; j < expected.size(); ++j) expected[i] += static_cast<int>(sigma(i, j)) * kq.monomial[j];
        o.require(kpq.monomial == expected, "additive cocycle law");
        o.require(kpq.sign == kp.sign * kq.sign, "sign is multiplicative");
        ++pairs;
      }
  }
  if (o.pass)
    o.detail = std::to_string(monomials) + " boundary-fixing automorphisms, " + std::to_string(pairs) + " catalogue pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "string-link cylinder golden values", 1000, golden_string_link},
      {2, "Seifert surface cylinders golden values", 1000, golden_seifert},
      {3, "Fox derivative properties", 10000, fox_properties},
      {4, "twisted symplecticity", 30000, symplecticity},
      {5, "crossed homomorphism laws", 0, crossed_laws},
      {6, "torsion and Magnus determinant relation", 0, rhat_relation},
      {7, "Alexander polynomial consistency", 2000, alexander_consistency},
      {8, "nilpotent quotient oracle", 0, nilpotent_oracle},
      {9, "determinant cocycle", 0, earle_cocycle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.budget_ms > 0 && ms > c.budget_ms) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_ms)) + " ms budget)";
    }
    failures += !o.pass;
    std::printf("criterion %d %s: %s - %s [%.1f ms]\n", c.number, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), ms);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
