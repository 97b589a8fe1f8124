#include "foxcalc/selftest.hpp"

#include <functional>

#include "foxcalc/alexander.hpp"
#include "foxcalc/nilpotent.hpp"

namespace foxcalc {

Word random_word(Rng& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return Word(std::move(letters));
}

FreeRingElement random_ring_element(Rng& rng, int rank, int max_terms, int max_length) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  FreeRingElement e(rank);
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) e.add_term(random_word(rng, rank, max_length), coeff(rng));
  return e;
}

Endomorphism random_endomorphism(Rng& rng, int rank, int max_length) {
  std::vector<Word> images;
  for (int i = 0; i < rank; ++i) images.push_back(random_word(rng, rank, max_length));
  return Endomorphism(rank, std::move(images));
}

Endomorphism random_twist_product(Rng& rng, int genus, int count) {
  const auto catalogue = twist_catalogue(genus);
  std::uniform_int_distribution<std::size_t> pick(0, catalogue.size() - 1);
  Endomorphism out = Endomorphism::identity(2 * genus);
  for (int i = 0; i < count; ++i) out = compose(out, catalogue[pick(rng)]);
  return out;
}

namespace {

using Check = std::function<std::string(Rng&)>;  // empty string on success

std::string fundamental_formula(Rng& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const Word w = random_word(rng, n, 20);
    FreeRingElement sum(n);
    for (int j = 1; j <= n; ++j)
      sum += fox_word(w, j, n) * (FreeRingElement(n, Word::generator(j)) - FreeRingElement::constant(n, 1));
    if (sum != FreeRingElement(n, w) - FreeRingElement::constant(n, 1)) return "fails for " + to_string(w);
  }
  return {};
}

std::string product_rule(Rng& rng) {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto g = random_ring_element(rng, n, 3, 6), h = random_ring_element(rng, n, 3, 6);
    for (int j = 1; j <= n; ++j)
      if (fox_ring(g * h, j) != fox_ring(g, j) * FreeRingElement::constant(n, h.trivializer()) + g * fox_ring(h, j))
        return "fails for " + to_string(g) + " and " + to_string(h);
  }
  return {};
}

std::string chain_rule(Rng& rng) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto phi = random_endomorphism(rng, n, 5);
    const auto r = chain_rule_check(phi, random_word(rng, n, 8));
    if (!r.ok) return r.detail;
  }
  return {};
}

std::string crossed_law(Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto phi = random_endomorphism(rng, n, 4), psi = random_endomorphism(rng, n, 4);
    if (magnus(compose(phi, psi)) != magnus(phi) * twist(magnus(psi), phi)) return "fails at rank " + std::to_string(n);
  }
  return {};
}

std::string symplecticity(Rng& rng) {
  for (int genus = 1; genus <= 2; ++genus)
    for (int trial = 0; trial < 5; ++trial) {
      const auto phi = random_twist_product(rng, genus, 3);
      if (!check_symplectic(phi, genus)) return "fails at genus " + std::to_string(genus);
    }
  return {};
}

std::string earle_cocycle(Rng& rng) {
  for (int trial = 0; trial < 10; ++trial) {
    const int genus = 1 + static_cast<int>(rng() % 2);
    const auto phi = random_twist_product(rng, genus, 2), psi = random_twist_product(rng, genus, 2);
    const Unit a = earle_det(phi, genus), b = earle_det(psi, genus), ab = earle_det(compose(phi, psi), genus);
    const IntMatrix s = homology_action(phi);
    Exponent expected = a.monomial;
    for (std::size_t i = 0; i < expected.size(); ++i)
      for (std::size_t j = 0; j < expected.size(); ++j) expected[i] += static_cast<int>(s(i, j)) * b.monomial[j];
    if (ab.monomial != expected) return "cocycle law fails";
  }
  return {};
}

std::string expansion_multiplicative(Rng& rng) {
  for (int trial = 0; trial < 30; ++trial) {
    const int cap = 2 + static_cast<int>(rng() % 3);
    const Word a = random_word(rng, 2, 8), b = random_word(rng, 2, 8);
    if (expansion(a * b, 2, cap) != expansion(a, 2, cap) * expansion(b, 2, cap)) return "fails for " + to_string(a);
  }
  return {};
}

std::string cylinder_laws(Rng& rng) {
  for (int trial = 0; trial < 4; ++trial) {
    const int genus = 1 + static_cast<int>(rng() % 2);
    const auto phi = random_twist_product(rng, genus, 2), psi = random_twist_product(rng, genus, 2);
    const auto m = from_mapping_class(phi, genus), n = from_mapping_class(psi, genus);
    const auto rm = magnus_cylinder(m), rn = magnus_cylinder(n), rmn = magnus_cylinder(compose(m, n));
    if (!magnus_functorial(rmn, rm, rn)) return "functoriality fails";
    if (!check_symplectic_cylinder(rmn, genus)) return "symplecticity fails";
    if (!rhat_relation_check(rmn)) return "torsion relation fails";
    if (rm.numerator != magnus_abelian(phi)) return "mapping-class cylinder disagrees with r_a";
  }
  return {};
}

std::string trefoil_consistency(Rng&) {
  const auto delta = fibered_alexander(trefoil_monodromy(), 1);
  const auto expected = parse_laurent("t^2 - t + 1", 1);
  if (!eq_up_to_unit(delta, expected)) return "fibered formula gives " + to_string(delta);
  return {};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"fox.fundamental_formula", fundamental_formula},
      {"fox.product_rule", product_rule},
      {"fox.chain_rule", chain_rule},
      {"magnus.crossed_law", crossed_law},
      {"magnus.symplecticity", symplecticity},
      {"magnus.earle_cocycle", earle_cocycle},
      {"nilpotent.expansion_multiplicative", expansion_multiplicative},
      {"cylinder.laws", cylinder_laws},
      {"alexander.trefoil", trefoil_consistency},
  };
  std::vector<SelftestCheck> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Rng rng(seed + i);
    SelftestCheck c{checks[i].first, false, {}};
    try {
      c.detail = checks[i].second(rng);
      c.passed = c.detail.empty();
    } catch (const Error& e) {
      c.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace foxcalc
