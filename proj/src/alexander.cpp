#include "foxcalc/alexander.hpp"

#include <cstdlib>

namespace foxcalc {

LaurentPolynomial alexander_knot(const GroupPresentation& p_in) {
  GroupPresentation p = p_in;
  p.check();
  const int n = p.rank;
  if (n < 1) throw Error(ErrorCode::DegeneratePresentation, "a knot group needs at least one generator");
  if (static_cast<int>(p.relators.size()) == n) p.relators.pop_back();
  if (static_cast<int>(p.relators.size()) != n - 1)
    throw Error(ErrorCode::DegeneratePresentation, "expected n-1 or n relators for n generators");
  for (const auto& r : p.relators) {
    int sum = 0;
    for (int l : r.letters()) sum += l > 0 ? 1 : -1;
    if (sum != 0) throw Error(ErrorCode::DegeneratePresentation, "relator " + to_string(r) + " has nonzero exponent sum");
  }
  const auto k = static_cast<std::size_t>(n - 1);
  if (k == 0) return LaurentPolynomial::constant(1, 1);
  const std::vector<Exponent> meridian(static_cast<std::size_t>(n), Exponent{1});
  LaurentMatrix m(k, k, LaurentPolynomial(1));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) m(i, j) = fox_mapped(p.relators[j], static_cast<int>(i) + 1, meridian, 1).bar();
  const LaurentPolynomial d = determinant(m);
  if (d.is_zero()) throw Error(ErrorCode::DegeneratePresentation, "Fox matrix is singular");
  if (std::llabs(d.trivializer()) != 1)
    throw Error(ErrorCode::DegeneratePresentation, "determinant does not evaluate to +-1 at t = 1; not a knot presentation");
  return origin_normalized(d);
}

GroupPresentation mapping_torus_presentation(const Endomorphism& phi, int genus, bool closed) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  if (!fixes_boundary(phi, genus)) throw Error(ErrorCode::NotBoundaryFixing, "automorphism does not fix the boundary word");
  const int n = 2 * genus;
  GroupPresentation p;
  p.rank = n + 1;
  const Word lambda = Word::generator(n + 1);
  for (int i = 1; i <= n; ++i)
    p.relators.push_back(Word::generator(i) * lambda * phi.image(i).inverse() * lambda.inverse());
  if (closed) p.relators.push_back(boundary_word(genus));
  for (int i = 1; i <= n; ++i) p.labels.push_back("x" + std::to_string(i));
  p.labels.emplace_back("l");
  return p;
}

GroupPresentation closure_presentation(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  if (!fixes_boundary(phi, genus)) throw Error(ErrorCode::NotBoundaryFixing, "automorphism does not fix the boundary word");
  GroupPresentation p;
  p.rank = 2 * genus;
  for (int i = 1; i <= p.rank; ++i) p.relators.push_back(Word::generator(i) * phi.image(i).inverse());
  return p;
}

std::vector<std::string> mapping_torus_variable_names(int genus) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * genus; ++i) names.push_back("g" + std::to_string(i));
  names.emplace_back("l");
  return names;
}

LaurentFraction mapping_torus_alexander(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  const int n = 2 * genus;
  if (homology_action(phi) != identity_matrix<Coefficient>(static_cast<std::size_t>(n), 0, 1))
    throw Error(ErrorCode::NontrivialHomology, "the formula needs a trivial action on homology");
  std::vector<Exponent> embed;
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n + 1), 0);
    e[static_cast<std::size_t>(i)] = 1;
    embed.push_back(e);
  }
  const LaurentPolynomial lambda = LaurentPolynomial::variable(n + 1, n + 1);
  const LaurentMatrix r = magnus_abelian(phi);
  LaurentMatrix m(r.rows(), r.cols(), LaurentPolynomial(n + 1));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      m(i, j) = -r(i, j).bar().substitute(embed, n + 1);
      if (i == j) m(i, j) += lambda;
    }
  const LaurentPolynomial one_minus = LaurentPolynomial::constant(n + 1, 1) - lambda;
  return LaurentFraction(determinant(m), one_minus * one_minus);
}

LaurentPolynomial fibered_alexander(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  if (!fixes_boundary(phi, genus)) throw Error(ErrorCode::NotBoundaryFixing, "automorphism does not fix the boundary word");
  const IntMatrix sigma = homology_action(phi);
  const LaurentPolynomial t = LaurentPolynomial::variable(1, 1);
  LaurentMatrix m(sigma.rows(), sigma.cols(), LaurentPolynomial(1));
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    for (std::size_t j = 0; j < sigma.cols(); ++j) {
      m(i, j) = -sigma(i, j) * t;
      if (i == j) m(i, j) += LaurentPolynomial::constant(1, 1);
    }
  return origin_normalized(determinant(m));
}

FactorizationResult factorization_check(const AdmissiblePresentation& p, const std::vector<int>& rho1,
                                        const LaurentPolynomial& delta) {
  if (delta.rank() != 1) throw Error(ErrorCode::RankMismatch, "the Alexander polynomial must be in one variable");
  p.check();
  if (static_cast<int>(rho1.size()) != p.generator_count())
    throw Error(ErrorCode::RhoInconsistent, "rho1 needs one exponent per generator");
  for (const auto& r : p.relators) {
    long long deg = 0;
    for (int l : r.letters()) deg += (l > 0 ? 1 : -1) * rho1[static_cast<std::size_t>(std::abs(l) - 1)];
    if (deg != 0) throw Error(ErrorCode::RhoInconsistent, "relator " + to_string(r, p.labels()) + " has nonzero t-degree");
  }
  const Diagnostics d = validate(p);
  if (!d.ok) throw Error(ErrorCode::InvalidCylinder, "not a homology cylinder presentation");
  const CylinderMagnus r = magnus_cylinder_specialized(p, rho1);
  // det(rho(A;B)) * det(I - t N/den) = det(den I - t N) / den^(2g-1)
  const LaurentPolynomial t = LaurentPolynomial::variable(1, 1);
  LaurentMatrix m(r.numerator.rows(), r.numerator.cols(), LaurentPolynomial(1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) = -(t * r.numerator(i, j));
      if (i == j) m(i, j) += r.den;
    }
  FactorizationResult out;
  out.predicted = LaurentFraction(determinant(m), r.den.pow(static_cast<int>(m.rows()) - 1));
  out.ok = eq_up_to_unit(out.predicted, LaurentFraction(delta)).has_value();
  return out;
}

}  // namespace foxcalc
