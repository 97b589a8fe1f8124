#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "foxcalc/magnus.hpp"

namespace foxcalc {

FreeMatrix magnus(const Endomorphism& phi) {
  const int n = phi.rank();
  FreeMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), FreeRingElement(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = fox_word(phi.image(j), i, n).bar();
  return m;
}

LaurentMatrix magnus_abelian(const Endomorphism& phi) {
  const int n = phi.rank();
  LaurentMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), LaurentPolynomial(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = fox_abelian(phi.image(j), i, n).bar();
  return m;
}

FreeMatrix twist(const FreeMatrix& m, const Endomorphism& phi) {
  return m.map([&phi](const FreeRingElement& e) { return e.apply(phi); });
}

IntMatrix homology_action(const Endomorphism& phi) {
  const auto n = static_cast<std::size_t>(phi.rank());
  IntMatrix s(n, n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (int l : phi.images()[j].letters()) s(static_cast<std::size_t>(std::abs(l) - 1), j) += l > 0 ? 1 : -1;
  return s;
}

std::vector<Exponent> column_images(const IntMatrix& sigma) {
  std::vector<Exponent> out;
  for (std::size_t j = 0; j < sigma.cols(); ++j) {
    Exponent e(sigma.rows());
    for (std::size_t i = 0; i < sigma.rows(); ++i) e[i] = static_cast<int>(sigma(i, j));
    out.push_back(e);
  }
  return out;
}

LaurentPolynomial twist(const LaurentPolynomial& p, const IntMatrix& sigma) {
  return p.substitute(column_images(sigma), static_cast<int>(sigma.rows()));
}

LaurentMatrix twist(const LaurentMatrix& m, const IntMatrix& sigma) {
  const auto images = column_images(sigma);
  const int rank = static_cast<int>(sigma.rows());
  return m.map([&](const LaurentPolynomial& p) { return p.substitute(images, rank); });
}

IntMatrix reduce_trivial(const FreeMatrix& m) { return trivialize(m); }

LaurentMatrix reduce_abelian(const FreeMatrix& m) { return abelianize(m); }

LaurentMatrix reduce_specialized(const FreeMatrix& m, const std::vector<int>& exponents, int target_rank) {
  return m.map([&](const FreeRingElement& e) { return e.abelianize().specialize(exponents, target_rank); });
}

// Braids ---------------------------------------------------------------------

Endomorphism artin_generator(int crossing, int strands) {
  const int i = std::abs(crossing);
  if (crossing == 0 || i >= strands) throw Error(ErrorCode::IndexOutOfRange, "crossing index outside 1..n-1");
  std::vector<Word> images;
  for (int k = 1; k <= strands; ++k) images.push_back(Word::generator(k));
  const Word xi = Word::generator(i), xj = Word::generator(i + 1);
  if (crossing > 0) {
    images[static_cast<std::size_t>(i - 1)] = xi * xj * xi.inverse();
    images[static_cast<std::size_t>(i)] = xi;
  } else {
    images[static_cast<std::size_t>(i - 1)] = xj;
    images[static_cast<std::size_t>(i)] = xj.inverse() * xi * xj;
  }
  return Endomorphism(strands, std::move(images));
}

Endomorphism braid_endomorphism(const std::vector<int>& braid, int strands) {
  if (strands < 1) throw Error(ErrorCode::InvalidArgument, "a braid needs at least one strand");
  Endomorphism out = Endomorphism::identity(strands);
  for (int c : braid) out = compose(out, artin_generator(c, strands));
  return out;
}

std::vector<int> braid_permutation(const std::vector<int>& braid, int strands) {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 1);
  for (int c : braid) {
    const int i = std::abs(c);
    if (c == 0 || i >= strands) throw Error(ErrorCode::IndexOutOfRange, "crossing index outside 1..n-1");
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  }
  return perm;
}

LaurentMatrix burau(const std::vector<int>& braid, int strands) {
  const Endomorphism phi = braid_endomorphism(braid, strands);
  return magnus_abelian(phi).map([strands](const LaurentPolynomial& p) {
    return p.specialize(std::vector<int>(static_cast<std::size_t>(strands), 1), 1);
  });
}

LaurentMatrix gassner(const std::vector<int>& pure_braid, int strands) {
  const auto perm = braid_permutation(pure_braid, strands);
  for (int k = 0; k < strands; ++k)
    if (perm[static_cast<std::size_t>(k)] != k + 1) throw Error(ErrorCode::NotPureBraid, "braid does not induce the identity permutation");
  return magnus_abelian(braid_endomorphism(pure_braid, strands));
}

// Surfaces -------------------------------------------------------------------

FreeMatrix jtilde(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  const int n = 2 * genus;
  const auto x = [n](int i, int e = 1) { return FreeRingElement(n, Word::generator(i, e)); };
  const FreeRingElement one = FreeRingElement::constant(n, 1);
  FreeMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), FreeRingElement(n));
  const auto at = [&m](int r, int c) -> FreeRingElement& { return m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)); };
  for (int i = 1; i <= genus; ++i) {
    const int bi = genus + i;
    at(i, i) = one - x(i);
    at(i, bi) = FreeRingElement(n, Word::generator(i) * Word::generator(bi, -1));
    at(bi, i) = one - x(i, -1) - x(bi);
    at(bi, bi) = one - x(bi, -1);
    for (int j = 1; j < i; ++j) {
      const int bj = genus + j;
      at(i, j) = (one - x(i)) * (one - x(j, -1));
      at(i, bj) = (one - x(i)) * (one - x(bj, -1));
      at(bi, j) = (one - x(bi)) * (one - x(j, -1));
      at(bi, bj) = (one - x(bi)) * (one - x(bj, -1));
    }
  }
  return m;
}

IntMatrix standard_symplectic(int genus) {
  const auto g = static_cast<std::size_t>(genus);
  IntMatrix j(2 * g, 2 * g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& x, int genus) {
  const IntMatrix j = standard_symplectic(genus);
  return x.transpose() * j * x == j;
}

bool check_symplectic(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  const FreeMatrix r = magnus(phi);
  const FreeMatrix jt = jtilde(genus);
  return bar_transpose(r) * jt * r == twist(jt, phi);
}

namespace {

Endomorphism handle_mixer(int genus, int i) {
  std::vector<Word> images;
  for (int k = 1; k <= 2 * genus; ++k) images.push_back(Word::generator(k));
  const Word a1 = Word::generator(i), a2 = Word::generator(i + 1);
  const Word b1 = Word::generator(genus + i), b2 = Word::generator(genus + i + 1);
  const auto set = [&images](int k, Word w) { images[static_cast<std::size_t>(k - 1)] = std::move(w); };
  set(i, a1 * a2.inverse() * b1);
  set(i + 1, b1.inverse() * a2 * b1);
  set(genus + i, b1.inverse() * a2 * b1 * a2.inverse() * b1);
  set(genus + i + 1, b2 * b1);
  return Endomorphism(2 * genus, std::move(images));
}

}  // namespace

std::vector<Endomorphism> twist_catalogue(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  const int n = 2 * genus;
  std::vector<Endomorphism> out;
  for (int i = 1; i <= genus; ++i) {
    auto ta = Endomorphism::identity(n).images();
    ta[static_cast<std::size_t>(genus + i - 1)] = Word::generator(genus + i) * Word::generator(i);
    out.emplace_back(n, ta);
    auto tb = Endomorphism::identity(n).images();
    tb[static_cast<std::size_t>(i - 1)] = Word::generator(i) * Word::generator(genus + i, -1);
    out.emplace_back(n, tb);
  }
  for (int i = 1; i < genus; ++i) out.push_back(handle_mixer(genus, i));
  for (const auto& phi : out) {
    if (!fixes_boundary(phi, genus)) throw Error(ErrorCode::Internal, "catalogue entry does not fix the boundary word");
    if (!is_symplectic(homology_action(phi), genus)) throw Error(ErrorCode::Internal, "catalogue entry is not symplectic on H");
  }
  return out;
}

Endomorphism trefoil_monodromy() {
  const auto cat = twist_catalogue(1);
  return compose(cat[0], cat[1]);
}

Unit earle_det(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  if (!fixes_boundary(phi, genus)) throw Error(ErrorCode::NotBoundaryFixing, "automorphism does not fix the boundary word");
  const LaurentPolynomial d = determinant(magnus_abelian(phi));
  if (!d.is_monomial() || std::llabs(d.leading().second) != 1)
    throw Error(ErrorCode::NotMonomial, "determinant " + to_string(d) + " is not a signed monomial");
  const auto [e, c] = d.leading();
  return Unit{c > 0 ? 1 : -1, e};
}

Coefficient intersection_pairing(const Exponent& x, const Exponent& y, int genus) {
  const auto g = static_cast<std::size_t>(genus);
  if (x.size() != 2 * g || y.size() != 2 * g) throw Error(ErrorCode::GenusMismatch, "homology classes must have 2g coordinates");
  Coefficient s = 0;
  for (std::size_t i = 0; i < g; ++i)
    s = checked_add(s, checked_sub(checked_mul(x[i], y[g + i]), checked_mul(x[g + i], y[i])));
  return s;
}

Coefficient mu_k_cup_k(const Endomorphism& phi, const Endomorphism& psi, int genus) {
  const Unit kphi = earle_det(phi, genus);
  const Unit kpsi = earle_det(psi, genus);
  const IntMatrix sigma = homology_action(phi);
  Exponent moved(kpsi.monomial.size(), 0);
  for (std::size_t i = 0; i < moved.size(); ++i)
    for (std::size_t j = 0; j < moved.size(); ++j) moved[i] += static_cast<int>(sigma(i, j)) * kpsi.monomial[j];
  return intersection_pairing(kphi.monomial, moved, genus);
}

bool check_G_condition(const LaurentMatrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  const int n = static_cast<int>(m.rows());
  if (m(0, 0).rank() != n) return false;
  const LaurentPolynomial one = LaurentPolynomial::constant(n, 1);
  for (int j = 1; j <= n; ++j) {
    LaurentPolynomial s(n);
    for (int i = 1; i <= n; ++i)
      s += (LaurentPolynomial::variable(n, i, -1) - one) * m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    if (s != LaurentPolynomial::variable(n, j, -1) - one) return false;
  }
  return true;
}

std::vector<LaurentPolynomial> invariant_vector(int genus) {
  const int n = 2 * genus;
  const Word zeta = boundary_word(genus);
  std::vector<LaurentPolynomial> v;
  for (int j = 1; j <= n; ++j) v.push_back(fox_abelian(zeta, j, n).bar());
  return v;
}

}  // namespace foxcalc
