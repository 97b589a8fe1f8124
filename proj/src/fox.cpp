#include <cstdlib>

#include "foxcalc/fox.hpp"

namespace foxcalc {

namespace {

void check_index(int j, int rank) {
  if (j < 1 || j > rank)
    throw Error(ErrorCode::IndexOutOfRange, "derivative index " + std::to_string(j) + " outside 1.." + std::to_string(rank));
}

}  // namespace

FreeRingElement fox_word(const Word& w, int j, int rank) {
  check_index(j, rank);
  if (w.max_index() > rank) throw Error(ErrorCode::RankMismatch, "word exceeds the free group rank");
  FreeRingElement out(rank);
  std::vector<int> prefix;
  prefix.reserve(w.length());
  for (int l : w.letters()) {
    if (l == j) {
      out.add_term(Word(prefix), 1);
    } else if (l == -j) {
      auto p = prefix;
      p.push_back(-j);
      out.add_term(Word(std::move(p)), -1);
    }
    prefix.push_back(l);
  }
  return out;
}

FreeRingElement fox_ring(const FreeRingElement& e, int j) {
  FreeRingElement out(e.rank());
  for (const auto& [w, c] : e.terms()) out += c * fox_word(w, j, e.rank());
  return out;
}

std::vector<FreeRingElement> fox_gradient(const Word& w, int rank) {
  std::vector<FreeRingElement> out;
  for (int j = 1; j <= rank; ++j) out.push_back(fox_word(w, j, rank));
  return out;
}

LaurentPolynomial fox_mapped(const Word& w, int j, const std::vector<Exponent>& images, int target_rank) {
  const int rank = static_cast<int>(images.size());
  check_index(j, rank);
  if (w.max_index() > rank) throw Error(ErrorCode::RankMismatch, "word exceeds the free group rank");
  LaurentPolynomial out(target_rank);
  Exponent prefix(static_cast<std::size_t>(target_rank), 0);
  const auto& img = images[static_cast<std::size_t>(j - 1)];
  for (int l : w.letters()) {
    const auto& step = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l == j) {
      out.add_term(prefix, 1);
    } else if (l == -j) {
      Exponent e = prefix;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] -= img[k];
      out.add_term(e, -1);
    }
    for (std::size_t k = 0; k < prefix.size(); ++k) prefix[k] += l > 0 ? step[k] : -step[k];
  }
  return out;
}

LaurentPolynomial fox_abelian(const Word& w, int j, int rank) {
  std::vector<Exponent> basis;
  for (int k = 0; k < rank; ++k) {
    Exponent e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(k)] = 1;
    basis.push_back(e);
  }
  return fox_mapped(w, j, basis, rank);
}

FreeMatrix fox_jacobian(const std::vector<Word>& relators, int rank) {
  FreeMatrix m(static_cast<std::size_t>(rank), relators.size(), FreeRingElement(rank));
  for (std::size_t c = 0; c < relators.size(); ++c)
    for (int r = 1; r <= rank; ++r) m(static_cast<std::size_t>(r - 1), c) = fox_word(relators[c], r, rank);
  return m;
}

ChainRuleResult chain_rule_check(const Endomorphism& phi, const Word& w) {
  const int n = phi.rank();
  const Word image = phi.apply(w);
  const auto outer = fox_gradient(w, n);
  std::vector<std::vector<FreeRingElement>> inner;
  for (int k = 1; k <= n; ++k) inner.push_back(fox_gradient(phi.image(k), n));
  for (int j = 1; j <= n; ++j) {
    const FreeRingElement lhs = fox_word(image, j, n);
    FreeRingElement rhs(n);
    for (int k = 1; k <= n; ++k) {
      const auto& d = outer[static_cast<std::size_t>(k - 1)];
      if (d.is_zero()) continue;
      rhs += d.apply(phi) * inner[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    }
    if (lhs != rhs)
      return {false, j, "lhs " + to_string(lhs) + " differs from rhs " + to_string(rhs)};
  }
  return {};
}

bool derivatives_vanish_under(const std::vector<int>& rho_exponents, const Word& v) {
  const int n = static_cast<int>(rho_exponents.size());
  std::vector<Exponent> images;
  for (int e : rho_exponents) images.push_back(Exponent{e});
  for (int j = 1; j <= n; ++j)
    if (!fox_mapped(v, j, images, 1).is_zero()) return false;
  return true;
}

}  // namespace foxcalc
