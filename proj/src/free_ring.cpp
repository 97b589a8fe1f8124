#include <cstdlib>

#include "foxcalc/ring.hpp"

namespace foxcalc {

FreeRingElement::FreeRingElement(int rank, const Word& w, Coefficient c) : rank_(rank) {
  if (w.max_index() > rank) throw Error(ErrorCode::IndexOutOfRange, "word exceeds ring rank");
  add_term(w, c);
}

FreeRingElement FreeRingElement::constant(int rank, Coefficient c) { return FreeRingElement(rank, Word{}, c); }

Coefficient FreeRingElement::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FreeRingElement::add_term(const Word& w, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void FreeRingElement::check_rank(const FreeRingElement& b) const {
  if (rank_ != b.rank_) throw Error(ErrorCode::RankMismatch, "group ring elements of different rank");
}

FreeRingElement& FreeRingElement::operator+=(const FreeRingElement& b) {
  check_rank(b);
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

FreeRingElement& FreeRingElement::operator-=(const FreeRingElement& b) {
  check_rank(b);
  for (const auto& [w, c] : b.terms_) add_term(w, checked_sub(0, c));
  return *this;
}

FreeRingElement operator-(const FreeRingElement& a) {
  FreeRingElement out(a.rank_);
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, checked_sub(0, c));
  return out;
}

FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b) {
  a.check_rank(b);
  FreeRingElement out(a.rank_);
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) out.add_term(u * v, checked_mul(c, d));
  return out;
}

FreeRingElement operator*(Coefficient k, const FreeRingElement& a) {
  FreeRingElement out(a.rank_);
  if (k == 0) return out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, checked_mul(k, c));
  return out;
}

FreeRingElement operator*(const FreeRingElement& a, const Word& w) {
  FreeRingElement out(a.rank_);
  for (const auto& [u, c] : a.terms_) out.add_term(u * w, c);
  return out;
}

FreeRingElement operator*(const Word& w, const FreeRingElement& a) {
  FreeRingElement out(a.rank_);
  for (const auto& [u, c] : a.terms_) out.add_term(w * u, c);
  return out;
}

FreeRingElement FreeRingElement::bar() const {
  FreeRingElement out(rank_);
  for (const auto& [w, c] : terms_) out.add_term(w.inverse(), c);
  return out;
}

FreeRingElement FreeRingElement::apply(const Endomorphism& phi) const {
  if (phi.rank() != rank_) throw Error(ErrorCode::RankMismatch, "endomorphism rank differs from ring rank");
  FreeRingElement out(rank_);
  for (const auto& [w, c] : terms_) out.add_term(phi.apply(w), c);
  return out;
}

Coefficient FreeRingElement::trivializer() const {
  Coefficient s = 0;
  for (const auto& [w, c] : terms_) s = checked_add(s, c);
  return s;
}

LaurentPolynomial FreeRingElement::abelianize() const {
  LaurentPolynomial out(rank_);
  for (const auto& [w, c] : terms_) {
    Exponent e(static_cast<std::size_t>(rank_), 0);
    for (int l : w.letters()) e[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    out.add_term(e, c);
  }
  return out;
}

}  // namespace foxcalc
