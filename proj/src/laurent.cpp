#include <algorithm>
#include <numeric>

#include "foxcalc/ring.hpp"

namespace foxcalc {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  long long da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a < b;
}

namespace {

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(int rank, Coefficient c) {
  LaurentPolynomial p(rank);
  p.add_term(Exponent(static_cast<std::size_t>(rank), 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, Coefficient c) {
  LaurentPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(int rank, int index, int power) {
  if (index < 1 || index > rank) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponent e(static_cast<std::size_t>(rank), 0);
  e[static_cast<std::size_t>(index - 1)] = power;
  return monomial(e);
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPolynomial::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

Coefficient LaurentPolynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::pair<Exponent, Coefficient> LaurentPolynomial::leading() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "leading term of zero polynomial");
  const auto& [e, c] = *terms_.rbegin();
  return {e, c};
}

Exponent LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::Internal, "minimum exponent of zero polynomial");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Coefficient LaurentPolynomial::content() const {
  Coefficient g = 0;
  for (const auto& [e, c] : terms_) g = std::gcd(g, c);
  return g;
}

void LaurentPolynomial::add_term(const Exponent& e, Coefficient c) {
  if (c == 0) return;
  if (e.size() != static_cast<std::size_t>(rank_)) throw Error(ErrorCode::RankMismatch, "exponent vector length differs from rank");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::check_rank(const LaurentPolynomial& b) const {
  if (rank_ != b.rank_) throw Error(ErrorCode::RankMismatch, "Laurent polynomials of different rank");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& b) {
  check_rank(b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& b) {
  check_rank(b);
  for (const auto& [e, c] : b.terms_) add_term(e, checked_sub(0, c));
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) { return -1 * a; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_rank(b);
  LaurentPolynomial out(a.rank_);
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) out.add_term(add_exponents(e, f), checked_mul(c, d));
  return out;
}

LaurentPolynomial operator*(Coefficient k, const LaurentPolynomial& a) {
  LaurentPolynomial out(a.rank_);
  if (k == 0) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, checked_mul(k, c));
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(int n) const {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative power of a Laurent polynomial");
  LaurentPolynomial out = constant(rank_, 1);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int& x : f) x = -x;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& by) const {
  if (by.size() != static_cast<std::size_t>(rank_)) throw Error(ErrorCode::RankMismatch, "shift vector length differs from rank");
  LaurentPolynomial out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(add_exponents(e, by), c);
  return out;
}

LaurentPolynomial LaurentPolynomial::divided_by(Coefficient k) const {
  if (k == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  LaurentPolynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    if (c % k != 0) throw Error(ErrorCode::Internal, "inexact coefficient division");
    out.terms_.emplace(e, c / k);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute(const std::vector<Exponent>& images, int target_rank) const {
  if (images.size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorCode::RankMismatch, "substitution needs one image per variable");
  for (const auto& im : images)
    if (im.size() != static_cast<std::size_t>(target_rank)) throw Error(ErrorCode::RankMismatch, "image exponent has wrong length");
  LaurentPolynomial out(target_rank);
  for (const auto& [e, c] : terms_) {
    Exponent f(static_cast<std::size_t>(target_rank), 0);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0)
        for (std::size_t k = 0; k < f.size(); ++k) f[k] += e[j] * images[j][k];
    out.add_term(f, c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::specialize(const std::vector<int>& exponents, int target_rank) const {
  if (exponents.size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorCode::RankMismatch, "specialization needs one exponent per variable");
  if (target_rank < 1) throw Error(ErrorCode::InvalidArgument, "target rank must be positive");
  std::vector<Exponent> images;
  for (int x : exponents) {
    Exponent e(static_cast<std::size_t>(target_rank), 0);
    e[0] = x;
    images.push_back(e);
  }
  return substitute(images, target_rank);
}

Coefficient LaurentPolynomial::trivializer() const {
  Coefficient s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_divide(const LaurentPolynomial& d) const {
  check_rank(d);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  if (is_zero()) return LaurentPolynomial(rank_);
  // Move both into the polynomial ring with no monomial factor in the divisor;
  // an exact Laurent quotient is then an honest polynomial.
  Exponent dmin = d.min_exponent();
  Exponent nmin = min_exponent();
  Exponent dshift = dmin, nshift = nmin;
  for (auto& x : dshift) x = -x;
  for (auto& x : nshift) x = -x;
  const LaurentPolynomial dd = d.shifted(dshift);
  LaurentPolynomial r = shifted(nshift);
  const auto [dlead, dcoef] = dd.leading();
  LaurentPolynomial q(rank_);
  while (!r.is_zero()) {
    const auto [rlead, rcoef] = r.leading();
    Exponent step(rlead.size());
    for (std::size_t i = 0; i < step.size(); ++i) {
      step[i] = rlead[i] - dlead[i];
      if (step[i] < 0) return std::nullopt;
    }
    if (rcoef % dcoef != 0) return std::nullopt;
    const LaurentPolynomial t = monomial(step, rcoef / dcoef);
    q += t;
    r -= t * dd;
  }
  // q * dd == shifted(nshift), so the true quotient is q shifted by nmin - dmin.
  Exponent back(nmin.size());
  for (std::size_t i = 0; i < back.size(); ++i) back[i] = nmin[i] - dmin[i];
  return q.shifted(back);
}

// Units ---------------------------------------------------------------------

std::optional<Unit> eq_up_to_unit(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.rank() != g.rank()) throw Error(ErrorCode::RankMismatch, "comparing polynomials of different rank");
  if (f.is_zero() || g.is_zero()) {
    if (f.is_zero() && g.is_zero()) return Unit{1, Exponent(static_cast<std::size_t>(f.rank()), 0)};
    return std::nullopt;
  }
  if (f.size() != g.size()) return std::nullopt;
  const auto [fe, fc] = f.leading();
  const auto [ge, gc] = g.leading();
  int sign;
  if (fc == gc) sign = 1;
  else if (fc == -gc) sign = -1;
  else return std::nullopt;
  Exponent m(fe.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = fe[i] - ge[i];
  if (sign * g.shifted(m) == f) return Unit{sign, m};
  return std::nullopt;
}

std::optional<Unit> eq_up_to_unit(const LaurentFraction& f, const LaurentFraction& g) {
  return eq_up_to_unit(f.num() * g.den(), g.num() * f.den());
}

Unit unit_normalizer(const LaurentPolynomial& p) {
  if (p.is_zero()) return Unit{1, Exponent(static_cast<std::size_t>(p.rank()), 0)};
  auto [e, c] = p.leading();
  for (auto& x : e) x = -x;
  return Unit{c < 0 ? -1 : 1, e};
}

LaurentPolynomial unit_normalized(const LaurentPolynomial& p) {
  const Unit u = unit_normalizer(p);
  return u.sign * p.shifted(u.monomial);
}

LaurentPolynomial origin_normalized(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  Exponent m = p.min_exponent();
  for (auto& x : m) x = -x;
  const LaurentPolynomial q = p.shifted(m);
  return q.leading().second < 0 ? -q : q;
}

}  // namespace foxcalc
