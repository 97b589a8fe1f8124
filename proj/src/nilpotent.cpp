#include "foxcalc/nilpotent.hpp"

#include <cstdlib>

namespace foxcalc {

namespace {

struct DegLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

void check_cap(int cap, int max_cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "degree cap must be at least 1");
  if (cap > max_cap)
    throw Error(ErrorCode::InvalidArgument, "degree cap " + std::to_string(cap) + " exceeds the limit " + std::to_string(max_cap));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int cap) : rank_(rank), cap_(cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "degree cap must be at least 1");
}

TruncatedSeries TruncatedSeries::one(int rank, int cap) {
  TruncatedSeries s(rank, cap);
  s.add_term({}, 1);
  return s;
}

bool TruncatedSeries::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

Coefficient TruncatedSeries::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int TruncatedSeries::lowest_nonconstant_degree() const {
  int d = cap_;
  for (const auto& [m, c] : terms_)
    if (!m.empty() && static_cast<int>(m.size()) < d) d = static_cast<int>(m.size());
  return d;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int degree) const {
  TruncatedSeries out(rank_, cap_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == degree) out.terms_.emplace(m, c);
  return out;
}

void TruncatedSeries::add_term(const Monomial& m, Coefficient c) {
  if (c == 0 || static_cast<int>(m.size()) >= cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& b) {
  if (rank_ != b.rank_ || cap_ != b.cap_) throw Error(ErrorCode::RankMismatch, "series of different rank or cap");
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& b) {
  if (rank_ != b.rank_ || cap_ != b.cap_) throw Error(ErrorCode::RankMismatch, "series of different rank or cap");
  for (const auto& [m, c] : b.terms_) add_term(m, checked_sub(0, c));
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank_ != b.rank_ || a.cap_ != b.cap_) throw Error(ErrorCode::RankMismatch, "series of different rank or cap");
  TruncatedSeries out(a.rank_, a.cap_);
  for (const auto& [m, c] : a.terms_)
    for (const auto& [n, d] : b.terms_) {
      if (static_cast<int>(m.size() + n.size()) >= a.cap_) continue;
      auto mn = m;
      mn.insert(mn.end(), n.begin(), n.end());
      out.add_term(mn, checked_mul(c, d));
    }
  return out;
}

void TruncatedSeries::multiply_letter(int letter) {
  const int i = std::abs(letter);
  if (i < 1 || i > rank_) throw Error(ErrorCode::RankMismatch, "letter outside the series rank");
  Terms next;
  for (const auto& [m, c] : terms_) {
    // x -> 1 + X, x^-1 -> 1 - X + X^2 - ...
    auto mono = m;
    Coefficient sign = 1;
    while (static_cast<int>(mono.size()) < cap_) {
      const Coefficient v = checked_mul(sign, c);
      auto [it, inserted] = next.try_emplace(mono, v);
      if (!inserted) it->second = checked_add(it->second, v);
      mono.push_back(i);
      if (letter > 0) {
        if (static_cast<int>(mono.size()) < cap_) {
          auto [jt, ins] = next.try_emplace(mono, c);
          if (!ins) jt->second = checked_add(jt->second, c);
        }
        break;
      }
      sign = -sign;
    }
  }
  terms_.clear();
  for (auto& [m, c] : next)
    if (c != 0) terms_.emplace(m, c);
}

TruncatedSeries expansion(const Word& w, int rank, int cap, int max_cap) {
  check_cap(cap, max_cap);
  if (w.max_index() > rank) throw Error(ErrorCode::RankMismatch, "word exceeds the free group rank");
  TruncatedSeries s = TruncatedSeries::one(rank, cap);
  for (int l : w.letters()) s.multiply_letter(l);
  return s;
}

bool nilpotent_equal(const Word& a, const Word& b, int rank, int k, int max_cap) {
  return expansion(a * b.inverse(), rank, k, max_cap).is_one();
}

int filtration_depth(const Endomorphism& phi, int cap, int max_cap) {
  check_cap(cap, max_cap);
  int depth = cap;
  for (int i = 1; i <= phi.rank(); ++i) {
    const Word d = phi.image(i) * Word::generator(i, -1);
    depth = std::min(depth, expansion(d, phi.rank(), cap, max_cap).lowest_nonconstant_degree());
  }
  return depth;
}

std::vector<TruncatedSeries> johnson_tau(const Endomorphism& phi, int k, int max_cap) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Johnson homomorphism index must be at least 1");
  const int cap = k + 2;
  check_cap(cap, max_cap);
  if (filtration_depth(phi, cap, max_cap) < k + 1)
    throw Error(ErrorCode::DepthPrecondition, "tau_" + std::to_string(k) + " needs filtration depth at least " + std::to_string(k + 1));
  std::vector<TruncatedSeries> out;
  for (int i = 1; i <= phi.rank(); ++i) {
    const Word d = phi.image(i) * Word::generator(i, -1);
    out.push_back(expansion(d, phi.rank(), cap, max_cap).homogeneous_part(k + 1));
  }
  return out;
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::map<std::vector<int>, Coefficient, DegLex> ordered(s.terms().begin(), s.terms().end());
  std::string out;
  for (const auto& [m, c] : ordered) {
    std::string mono;
    for (int i : m) {
      if (!mono.empty()) mono += '*';
      mono += "X" + std::to_string(i);
    }
    std::string term;
    if (mono.empty()) term = std::to_string(c);
    else if (c == 1) term = mono;
    else if (c == -1) term = "-" + mono;
    else term = std::to_string(c) + "*" + mono;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace foxcalc
