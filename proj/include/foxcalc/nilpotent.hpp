#pragma once

#include <map>
#include <string>
#include <vector>

#include "foxcalc/word.hpp"

namespace foxcalc {

/// Element of Z<<X_1..X_n>> modulo monomials of degree >= cap. A monomial is
/// the sequence of variable indices; the empty sequence is the constant term.
class TruncatedSeries {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Coefficient>;

  TruncatedSeries(int rank, int cap);
  static TruncatedSeries one(int rank, int cap);

  int rank() const noexcept { return rank_; }
  int cap() const noexcept { return cap_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_one() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;
  /// Lowest degree of a nonconstant term, or cap if there is none.
  int lowest_nonconstant_degree() const;
  TruncatedSeries homogeneous_part(int degree) const;

  void add_term(const Monomial& m, Coefficient c);

  TruncatedSeries& operator+=(const TruncatedSeries& b);
  TruncatedSeries& operator-=(const TruncatedSeries& b);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Right multiplication by the expansion of x_i^{+-1}.
  void multiply_letter(int letter);

 private:
  int rank_;
  int cap_;
  Terms terms_;
};

inline constexpr int kDefaultMaxDegreeCap = 6;

/// x_i -> 1 + X_i, truncated below degree cap.
TruncatedSeries expansion(const Word& w, int rank, int cap, int max_cap = kDefaultMaxDegreeCap);

/// True iff a and b agree in N_k = F / Gamma^k.
bool nilpotent_equal(const Word& a, const Word& b, int rank, int k, int max_cap = kDefaultMaxDegreeCap);

/// Largest k <= cap with phi(x_i) x_i^-1 in Gamma^k for all i.
int filtration_depth(const Endomorphism& phi, int cap, int max_cap = kDefaultMaxDegreeCap);

/// Per generator, the degree-(k+1) part of the expansion of phi(x_i) x_i^-1.
/// Requires filtration depth >= k+1.
std::vector<TruncatedSeries> johnson_tau(const Endomorphism& phi, int k, int max_cap = kDefaultMaxDegreeCap);

/// Sum of c*X1*X2 style terms in deg-lex order; "0" when empty.
std::string to_string(const TruncatedSeries& s);

}  // namespace foxcalc
