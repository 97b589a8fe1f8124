#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foxcalc/word.hpp"

namespace foxcalc {

using Exponent = std::vector<int>;

/// Total degree first, then lexicographic. Translation invariant, so leading
/// terms of f and m*f correspond.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class LaurentPolynomial;

/// Element of the integral group ring Z[F_n].
class FreeRingElement {
 public:
  using Terms = std::map<Word, Coefficient>;

  explicit FreeRingElement(int rank = 0) : rank_(rank) {}
  FreeRingElement(int rank, const Word& w, Coefficient c = 1);
  static FreeRingElement constant(int rank, Coefficient c);

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const Word& w) const;

  void add_term(const Word& w, Coefficient c);

  FreeRingElement& operator+=(const FreeRingElement& b);
  FreeRingElement& operator-=(const FreeRingElement& b);
  friend FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b) { return a += b; }
  friend FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b) { return a -= b; }
  friend FreeRingElement operator-(const FreeRingElement& a);
  friend FreeRingElement operator*(const FreeRingElement& a, const FreeRingElement& b);
  friend FreeRingElement operator*(Coefficient c, const FreeRingElement& a);
  /// Right multiplication by a group element.
  friend FreeRingElement operator*(const FreeRingElement& a, const Word& w);
  friend FreeRingElement operator*(const Word& w, const FreeRingElement& a);
  friend bool operator==(const FreeRingElement&, const FreeRingElement&) = default;

  FreeRingElement bar() const;
  /// Ring map induced by a group endomorphism.
  FreeRingElement apply(const Endomorphism& phi) const;
  Coefficient trivializer() const;
  LaurentPolynomial abelianize() const;

 private:
  void check_rank(const FreeRingElement& b) const;
  int rank_;
  Terms terms_;
};

/// Element of Z[Z^n] = Z[g1^{+-1}, ..., gn^{+-1}].
class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Coefficient, GradedLex>;

  explicit LaurentPolynomial(int rank = 0) : rank_(rank) {}
  static LaurentPolynomial constant(int rank, Coefficient c);
  static LaurentPolynomial monomial(const Exponent& e, Coefficient c = 1);
  static LaurentPolynomial variable(int rank, int index, int power = 1);

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const noexcept { return terms_.size(); }
  Coefficient coefficient(const Exponent& e) const;

  /// Graded-lex greatest term. Requires nonzero.
  std::pair<Exponent, Coefficient> leading() const;
  /// Componentwise minimum exponent over the support. Requires nonzero.
  Exponent min_exponent() const;
  Coefficient content() const;

  void add_term(const Exponent& e, Coefficient c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& b);
  LaurentPolynomial& operator-=(const LaurentPolynomial& b);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(Coefficient c, const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  LaurentPolynomial pow(int n) const;
  LaurentPolynomial bar() const;
  LaurentPolynomial shifted(const Exponent& by) const;
  /// Divides every coefficient by c, which must divide them all.
  LaurentPolynomial divided_by(Coefficient c) const;
  /// Monomial substitution g_j -> images[j-1] into Z[Z^target_rank].
  LaurentPolynomial substitute(const std::vector<Exponent>& images, int target_rank) const;
  /// g_j -> t^{exponents[j-1]} in one variable.
  LaurentPolynomial specialize(const std::vector<int>& exponents, int target_rank = 1) const;
  Coefficient trivializer() const;

  /// Exact quotient in the Laurent ring, or nullopt if d does not divide.
  std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& d) const;

 private:
  void check_rank(const LaurentPolynomial& b) const;
  int rank_;
  Terms terms_;
};

/// Element of the fraction field of Z[Z^n]. Kept with the content gcd and the
/// denominator's monomial factor removed; equality is by cross multiplication.
class LaurentFraction {
 public:
  explicit LaurentFraction(int rank = 0) : num_(rank), den_(LaurentPolynomial::constant(rank, 1)) {}
  LaurentFraction(LaurentPolynomial num);  // NOLINT(google-explicit-constructor)
  LaurentFraction(LaurentPolynomial num, LaurentPolynomial den);
  static LaurentFraction constant(int rank, Coefficient c) { return LaurentFraction(LaurentPolynomial::constant(rank, c)); }

  int rank() const noexcept { return num_.rank(); }
  const LaurentPolynomial& num() const noexcept { return num_; }
  const LaurentPolynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  LaurentFraction& operator+=(const LaurentFraction& b);
  LaurentFraction& operator-=(const LaurentFraction& b);
  LaurentFraction& operator*=(const LaurentFraction& b);
  LaurentFraction& operator/=(const LaurentFraction& b);
  friend LaurentFraction operator+(LaurentFraction a, const LaurentFraction& b) { return a += b; }
  friend LaurentFraction operator-(LaurentFraction a, const LaurentFraction& b) { return a -= b; }
  friend LaurentFraction operator*(LaurentFraction a, const LaurentFraction& b) { return a *= b; }
  friend LaurentFraction operator/(LaurentFraction a, const LaurentFraction& b) { return a /= b; }
  friend LaurentFraction operator-(const LaurentFraction& a);
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b);

  LaurentFraction inverse() const;
  LaurentFraction bar() const;
  LaurentFraction substitute(const std::vector<Exponent>& images, int target_rank) const;

 private:
  void normalize();
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

/// A unit +-m of Z[H].
struct Unit {
  int sign = 1;
  Exponent monomial;
  friend bool operator==(const Unit&, const Unit&) = default;
};

/// Returns u with f == u * g, if one exists.
std::optional<Unit> eq_up_to_unit(const LaurentPolynomial& f, const LaurentPolynomial& g);
std::optional<Unit> eq_up_to_unit(const LaurentFraction& f, const LaurentFraction& g);

/// Representative of p modulo +-monomials with its graded-lex leading term
/// moved to the origin and made positive.
LaurentPolynomial unit_normalized(const LaurentPolynomial& p);
/// Representative with the componentwise minimum exponent at zero and a
/// positive leading coefficient (the usual form for Alexander polynomials).
LaurentPolynomial origin_normalized(const LaurentPolynomial& p);
Unit unit_normalizer(const LaurentPolynomial& p);

// Printing and parsing -----------------------------------------------------

/// Default names: "t" for rank 1, otherwise g1..gn.
std::vector<std::string> default_variable_names(int rank);

std::string to_string(const LaurentPolynomial& p, const std::vector<std::string>& names = {});
std::string to_string(const LaurentFraction& f, const std::vector<std::string>& names = {});
/// Free ring elements print as sums of c*g1*g2^-1 style terms in shortlex order.
std::string to_string(const FreeRingElement& e, const std::vector<std::string>& names = {});

LaurentPolynomial parse_laurent(std::string_view text, int rank, const std::vector<std::string>& names = {});
LaurentFraction parse_fraction(std::string_view text, int rank, const std::vector<std::string>& names = {});
FreeRingElement parse_free_ring(std::string_view text, int rank, const std::vector<std::string>& names = {});

}  // namespace foxcalc
