#pragma once

#include <string>
#include <vector>

#include "foxcalc/linalg.hpp"

namespace foxcalc {

/// Free derivative d w / d x_j in Z[F_rank].
FreeRingElement fox_word(const Word& w, int j, int rank);
FreeRingElement fox_ring(const FreeRingElement& e, int j);
std::vector<FreeRingElement> fox_gradient(const Word& w, int rank);

/// The derivative pushed through a monomial map x_k -> images[k-1] of
/// Z[F_rank] into Z[Z^target_rank], computed without forming the free-ring value.
LaurentPolynomial fox_mapped(const Word& w, int j, const std::vector<Exponent>& images, int target_rank);

/// Abelianized derivative (images are the standard basis).
LaurentPolynomial fox_abelian(const Word& w, int j, int rank);

/// Matrix (d r_c / d x_r) with rows indexed by generators and columns by relators.
FreeMatrix fox_jacobian(const std::vector<Word>& relators, int rank);

struct ChainRuleResult {
  bool ok = true;
  int failing_generator = 0;
  std::string detail;
};

/// Checks d phi(w)/d x_j == sum_k phi(d w/d x_k) * d phi(x_k)/d x_j for every j.
ChainRuleResult chain_rule_check(const Endomorphism& phi, const Word& w);

/// True when every derivative of v maps to zero under the abelian
/// representation x_k -> t^{rho_exponents[k-1]} (all zeros gives the trivializer).
bool derivatives_vanish_under(const std::vector<int>& rho_exponents, const Word& v);

}  // namespace foxcalc
