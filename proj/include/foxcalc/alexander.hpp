#pragma once

#include <vector>

#include "foxcalc/cylinder.hpp"

namespace foxcalc {

/// Alexander polynomial from a Wirtinger-type presentation with n generators
/// and n-1 (or n, the last one then dropped) relators, every generator a
/// meridian. Returned with lowest exponent 0 and positive leading coefficient.
LaurentPolynomial alexander_knot(const GroupPresentation& p);

/// Boundary mapping torus: generators x1..x2g, then the suspension lambda;
/// relators x_i lambda phi(x_i)^-1 lambda^-1. With `closed`, the boundary word
/// is added as a relator.
GroupPresentation mapping_torus_presentation(const Endomorphism& phi, int genus, bool closed = false);
/// Relators x_i phi(x_i)^-1.
GroupPresentation closure_presentation(const Endomorphism& phi, int genus);

/// det(lambda I - bar r_a(phi)) / (1 - lambda)^2 over Z[H x <lambda>]; needs a
/// trivial action on H. The last variable is lambda.
LaurentFraction mapping_torus_alexander(const Endomorphism& phi, int genus);
std::vector<std::string> mapping_torus_variable_names(int genus);

/// det(I - t sigma(phi)), origin-normalized.
LaurentPolynomial fibered_alexander(const Endomorphism& phi, int genus);

struct FactorizationResult {
  bool ok = false;
  LaurentFraction predicted;  // det(rho(A;B)) * det(I - t r_rho), one variable
};

/// Compares delta with det(rho(A;B)) det(I - t r_rho(M)) up to +-t^k.
FactorizationResult factorization_check(const AdmissiblePresentation& p, const std::vector<int>& rho1,
                                        const LaurentPolynomial& delta);

}  // namespace foxcalc
