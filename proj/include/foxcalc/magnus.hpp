#pragma once

#include <vector>

#include "foxcalc/fox.hpp"

namespace foxcalc {

/// r(phi)_{ij} = bar(d phi(x_j) / d x_i).
FreeMatrix magnus(const Endomorphism& phi);
/// Same matrix pushed to Z[H] without building free-ring entries.
LaurentMatrix magnus_abelian(const Endomorphism& phi);
/// Entrywise action of phi on a matrix over Z[F_n] (the twist ^phi M).
FreeMatrix twist(const FreeMatrix& m, const Endomorphism& phi);

/// Integer matrix of the induced map on H_1: column j is the class of phi(x_j).
IntMatrix homology_action(const Endomorphism& phi);
/// Exponent images of the basis under an integer matrix (columns).
std::vector<Exponent> column_images(const IntMatrix& sigma);
/// Entrywise action of an integer matrix on Z[H] (x_j -> class of column j).
LaurentMatrix twist(const LaurentMatrix& m, const IntMatrix& sigma);
LaurentPolynomial twist(const LaurentPolynomial& p, const IntMatrix& sigma);

IntMatrix reduce_trivial(const FreeMatrix& m);
LaurentMatrix reduce_abelian(const FreeMatrix& m);
LaurentMatrix reduce_specialized(const FreeMatrix& m, const std::vector<int>& exponents, int target_rank = 1);

// Braids ---------------------------------------------------------------------

/// Artin action of sigma_i^{+-1} on F_n.
Endomorphism artin_generator(int crossing, int strands);
/// sigma_{i1} sigma_{i2} ... acts as phi_{i1} o phi_{i2} o ...
Endomorphism braid_endomorphism(const std::vector<int>& braid, int strands);
std::vector<int> braid_permutation(const std::vector<int>& braid, int strands);
LaurentMatrix burau(const std::vector<int>& braid, int strands);
LaurentMatrix gassner(const std::vector<int>& pure_braid, int strands);

// Surfaces -------------------------------------------------------------------

/// The twisted symplectic form on Z[pi] of the genus-g surface with one boundary.
FreeMatrix jtilde(int genus);
/// J = [[0, I], [-I, 0]].
IntMatrix standard_symplectic(int genus);
bool is_symplectic(const IntMatrix& x, int genus);

/// bar(r)^T Jt r == ^phi Jt over Z[pi].
bool check_symplectic(const Endomorphism& phi, int genus);

/// Boundary-fixing automorphisms realizing Dehn twists: for each handle the
/// twists about a_i and b_i, then one handle-mixing map per adjacent pair.
std::vector<Endomorphism> twist_catalogue(int genus);
/// The g = 1 monodromy of the trefoil, T_a o T_b.
Endomorphism trefoil_monodromy();

/// det r_a(phi), required to be a single signed monomial.
Unit earle_det(const Endomorphism& phi, int genus);
/// mu(x, y) = sum_i x_i y_{g+i} - x_{g+i} y_i.
Coefficient intersection_pairing(const Exponent& x, const Exponent& y, int genus);
Coefficient mu_k_cup_k(const Endomorphism& phi, const Endomorphism& psi, int genus);

/// sum_i (x_i^-1 - 1) a_ij == x_j^-1 - 1 for every column j.
bool check_G_condition(const LaurentMatrix& m);

/// Abelianized bar Fox gradient of the boundary word.
std::vector<LaurentPolynomial> invariant_vector(int genus);

}  // namespace foxcalc
