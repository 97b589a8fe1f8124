#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foxcalc/magnus.hpp"

namespace foxcalc {

/// Deficiency-2g presentation of pi_1 of a homology cylinder. Generators are
/// numbered minus m1..m2g, then extra z1..zl, then plus p1..p2g.
struct AdmissiblePresentation {
  int genus = 0;
  int extra = 0;
  std::vector<Word> relators;

  int generator_count() const noexcept { return 4 * genus + extra; }
  int minus(int k) const noexcept { return k; }
  int extra_generator(int k) const noexcept { return 2 * genus + k; }
  int plus(int k) const noexcept { return 2 * genus + extra + k; }
  std::vector<std::string> labels() const;

  /// Relator count and letter ranges.
  void check() const;
  friend bool operator==(const AdmissiblePresentation&, const AdmissiblePresentation&) = default;
};

struct CylinderSource {
  AdmissiblePresentation presentation;
  std::optional<std::vector<int>> rho1;  // per generator exponent of t
};

/// `genus g`, `extra l`, `rel <word>` lines; names m<k>, z<k>, p<k> or
/// i-(g<k>), i+(g<k>); optional `rho1 e1 ... en`.
CylinderSource parse_cylinder(std::string_view text);
std::string to_string(const AdmissiblePresentation& p);

struct Diagnostics {
  bool ok = true;
  Coefficient trivial_det = 0;           // det over Z of the trivialized (A;B)
  std::vector<Coefficient> smith;        // invariant factors of the abelianized relator matrix
  std::vector<std::string> messages;
};

Diagnostics validate(const AdmissiblePresentation& p);

/// Class in H (i+ basis) of every generator.
struct AbelianMarking {
  std::vector<Exponent> images;
};
AbelianMarking marking_q2(const AdmissiblePresentation& p);
/// Homology action: column j is the class of m_j.
IntMatrix homology_action(const AbelianMarking& marking, int genus);

struct FoxBlocks {
  LaurentMatrix a;  // 2g x (2g+l)
  LaurentMatrix b;  // l x (2g+l)
  LaurentMatrix c;  // 2g x (2g+l)
  LaurentMatrix stacked() const;
};
/// Bar Fox derivatives of the relators (columns) by the generator blocks
/// (rows), pushed to Z[Z^target_rank] through `images`.
FoxBlocks abc_matrices(const AdmissiblePresentation& p, const std::vector<Exponent>& images, int target_rank);
FoxBlocks abc_matrices(const AdmissiblePresentation& p);

/// r = N / den with den = det(A;B).
struct CylinderMagnus {
  LaurentMatrix numerator;
  LaurentPolynomial den;
  IntMatrix sigma;

  FractionMatrix entries() const;
  LaurentFraction det() const;
};

CylinderMagnus magnus_cylinder(const AdmissiblePresentation& p);
/// Same computation after x -> t^{rho[x]}; sigma is left empty.
CylinderMagnus magnus_cylinder_specialized(const AdmissiblePresentation& p, const std::vector<int>& rho);

/// det(A;B), meaningful up to +-H.
LaurentPolynomial torsion_plus(const AdmissiblePresentation& p);

struct CylinderReport {
  CylinderMagnus magnus;
  LaurentPolynomial torsion;  // unit-normalized representative
  Diagnostics diagnostics;
};
CylinderReport cylinder_report(const AdmissiblePresentation& p);

AdmissiblePresentation from_mapping_class(const Endomorphism& phi, int genus);
AdmissiblePresentation trivial_cylinder(int genus);

/// Stacks m on top of n: m's minus side is glued to n's plus side.
AdmissiblePresentation compose(const AdmissiblePresentation& m, const AdmissiblePresentation& n);

/// Removes an extra generator whenever a relator contains it exactly once.
AdmissiblePresentation eliminate_extras(const AdmissiblePresentation& p);

/// det r == bar(tau) / tau up to +-H.
bool rhat_relation_check(const AdmissiblePresentation& p);
bool rhat_relation_check(const CylinderMagnus& r);
/// bar(r)^T Jq r == ^sigma Jq over K_H.
bool check_symplectic_cylinder(const AdmissiblePresentation& p);
bool check_symplectic_cylinder(const CylinderMagnus& r, int genus);

/// r(MN) == r(M) ^sigma(M) r(N), exactly.
bool magnus_functorial(const CylinderMagnus& mn, const CylinderMagnus& m, const CylinderMagnus& n);
/// tau(MN) == tau(M) ^sigma(M) tau(N) up to +-H.
bool torsion_functorial(const LaurentPolynomial& mn, const LaurentPolynomial& m, const IntMatrix& sigma_m,
                        const LaurentPolynomial& n);

}  // namespace foxcalc
