#include "foxcalc/cylinder.hpp"

#include <cstdlib>
#include <map>

#include "text_util.hpp"

namespace foxcalc {

std::vector<std::string> AdmissiblePresentation::labels() const {
  std::vector<std::string> out;
  for (int k = 1; k <= 2 * genus; ++k) out.push_back("m" + std::to_string(k));
  for (int k = 1; k <= extra; ++k) out.push_back("z" + std::to_string(k));
  for (int k = 1; k <= 2 * genus; ++k) out.push_back("p" + std::to_string(k));
  return out;
}

void AdmissiblePresentation::check() const {
  if (genus < 1) throw Error(ErrorCode::InvalidCylinder, "genus must be at least 1");
  if (extra < 0) throw Error(ErrorCode::InvalidCylinder, "negative extra generator count");
  if (static_cast<int>(relators.size()) != 2 * genus + extra)
    throw Error(ErrorCode::InvalidCylinder, "an admissible presentation needs 2g+l = " + std::to_string(2 * genus + extra) +
                                                " relators, got " + std::to_string(relators.size()));
  for (const auto& r : relators)
    if (r.max_index() > generator_count()) throw Error(ErrorCode::IndexOutOfRange, "relator uses an unknown generator");
}

// Text format ---------------------------------------------------------------

CylinderSource parse_cylinder(std::string_view text) {
  CylinderSource out;
  auto& p = out.presentation;
  bool have_genus = false, have_extra = false;
  std::vector<std::pair<std::string_view, std::size_t>> rels;
  std::optional<std::pair<std::string_view, std::size_t>> rho;
  for (const auto& line : detail::content_lines(text)) {
    const auto [key, rest] = detail::split_keyword(line.text);
    const auto where = "line " + std::to_string(line.number) + ": ";
    if (key == "genus" || key == "extra") {
      const auto v = detail::to_integer(rest);
      if (!v || *v < 0 || *v > 1000) throw ParseError(where + "bad value for '" + std::string(key) + "'", 0);
      if (key == "genus") {
        p.genus = static_cast<int>(*v);
        have_genus = true;
      } else {
        p.extra = static_cast<int>(*v);
        have_extra = true;
      }
    } else if (key == "rel") {
      rels.emplace_back(rest, line.number);
    } else if (key == "rho1") {
      rho.emplace(rest, line.number);
    } else {
      throw ParseError(where + "unknown keyword '" + std::string(key) + "'", 0);
    }
  }
  if (!have_genus) throw ParseError("missing 'genus' header", 0);
  if (!have_extra) p.extra = 0;
  std::map<std::string, int, std::less<>> names;
  const auto labels = p.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) names.emplace(labels[i], static_cast<int>(i) + 1);
  for (int k = 1; k <= 2 * p.genus; ++k) {
    names.emplace("i-(g" + std::to_string(k) + ")", p.minus(k));
    names.emplace("i+(g" + std::to_string(k) + ")", p.plus(k));
  }
  for (const auto& [body, number] : rels) {
    try {
      p.relators.push_back(parse_word_named(body, names));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), e.position());
    }
  }
  if (rho) {
    std::vector<int> exps;
    for (auto rest = rho->first; !rest.empty();) {
      const auto [tok, tail] = detail::split_keyword(rest);
      const auto v = detail::to_integer(tok);
      if (!v) throw ParseError("line " + std::to_string(rho->second) + ": bad rho1 exponent '" + std::string(tok) + "'", 0);
      exps.push_back(static_cast<int>(*v));
      rest = tail;
    }
    if (static_cast<int>(exps.size()) != p.generator_count())
      throw ParseError("line " + std::to_string(rho->second) + ": rho1 needs one exponent per generator", 0);
    out.rho1 = std::move(exps);
  }
  p.check();
  return out;
}

std::string to_string(const AdmissiblePresentation& p) {
  std::string out = "genus " + std::to_string(p.genus) + "\nextra " + std::to_string(p.extra) + "\n";
  const auto labels = p.labels();
  for (const auto& r : p.relators) {
    const auto body = to_string(r, labels);
    out += "rel " + (body.empty() ? "1" : body) + "\n";
  }
  return out;
}

// Homology --------------------------------------------------------------------

namespace {

IntMatrix exponent_sums(const AdmissiblePresentation& p) {
  IntMatrix e(p.relators.size(), static_cast<std::size_t>(p.generator_count()), 0);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int l : p.relators[r].letters()) e(r, static_cast<std::size_t>(std::abs(l) - 1)) += l > 0 ? 1 : -1;
  return e;
}

}  // namespace

Diagnostics validate(const AdmissiblePresentation& p) {
  Diagnostics d;
  try {
    p.check();
  } catch (const Error& e) {
    d.ok = false;
    d.messages.emplace_back(e.what());
    return d;
  }
  const IntMatrix e = exponent_sums(p);
  const auto mz = static_cast<std::size_t>(2 * p.genus + p.extra);
  d.trivial_det = determinant(e.block(0, 0, mz, mz));
  if (std::llabs(d.trivial_det) != 1) {
    d.ok = false;
    d.messages.push_back("trivialized (A;B) has determinant " + std::to_string(d.trivial_det) + ", not +-1");
  }
  const SmithForm s = smith_normal_form(e);
  d.smith = s.diagonal;
  bool free = s.rank == mz;
  for (Coefficient c : s.diagonal) free = free && c == 1;
  if (!free) {
    d.ok = false;
    d.messages.emplace_back("H_1 of the presentation is not free of rank 2g");
  }
  return d;
}

AbelianMarking marking_q2(const AdmissiblePresentation& p) {
  p.check();
  const IntMatrix e = exponent_sums(p);
  const auto g2 = static_cast<std::size_t>(2 * p.genus);
  const auto mz = g2 + static_cast<std::size_t>(p.extra);
  IntMatrix inv;
  try {
    inv = inverse_unimodular(e.block(0, 0, mz, mz));
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidCylinder, "the minus and extra generators are not determined by the plus classes");
  }
  const IntMatrix rp = e.block(0, mz, mz, g2);
  const IntMatrix x = inv * rp;
  AbelianMarking out;
  for (std::size_t k = 0; k < mz; ++k) {
    Exponent v(g2);
    for (std::size_t j = 0; j < g2; ++j) v[j] = static_cast<int>(-x(k, j));
    out.images.push_back(v);
  }
  for (std::size_t k = 0; k < g2; ++k) {
    Exponent v(g2, 0);
    v[k] = 1;
    out.images.push_back(v);
  }
  return out;
}

IntMatrix homology_action(const AbelianMarking& marking, int genus) {
  const auto g2 = static_cast<std::size_t>(2 * genus);
  IntMatrix s(g2, g2, 0);
  for (std::size_t j = 0; j < g2; ++j)
    for (std::size_t i = 0; i < g2; ++i) s(i, j) = marking.images[j][i];
  return s;
}

// Fox blocks ----------------------------------------------------------------

LaurentMatrix FoxBlocks::stacked() const {
  LaurentMatrix s(a.rows() + b.rows(), a.cols(), c(0, 0) - c(0, 0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) s(a.rows() + i, j) = b(i, j);
  }
  return s;
}

FoxBlocks abc_matrices(const AdmissiblePresentation& p, const std::vector<Exponent>& images, int target_rank) {
  p.check();
  const auto g2 = static_cast<std::size_t>(2 * p.genus);
  const auto l = static_cast<std::size_t>(p.extra);
  const std::size_t cols = p.relators.size();
  const LaurentPolynomial zero(target_rank);
  FoxBlocks out{LaurentMatrix(g2, cols, zero), LaurentMatrix(l, cols, zero), LaurentMatrix(g2, cols, zero)};
  for (std::size_t j = 0; j < cols; ++j) {
    const Word& r = p.relators[j];
    const auto d = [&](int gen) { return fox_mapped(r, gen, images, target_rank).bar(); };
    for (std::size_t i = 0; i < g2; ++i) {
      out.a(i, j) = d(p.minus(static_cast<int>(i) + 1));
      out.c(i, j) = d(p.plus(static_cast<int>(i) + 1));
    }
    for (std::size_t i = 0; i < l; ++i) out.b(i, j) = d(p.extra_generator(static_cast<int>(i) + 1));
  }
  return out;
}

FoxBlocks abc_matrices(const AdmissiblePresentation& p) {
  return abc_matrices(p, marking_q2(p).images, 2 * p.genus);
}

FractionMatrix CylinderMagnus::entries() const {
  return numerator.map([this](const LaurentPolynomial& x) { return LaurentFraction(x, den); });
}

LaurentFraction CylinderMagnus::det() const {
  LaurentPolynomial num = determinant(numerator);
  int power = static_cast<int>(numerator.rows());
  while (power > 0) {
    auto q = num.exact_divide(den);
    if (!q) break;
    num = std::move(*q);
    --power;
  }
  return LaurentFraction(num, den.pow(power));
}

namespace {

CylinderMagnus solve_magnus(const AdmissiblePresentation& p, const FoxBlocks& blocks, int target_rank) {
  const auto g2 = static_cast<std::size_t>(2 * p.genus);
  const LaurentMatrix ab = blocks.stacked();
  LaurentMatrix rhs(ab.rows(), g2, LaurentPolynomial(target_rank));
  for (std::size_t i = 0; i < g2; ++i) rhs(i, i) = LaurentPolynomial::constant(target_rank, 1);
  CylinderMagnus out;
  LaurentMatrix x;
  try {
    x = adjugate_solve(ab, rhs, &out.den);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::Singular, "(A;B) is singular over the fraction field");
    throw;
  }
  out.numerator = (blocks.c * x).map([](const LaurentPolynomial& v) { return -v; });
  return out;
}

}  // namespace

CylinderMagnus magnus_cylinder(const AdmissiblePresentation& p) {
  const AbelianMarking marking = marking_q2(p);
  const int rank = 2 * p.genus;
  CylinderMagnus out = solve_magnus(p, abc_matrices(p, marking.images, rank), rank);
  out.sigma = homology_action(marking, p.genus);
  return out;
}

CylinderMagnus magnus_cylinder_specialized(const AdmissiblePresentation& p, const std::vector<int>& rho) {
  if (static_cast<int>(rho.size()) != p.generator_count())
    throw Error(ErrorCode::RankMismatch, "rho needs one exponent per generator");
  std::vector<Exponent> images;
  for (int e : rho) images.push_back(Exponent{e});
  return solve_magnus(p, abc_matrices(p, images, 1), 1);
}

LaurentPolynomial torsion_plus(const AdmissiblePresentation& p) { return determinant(abc_matrices(p).stacked()); }

CylinderReport cylinder_report(const AdmissiblePresentation& p) {
  CylinderReport out;
  out.diagnostics = validate(p);
  if (!out.diagnostics.ok) {
    std::string msg = "not a homology cylinder presentation";
    for (const auto& m : out.diagnostics.messages) msg += "; " + m;
    throw Error(ErrorCode::InvalidCylinder, msg);
  }
  out.magnus = magnus_cylinder(p);
  out.torsion = unit_normalized(out.magnus.den);
  return out;
}

// Constructions ---------------------------------------------------------------

AdmissiblePresentation from_mapping_class(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
  if (!fixes_boundary(phi, genus)) throw Error(ErrorCode::NotBoundaryFixing, "automorphism does not fix the boundary word");
  AdmissiblePresentation p;
  p.genus = genus;
  p.extra = 0;
  std::vector<Word> plus_letters;
  for (int k = 1; k <= 2 * genus; ++k) plus_letters.push_back(Word::generator(p.plus(k)));
  for (int j = 1; j <= 2 * genus; ++j)
    p.relators.push_back(Word::generator(p.minus(j)) * substitute(phi.image(j), plus_letters).inverse());
  return p;
}

AdmissiblePresentation trivial_cylinder(int genus) { return from_mapping_class(Endomorphism::identity(2 * genus), genus); }

AdmissiblePresentation eliminate_extras(const AdmissiblePresentation& p_in) {
  AdmissiblePresentation p = p_in;
  bool progress = true;
  while (progress && p.extra > 0) {
    progress = false;
    for (int k = 1; k <= p.extra && !progress; ++k) {
      const int z = p.extra_generator(k);
      for (std::size_t ri = 0; ri < p.relators.size() && !progress; ++ri) {
        const auto& letters = p.relators[ri].letters();
        int count = 0;
        std::size_t pos = 0;
        for (std::size_t t = 0; t < letters.size(); ++t)
          if (std::abs(letters[t]) == z) {
            ++count;
            pos = t;
          }
        if (count != 1) continue;
        const Word u(std::vector<int>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos)));
        const Word v(std::vector<int>(letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1, letters.end()));
        const Word value = letters[pos] > 0 ? u.inverse() * v.inverse() : v * u;
        std::vector<Word> images;
        for (int g = 1; g <= p.generator_count(); ++g) {
          if (g == z) images.push_back(value);
          else images.push_back(Word::generator(g < z ? g : g - 1));
        }
        // Renumber `value` too: its letters are old indices.
        images[static_cast<std::size_t>(z - 1)] = substitute(value, images);
        AdmissiblePresentation next;
        next.genus = p.genus;
        next.extra = p.extra - 1;
        for (std::size_t rj = 0; rj < p.relators.size(); ++rj)
          if (rj != ri) next.relators.push_back(substitute(p.relators[rj], images));
        p = std::move(next);
        progress = true;
      }
    }
  }
  return p;
}

AdmissiblePresentation compose(const AdmissiblePresentation& m, const AdmissiblePresentation& n) {
  if (m.genus != n.genus) throw Error(ErrorCode::GenusMismatch, "cannot stack cylinders of different genus");
  m.check();
  n.check();
  const int g2 = 2 * m.genus;
  AdmissiblePresentation out;
  out.genus = m.genus;
  out.extra = m.extra + g2 + n.extra;
  const int middle = g2 + m.extra;  // middle k has index middle + k
  std::vector<Word> from_m, from_n;
  for (int k = 1; k <= g2; ++k) from_m.push_back(Word::generator(middle + k));
  for (int k = 1; k <= m.extra; ++k) from_m.push_back(Word::generator(out.extra_generator(k)));
  for (int k = 1; k <= g2; ++k) from_m.push_back(Word::generator(out.plus(k)));
  for (int k = 1; k <= g2; ++k) from_n.push_back(Word::generator(out.minus(k)));
  for (int k = 1; k <= n.extra; ++k) from_n.push_back(Word::generator(out.extra_generator(m.extra + g2 + k)));
  for (int k = 1; k <= g2; ++k) from_n.push_back(Word::generator(middle + k));
  for (const auto& r : m.relators) out.relators.push_back(substitute(r, from_m));
  for (const auto& r : n.relators) out.relators.push_back(substitute(r, from_n));
  out = eliminate_extras(out);
  const Diagnostics d = validate(out);
  if (!d.ok) throw Error(ErrorCode::Internal, "glued presentation failed validation");
  return out;
}

// Identities --------------------------------------------------------------------

bool rhat_relation_check(const CylinderMagnus& r) {
  const LaurentPolynomial& d = r.den;
  const LaurentPolynomial lhs = determinant(r.numerator) * d;
  const LaurentPolynomial rhs = d.pow(static_cast<int>(r.numerator.rows())) * d.bar();
  return eq_up_to_unit(lhs, rhs).has_value();
}

bool rhat_relation_check(const AdmissiblePresentation& p) { return rhat_relation_check(magnus_cylinder(p)); }

bool check_symplectic_cylinder(const CylinderMagnus& r, int genus) {
  const LaurentMatrix jq = abelianize(jtilde(genus));
  const LaurentMatrix lhs = bar_transpose(r.numerator) * jq * r.numerator;
  const LaurentPolynomial scale = r.den.bar() * r.den;
  const LaurentMatrix rhs = twist(jq, r.sigma).map([&scale](const LaurentPolynomial& x) { return scale * x; });
  return lhs == rhs;
}

bool check_symplectic_cylinder(const AdmissiblePresentation& p) { return check_symplectic_cylinder(magnus_cylinder(p), p.genus); }

bool magnus_functorial(const CylinderMagnus& mn, const CylinderMagnus& m, const CylinderMagnus& n) {
  const LaurentPolynomial dn = twist(n.den, m.sigma);
  const LaurentPolynomial left_scale = m.den * dn;
  const LaurentMatrix lhs = mn.numerator.map([&](const LaurentPolynomial& x) { return left_scale * x; });
  const LaurentMatrix rhs = (m.numerator * twist(n.numerator, m.sigma)).map([&](const LaurentPolynomial& x) { return mn.den * x; });
  return lhs == rhs && mn.sigma == m.sigma * n.sigma;
}

bool torsion_functorial(const LaurentPolynomial& mn, const LaurentPolynomial& m, const IntMatrix& sigma_m,
                        const LaurentPolynomial& n) {
  return eq_up_to_unit(mn, m * twist(n, sigma_m)).has_value();
}

}  // namespace foxcalc
