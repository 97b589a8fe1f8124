#include "foxcalc/foxcalc.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <variant>

#include "foxcalc/alexander.hpp"
#include "foxcalc/nilpotent.hpp"
#include "foxcalc/report.hpp"
#include "foxcalc/selftest.hpp"

using namespace foxcalc;

struct fc_endo {
  Endomorphism value;
};

struct fc_cylinder {
  CylinderSource value;
};

struct fc_matrix {
  std::variant<FreeMatrix, LaurentMatrix, FractionMatrix, IntMatrix> value;
  std::vector<std::string> names;
};

namespace {

thread_local std::string last_error;

fc_status fail(fc_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
fc_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return FC_OK;
  } catch (const Error& e) {
    return fail(static_cast<fc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FC_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format format_of(fc_format f) {
  if (f != FC_FORMAT_TEXT && f != FC_FORMAT_JSON) throw Error(ErrorCode::InvalidArgument, "unknown output format");
  return f == FC_FORMAT_JSON ? Format::Json : Format::Text;
}

std::vector<int> braid_of(const int* crossings, std::size_t length) {
  if (length > 0) require(crossings, "crossings");
  return std::vector<int>(crossings, crossings + length);
}

std::string unit_string(const Unit& u) {
  return to_string(LaurentPolynomial::monomial(u.monomial, u.sign));
}

std::string monomial_string(const Exponent& e) { return to_string(LaurentPolynomial::monomial(e)); }

StringMatrix printed(const fc_matrix& m) {
  return std::visit(
      [&](const auto& x) -> StringMatrix {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntMatrix>) return matrix_strings(x);
        else return matrix_strings(x, m.names);
      },
      m.value);
}

void add_cylinder_core(Report& r, const AdmissiblePresentation& p, const CylinderReport& c) {
  r.set("genus", static_cast<long long>(p.genus));
  r.set("extra", static_cast<long long>(p.extra));
  r.set("matrix", matrix_strings(c.magnus.entries()));
  r.set("det", to_string(c.magnus.det()));
  r.set("torsion", TorsionValue{to_string(c.torsion), "±H"});
  r.set("unit_ambiguity", std::string("±H"));
  for (const auto& m : c.diagnostics.messages) r.add_diagnostic(m);
  r.add_diagnostic("trivialized (A;B) determinant " + std::to_string(c.diagnostics.trivial_det));
}

}  // namespace

extern "C" {

const char* fc_last_error(void) { return last_error.c_str(); }

const char* fc_status_name(fc_status status) {
  if (status == FC_OK) return "ok";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* fc_version(void) { return "1.0.0"; }

void fc_string_free(char* s) { std::free(s); }

// Endomorphisms ---------------------------------------------------------------

fc_status fc_endo_parse(const char* text, fc_endo** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new fc_endo{parse_endomorphism(text)};
  });
}

fc_status fc_endo_from_braid(const int* crossings, size_t length, int strands, fc_endo** out) {
  return guard([&] {
    require(out, "out");
    *out = new fc_endo{braid_endomorphism(braid_of(crossings, length), strands)};
  });
}

fc_status fc_endo_catalogue_size(int genus, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = twist_catalogue(genus).size();
  });
}

fc_status fc_endo_catalogue(int genus, size_t index, fc_endo** out) {
  return guard([&] {
    require(out, "out");
    const auto cat = twist_catalogue(genus);
    if (index >= cat.size()) throw Error(ErrorCode::IndexOutOfRange, "catalogue index out of range");
    *out = new fc_endo{cat[index]};
  });
}

fc_status fc_endo_compose(const fc_endo* phi, const fc_endo* psi, fc_endo** out) {
  return guard([&] {
    require(phi, "phi");
    require(psi, "psi");
    require(out, "out");
    *out = new fc_endo{compose(phi->value, psi->value)};
  });
}

fc_status fc_endo_apply(const fc_endo* phi, const char* word, char** out) {
  return guard([&] {
    require(phi, "phi");
    require(word, "word");
    require(out, "out");
    *out = dup(to_string(phi->value.apply(parse_word(word, phi->value.rank()))));
  });
}

fc_status fc_endo_fixes_boundary(const fc_endo* phi, int genus, int* out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    *out = fixes_boundary(phi->value, genus) ? 1 : 0;
  });
}

fc_status fc_endo_to_string(const fc_endo* phi, char** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    *out = dup(to_string(phi->value));
  });
}

int fc_endo_rank(const fc_endo* phi) { return phi ? phi->value.rank() : 0; }

void fc_endo_free(fc_endo* phi) { delete phi; }

// Cylinders ---------------------------------------------------------------------

fc_status fc_cylinder_parse(const char* text, fc_cylinder** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new fc_cylinder{parse_cylinder(text)};
  });
}

fc_status fc_cylinder_from_mapping_class(const fc_endo* phi, int genus, fc_cylinder** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    *out = new fc_cylinder{CylinderSource{from_mapping_class(phi->value, genus), std::nullopt}};
  });
}

fc_status fc_cylinder_compose(const fc_cylinder* m, const fc_cylinder* n, fc_cylinder** out) {
  return guard([&] {
    require(m, "m");
    require(n, "n");
    require(out, "out");
    *out = new fc_cylinder{CylinderSource{compose(m->value.presentation, n->value.presentation), std::nullopt}};
  });
}

fc_status fc_cylinder_validate(const fc_cylinder* c, int* ok, char** diagnostics) {
  return guard([&] {
    require(c, "cylinder");
    require(ok, "ok");
    const Diagnostics d = validate(c->value.presentation);
    *ok = d.ok ? 1 : 0;
    if (diagnostics) {
      std::string text;
      for (const auto& m : d.messages) text += m + "\n";
      *diagnostics = dup(text);
    }
  });
}

fc_status fc_cylinder_torsion(const fc_cylinder* c, char** out) {
  return guard([&] {
    require(c, "cylinder");
    require(out, "out");
    *out = dup(to_string(unit_normalized(torsion_plus(c->value.presentation))));
  });
}

fc_status fc_cylinder_to_string(const fc_cylinder* c, char** out) {
  return guard([&] {
    require(c, "cylinder");
    require(out, "out");
    *out = dup(to_string(c->value.presentation));
  });
}

int fc_cylinder_genus(const fc_cylinder* c) { return c ? c->value.presentation.genus : 0; }

void fc_cylinder_free(fc_cylinder* c) { delete c; }

// Matrices ------------------------------------------------------------------------

fc_status fc_magnus(const fc_endo* phi, fc_reduction reduction, fc_matrix** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    const auto& e = phi->value;
    switch (reduction) {
      case FC_REDUCE_NONE: *out = new fc_matrix{magnus(e), {}}; break;
      case FC_REDUCE_TRIVIAL: *out = new fc_matrix{homology_action(e), {}}; break;
      case FC_REDUCE_ABELIAN: *out = new fc_matrix{magnus_abelian(e), {}}; break;
      case FC_REDUCE_BURAU:
        *out = new fc_matrix{reduce_specialized(magnus(e), std::vector<int>(static_cast<std::size_t>(e.rank()), 1)), {}};
        break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown reduction");
    }
  });
}

fc_status fc_burau(const int* crossings, size_t length, int strands, fc_matrix** out) {
  return guard([&] {
    require(out, "out");
    *out = new fc_matrix{burau(braid_of(crossings, length), strands), {}};
  });
}

fc_status fc_gassner(const int* crossings, size_t length, int strands, fc_matrix** out) {
  return guard([&] {
    require(out, "out");
    *out = new fc_matrix{gassner(braid_of(crossings, length), strands), {}};
  });
}

fc_status fc_jtilde(int genus, fc_matrix** out) {
  return guard([&] {
    require(out, "out");
    *out = new fc_matrix{jtilde(genus), {}};
  });
}

fc_status fc_cylinder_magnus(const fc_cylinder* c, fc_matrix** out) {
  return guard([&] {
    require(c, "cylinder");
    require(out, "out");
    *out = new fc_matrix{magnus_cylinder(c->value.presentation).entries(), {}};
  });
}

size_t fc_matrix_rows(const fc_matrix* m) {
  return m ? std::visit([](const auto& x) { return x.rows(); }, m->value) : 0;
}

size_t fc_matrix_cols(const fc_matrix* m) {
  return m ? std::visit([](const auto& x) { return x.cols(); }, m->value) : 0;
}

fc_status fc_matrix_entry(const fc_matrix* m, size_t row, size_t col, char** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    if (row >= fc_matrix_rows(m) || col >= fc_matrix_cols(m)) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
    *out = dup(printed(*m)[row][col]);
  });
}

fc_status fc_matrix_determinant(const fc_matrix* m, char** out) {
  return guard([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup(std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, FreeMatrix>)
            throw Error(ErrorCode::InvalidArgument, "no determinant over the noncommutative ring Z[F_n]");
          else if constexpr (std::is_same_v<T, IntMatrix>)
            return std::to_string(determinant(x));
          else
            return to_string(determinant(x));
        },
        m->value));
  });
}

void fc_matrix_free(fc_matrix* m) { delete m; }

// Reports ---------------------------------------------------------------------------

fc_status fc_report_fox(const char* word, int rank, int wrt, fc_format format, char** out) {
  return guard([&] {
    require(word, "word");
    require(out, "out");
    const Format f = format_of(format);
    if (rank < 0 || wrt < 0) throw Error(ErrorCode::InvalidArgument, "rank and derivative index must be nonnegative");
    Word w = parse_word(word, rank > 0 ? rank : 1 << 20);
    if (rank == 0) rank = std::max({1, w.max_index(), wrt});
    Report r("fox");
    if (wrt > 0) {
      r.set("value", to_string(fox_word(w, wrt, rank)));
    } else {
      std::vector<std::string> grad;
      for (const auto& d : fox_gradient(w, rank)) grad.push_back(to_string(d));
      r.set("gradient", grad);
    }
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_magnus(const fc_endo* phi, fc_reduction reduction, fc_format format, char** out) {
  return guard([&] {
    require(out, "out");
    const Format f = format_of(format);
    fc_matrix* m = nullptr;
    if (const fc_status s = fc_magnus(phi, reduction, &m); s != FC_OK) throw Error(static_cast<ErrorCode>(s), last_error);
    std::unique_ptr<fc_matrix, decltype(&fc_matrix_free)> hold(m, fc_matrix_free);
    static const char* rings[] = {"Z[F_n]", "Z", "Z[H]", "Z[t^±1]"};
    Report r("magnus");
    r.set("ring", std::string(rings[reduction]));
    r.set("matrix", printed(*m));
    if (reduction != FC_REDUCE_NONE) {
      char* det = nullptr;
      if (fc_matrix_determinant(m, &det) == FC_OK) {
        r.set("det", std::string(det));
        fc_string_free(det);
      }
    }
    *out = dup(r.emit(f));
  });
}

namespace {

fc_status braid_report(const char* command, bool pure, const int* crossings, size_t length, int strands, fc_format format,
                       char** out) {
  return guard([&] {
    require(out, "out");
    const Format f = format_of(format);
    const auto braid = braid_of(crossings, length);
    const LaurentMatrix m = pure ? gassner(braid, strands) : burau(braid, strands);
    Report r(command);
    r.set("matrix", matrix_strings(m));
    r.set("det", to_string(determinant(m)));
    *out = dup(r.emit(f));
  });
}

}  // namespace

fc_status fc_report_burau(const int* crossings, size_t length, int strands, fc_format format, char** out) {
  return braid_report("burau", false, crossings, length, strands, format, out);
}

fc_status fc_report_gassner(const int* crossings, size_t length, int strands, fc_format format, char** out) {
  return braid_report("gassner", true, crossings, length, strands, format, out);
}

fc_status fc_report_symplectic(const fc_endo* phi, int genus, fc_format format, char** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    const Format f = format_of(format);
    const auto& e = phi->value;
    if (e.rank() != 2 * genus) throw Error(ErrorCode::GenusMismatch, "endomorphism rank must be 2g");
    Report r("symplectic");
    const bool fixes = fixes_boundary(e, genus);
    const IntMatrix sigma = homology_action(e);
    r.set("fixes_boundary", fixes);
    r.set("homology_action", matrix_strings(sigma));
    r.set("symplectic_on_H", is_symplectic(sigma, genus));
    r.set("symplectic", check_symplectic(e, genus));
    if (fixes) {
      r.set("earle_det", unit_string(earle_det(e, genus)));
      if (sigma == identity_matrix<Coefficient>(sigma.rows(), 0, 1)) {
        const auto v = invariant_vector(genus);
        const LaurentMatrix ra = magnus_abelian(e);
        bool fixed = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
          LaurentPolynomial s(2 * genus);
          for (std::size_t j = 0; j < v.size(); ++j) s += ra(i, j) * v[j];
          fixed = fixed && s == v[i];
        }
        r.set("invariant_vector_fixed", fixed);
        r.set("G_condition", check_G_condition(magnus_abelian(e)));
      }
    } else {
      r.add_diagnostic("the boundary word is not fixed; the twisted symplectic identity is not guaranteed");
    }
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_johnson(const fc_endo* phi, int k, fc_format format, char** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    const Format f = format_of(format);
    const auto& e = phi->value;
    const auto tau = johnson_tau(e, k);
    Report r("johnson");
    r.set("k", static_cast<long long>(k));
    r.set("depth", static_cast<long long>(filtration_depth(e, k + 2)));
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < tau.size(); ++i) parts.push_back("x" + std::to_string(i + 1) + ": " + to_string(tau[i]));
    r.set("tau", parts);
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_cylinder(const fc_cylinder* c, fc_format format, char** out) {
  return guard([&] {
    require(c, "cylinder");
    require(out, "out");
    const Format f = format_of(format);
    const auto& p = c->value.presentation;
    const CylinderReport cr = cylinder_report(p);
    const AbelianMarking mk = marking_q2(p);
    Report r("cylinder");
    add_cylinder_core(r, p, cr);
    std::vector<std::string> marking;
    const auto labels = p.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) marking.push_back(labels[i] + " -> " + monomial_string(mk.images[i]));
    r.set("marking", marking);
    r.set("symplectic", check_symplectic_cylinder(cr.magnus, p.genus));
    r.set("rhat_relation", rhat_relation_check(cr.magnus));
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_torsion(const fc_cylinder* c, fc_format format, char** out) {
  return guard([&] {
    require(c, "cylinder");
    require(out, "out");
    const Format f = format_of(format);
    const auto& p = c->value.presentation;
    const Diagnostics d = validate(p);
    if (!d.ok) throw Error(ErrorCode::InvalidCylinder, d.messages.empty() ? "invalid cylinder" : d.messages.front());
    const LaurentPolynomial t = unit_normalized(torsion_plus(p));
    Report r("torsion");
    r.set("torsion", TorsionValue{to_string(t), "±H"});
    r.set("unit_ambiguity", std::string("±H"));
    r.set("is_unit", t.is_monomial() && std::llabs(t.leading().second) == 1);
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_compose(const fc_cylinder* m, const fc_cylinder* n, fc_format format, char** out) {
  return guard([&] {
    require(m, "m");
    require(n, "n");
    require(out, "out");
    const Format f = format_of(format);
    const auto& pm = m->value.presentation;
    const auto& pn = n->value.presentation;
    const AdmissiblePresentation pmn = compose(pm, pn);
    const CylinderReport cr = cylinder_report(pmn);
    const CylinderMagnus rm = magnus_cylinder(pm), rn = magnus_cylinder(pn);
    Report r("compose");
    add_cylinder_core(r, pmn, cr);
    std::vector<std::string> rels;
    for (const auto& w : pmn.relators) rels.push_back(to_string(w, pmn.labels()));
    r.set("relators", rels);
    r.set("functorial", magnus_functorial(cr.magnus, rm, rn));
    r.set("torsion_functorial", torsion_functorial(cr.magnus.den, rm.den, rm.sigma, rn.den));
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_alexander_knot(const char* presentation_text, fc_format format, char** out) {
  return guard([&] {
    require(presentation_text, "presentation");
    require(out, "out");
    const Format f = format_of(format);
    const LaurentPolynomial d = alexander_knot(parse_presentation(presentation_text));
    Report r("alexander");
    r.set("value", to_string(d));
    r.set("unit_ambiguity", std::string("±t^k"));
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_mapping_torus(const fc_endo* phi, int genus, fc_format format, char** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    const Format f = format_of(format);
    const LaurentFraction d = mapping_torus_alexander(phi->value, genus);
    Report r("alexander");
    r.set("value", to_string(d, mapping_torus_variable_names(genus)));
    r.set("unit_ambiguity", std::string("±H·l^k"));
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_fibered(const fc_endo* phi, int genus, fc_format format, char** out) {
  return guard([&] {
    require(phi, "phi");
    require(out, "out");
    const Format f = format_of(format);
    Report r("fibered");
    r.set("value", to_string(fibered_alexander(phi->value, genus)));
    r.set("unit_ambiguity", std::string("±t^k"));
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_factorize(const fc_cylinder* c, const char* delta_text, fc_format format, char** out) {
  return guard([&] {
    require(c, "cylinder");
    require(delta_text, "delta");
    require(out, "out");
    const Format f = format_of(format);
    if (!c->value.rho1) throw Error(ErrorCode::RhoInconsistent, "the cylinder file carries no rho1 line");
    const LaurentPolynomial delta = parse_laurent(delta_text, 1);
    const FactorizationResult res = factorization_check(c->value.presentation, *c->value.rho1, delta);
    Report r("factorize");
    r.set("delta", to_string(delta));
    r.set("predicted", to_string(res.predicted));
    r.set("ok", res.ok);
    r.set("unit_ambiguity", std::string("±t^k"));
    *out = dup(r.emit(f));
  });
}

fc_status fc_report_selftest(uint64_t seed, fc_format format, int* all_passed, char** out) {
  return guard([&] {
    require(out, "out");
    const Format f = format_of(format);
    const auto checks = run_selftest(seed);
    bool ok = true;
    std::vector<std::string> lines;
    for (const auto& c : checks) {
      ok = ok && c.passed;
      lines.push_back(c.name + ": " + (c.passed ? "pass" : "FAIL " + c.detail));
    }
    Report r("selftest");
    r.set("seed", static_cast<long long>(seed));
    r.set("checks", lines);
    r.set("passed", ok);
    if (all_passed) *all_passed = ok ? 1 : 0;
    *out = dup(r.emit(f));
  });
}

}  // extern "C"
