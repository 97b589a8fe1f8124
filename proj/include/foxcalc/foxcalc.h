#ifndef FOXCALC_H
#define FOXCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FOXCALC_BUILDING_LIBRARY)
#    define FC_API __declspec(dllexport)
#  else
#    define FC_API __declspec(dllimport)
#  endif
#else
#  define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values are stable. */
typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_PARSE = 1,
  FC_ERR_RANK_MISMATCH = 2,
  FC_ERR_INDEX_OUT_OF_RANGE = 3,
  FC_ERR_NOT_BOUNDARY_FIXING = 4,
  FC_ERR_NOT_PURE_BRAID = 5,
  FC_ERR_NOT_MONOMIAL = 6,
  FC_ERR_DEPTH_PRECONDITION = 7,
  FC_ERR_NONTRIVIAL_HOMOLOGY = 8,
  FC_ERR_INVALID_CYLINDER = 9,
  FC_ERR_SINGULAR = 10,
  FC_ERR_GENUS_MISMATCH = 11,
  FC_ERR_DEGENERATE_PRESENTATION = 12,
  FC_ERR_RHO_INCONSISTENT = 13,
  FC_ERR_DIVISION_BY_ZERO = 14,
  FC_ERR_OVERFLOW = 15,
  FC_ERR_PRECONDITION = 16,
  FC_ERR_IO = 17,
  FC_ERR_INVALID_ARGUMENT = 18,
  FC_ERR_INTERNAL = 19
} fc_status;

typedef enum fc_format { FC_FORMAT_TEXT = 0, FC_FORMAT_JSON = 1 } fc_format;

typedef enum fc_reduction {
  FC_REDUCE_NONE = 0,    /* entries in Z[F_n] */
  FC_REDUCE_TRIVIAL = 1, /* integer matrix */
  FC_REDUCE_ABELIAN = 2, /* entries in Z[H] */
  FC_REDUCE_BURAU = 3    /* every generator sent to t */
} fc_reduction;

typedef struct fc_endo fc_endo;
typedef struct fc_cylinder fc_cylinder;
typedef struct fc_matrix fc_matrix;

/* Message for the last failure on the calling thread; never NULL. */
FC_API const char* fc_last_error(void);
/* Machine-readable name such as "not_boundary_fixing". */
FC_API const char* fc_status_name(fc_status status);
FC_API const char* fc_version(void);
/* Releases strings returned through char** out-parameters. */
FC_API void fc_string_free(char* s);

/* Endomorphisms of free groups */
FC_API fc_status fc_endo_parse(const char* text, fc_endo** out);
FC_API fc_status fc_endo_from_braid(const int* crossings, size_t length, int strands, fc_endo** out);
FC_API fc_status fc_endo_catalogue_size(int genus, size_t* out);
FC_API fc_status fc_endo_catalogue(int genus, size_t index, fc_endo** out);
FC_API fc_status fc_endo_compose(const fc_endo* phi, const fc_endo* psi, fc_endo** out);
FC_API fc_status fc_endo_apply(const fc_endo* phi, const char* word, char** out);
FC_API fc_status fc_endo_fixes_boundary(const fc_endo* phi, int genus, int* out);
FC_API fc_status fc_endo_to_string(const fc_endo* phi, char** out);
FC_API int fc_endo_rank(const fc_endo* phi);
FC_API void fc_endo_free(fc_endo* phi);

/* Homology cylinders given by admissible presentations */
FC_API fc_status fc_cylinder_parse(const char* text, fc_cylinder** out);
FC_API fc_status fc_cylinder_from_mapping_class(const fc_endo* phi, int genus, fc_cylinder** out);
FC_API fc_status fc_cylinder_compose(const fc_cylinder* m, const fc_cylinder* n, fc_cylinder** out);
FC_API fc_status fc_cylinder_validate(const fc_cylinder* c, int* ok, char** diagnostics);
FC_API fc_status fc_cylinder_torsion(const fc_cylinder* c, char** out);
FC_API fc_status fc_cylinder_to_string(const fc_cylinder* c, char** out);
FC_API int fc_cylinder_genus(const fc_cylinder* c);
FC_API void fc_cylinder_free(fc_cylinder* c);

/* Matrices; entries are returned in printed form */
FC_API fc_status fc_magnus(const fc_endo* phi, fc_reduction reduction, fc_matrix** out);
FC_API fc_status fc_burau(const int* crossings, size_t length, int strands, fc_matrix** out);
FC_API fc_status fc_gassner(const int* crossings, size_t length, int strands, fc_matrix** out);
FC_API fc_status fc_jtilde(int genus, fc_matrix** out);
FC_API fc_status fc_cylinder_magnus(const fc_cylinder* c, fc_matrix** out);
FC_API size_t fc_matrix_rows(const fc_matrix* m);
FC_API size_t fc_matrix_cols(const fc_matrix* m);
FC_API fc_status fc_matrix_entry(const fc_matrix* m, size_t row, size_t col, char** out);
FC_API fc_status fc_matrix_determinant(const fc_matrix* m, char** out);
FC_API void fc_matrix_free(fc_matrix* m);

/* Whole-command reports, as printed by the command-line tool */
FC_API fc_status fc_report_fox(const char* word, int rank, int wrt, fc_format format, char** out);
FC_API fc_status fc_report_magnus(const fc_endo* phi, fc_reduction reduction, fc_format format, char** out);
FC_API fc_status fc_report_burau(const int* crossings, size_t length, int strands, fc_format format, char** out);
FC_API fc_status fc_report_gassner(const int* crossings, size_t length, int strands, fc_format format, char** out);
FC_API fc_status fc_report_symplectic(const fc_endo* phi, int genus, fc_format format, char** out);
FC_API fc_status fc_report_johnson(const fc_endo* phi, int k, fc_format format, char** out);
FC_API fc_status fc_report_cylinder(const fc_cylinder* c, fc_format format, char** out);
FC_API fc_status fc_report_torsion(const fc_cylinder* c, fc_format format, char** out);
FC_API fc_status fc_report_compose(const fc_cylinder* m, const fc_cylinder* n, fc_format format, char** out);
FC_API fc_status fc_report_alexander_knot(const char* presentation_text, fc_format format, char** out);
FC_API fc_status fc_report_mapping_torus(const fc_endo* phi, int genus, fc_format format, char** out);
FC_API fc_status fc_report_fibered(const fc_endo* phi, int genus, fc_format format, char** out);
/* delta_text is a polynomial in t; the cylinder must carry rho1 exponents. */
FC_API fc_status fc_report_factorize(const fc_cylinder* c, const char* delta_text, fc_format format, char** out);
FC_API fc_status fc_report_selftest(uint64_t seed, fc_format format, int* all_passed, char** out);

#ifdef __cplusplus
}
#endif

#endif
