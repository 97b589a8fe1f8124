#include <cstring>
#include <string>

#include "doctest.h"
#include "foxcalc/foxcalc.h"
#include "support.hpp"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::string(fc_status_name(FC_OK)) == "ok");
  CHECK(std::string(fc_status_name(FC_ERR_PARSE)) == "parse_error");
  fc_endo* e = nullptr;
  CHECK(fc_endo_parse("x1 -> y", &e) == FC_ERR_PARSE);
  CHECK(e == nullptr);
  CHECK(std::strlen(fc_last_error()) > 0);
  CHECK(fc_endo_parse(nullptr, &e) == FC_ERR_INVALID_ARGUMENT);
  CHECK(fc_endo_rank(nullptr) == 0);
}

TEST_CASE("endomorphism handles") {
  fc_endo* phi = nullptr;
  REQUIRE(fc_endo_parse(support::read_corpus("trefoil_monodromy.endo").c_str(), &phi) == FC_OK);
  CHECK(fc_endo_rank(phi) == 2);
  int fixes = 0;
  CHECK(fc_endo_fixes_boundary(phi, 1, &fixes) == FC_OK);
  CHECK(fixes == 1);
  char* s = nullptr;
  CHECK(fc_endo_apply(phi, "x1 x2", &s) == FC_OK);
  CHECK(take(s) == "x1");

  size_t n = 0;
  CHECK(fc_endo_catalogue_size(1, &n) == FC_OK);
  CHECK(n == 2);
  fc_endo *ta = nullptr, *tb = nullptr, *prod = nullptr;
  REQUIRE(fc_endo_catalogue(1, 0, &ta) == FC_OK);
  REQUIRE(fc_endo_catalogue(1, 1, &tb) == FC_OK);
  CHECK(fc_endo_catalogue(1, 2, &prod) == FC_ERR_INDEX_OUT_OF_RANGE);
  REQUIRE(fc_endo_compose(ta, tb, &prod) == FC_OK);
  char *a = nullptr, *b = nullptr;
  fc_endo_to_string(prod, &a);
  fc_endo_to_string(phi, &b);
  CHECK(take(a) == take(b));
  fc_endo_free(ta);
  fc_endo_free(tb);
  fc_endo_free(prod);
  fc_endo_free(phi);
}

TEST_CASE("matrices") {
  const int braid[] = {1};
  fc_matrix* m = nullptr;
  REQUIRE(fc_burau(braid, 1, 2, &m) == FC_OK);
  CHECK(fc_matrix_rows(m) == 2);
  CHECK(fc_matrix_cols(m) == 2);
  char* s = nullptr;
  CHECK(fc_matrix_entry(m, 0, 0, &s) == FC_OK);
  CHECK(take(s) == "1 + -t^-1");
  CHECK(fc_matrix_entry(m, 2, 0, &s) == FC_ERR_INDEX_OUT_OF_RANGE);
  CHECK(fc_matrix_determinant(m, &s) == FC_OK);
  CHECK(take(s) == "-t^-1");
  fc_matrix_free(m);

  fc_endo* e = nullptr;
  REQUIRE(fc_endo_from_braid(braid, 1, 2, &e) == FC_OK);
  REQUIRE(fc_magnus(e, FC_REDUCE_NONE, &m) == FC_OK);
  CHECK(fc_matrix_entry(m, 0, 0, &s) == FC_OK);
  CHECK(take(s) == "1 + -g1*g2^-1*g1^-1");
  CHECK(fc_matrix_determinant(m, &s) == FC_ERR_INVALID_ARGUMENT);
  fc_matrix_free(m);
  REQUIRE(fc_magnus(e, FC_REDUCE_TRIVIAL, &m) == FC_OK);
  CHECK(fc_matrix_determinant(m, &s) == FC_OK);
  CHECK(take(s) == "-1");
  fc_matrix_free(m);
  fc_endo_free(e);

  CHECK(fc_gassner(braid, 1, 2, &m) == FC_ERR_NOT_PURE_BRAID);
}

TEST_CASE("cylinders") {
  fc_cylinder* c = nullptr;
  REQUIRE(fc_cylinder_parse(support::read_corpus("string_link.cyl").c_str(), &c) == FC_OK);
  CHECK(fc_cylinder_genus(c) == 2);
  int ok = 0;
  char* diag = nullptr;
  CHECK(fc_cylinder_validate(c, &ok, &diag) == FC_OK);
  CHECK(ok == 1);
  fc_string_free(diag);
  fc_matrix* m = nullptr;
  REQUIRE(fc_cylinder_magnus(c, &m) == FC_OK);
  CHECK(fc_matrix_rows(m) == 4);
  fc_matrix_free(m);
  char* out = nullptr;
  REQUIRE(fc_report_cylinder(c, FC_FORMAT_JSON, &out) == FC_OK);
  const std::string json = take(out);
  CHECK(json.find("\"unit_ambiguity\":\"±H\"") != std::string::npos);
  CHECK(fc_report_factorize(c, "t", FC_FORMAT_TEXT, &out) == FC_ERR_RHO_INCONSISTENT);

  fc_cylinder* cc = nullptr;
  REQUIRE(fc_cylinder_compose(c, c, &cc) == FC_OK);
  CHECK(fc_cylinder_genus(cc) == 2);
  fc_cylinder_free(cc);
  fc_cylinder_free(c);
}

TEST_CASE("reports") {
  char* out = nullptr;
  REQUIRE(fc_report_fox("x1 x2", 0, 1, FC_FORMAT_TEXT, &out) == FC_OK);
  CHECK(take(out) == "1\n");
  CHECK(fc_report_fox("x1", 0, 0, static_cast<fc_format>(7), &out) == FC_ERR_INVALID_ARGUMENT);
  REQUIRE(fc_report_alexander_knot(support::read_corpus("trefoil.pres").c_str(), FC_FORMAT_JSON, &out) == FC_OK);
  CHECK(take(out).find("\"value\":\"t^2 + -t + 1\"") != std::string::npos);
  int passed = 0;
  REQUIRE(fc_report_selftest(5, FC_FORMAT_TEXT, &passed, &out) == FC_OK);
  CHECK(passed == 1);
  fc_string_free(out);
}
