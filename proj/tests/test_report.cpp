#include "doctest.h"
#include "foxcalc/linalg.hpp"
#include "foxcalc/magnus.hpp"
#include "foxcalc/report.hpp"
#include "foxcalc/selftest.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace foxcalc;

TEST_CASE("identity matrix as JSON") {
  Report r("magnus");
  r.set("matrix", matrix_strings(identity_matrix<Coefficient>(2, 0, 1)));
  const std::string out = r.emit(Format::Json);
  CHECK(out.find(R"({"command":"magnus","matrix":[["1","0"],["0","1"]],)") == 0);
  CHECK(out.back() == '\n');
}

TEST_CASE("torsion values carry their ambiguity") {
  Report r("torsion");
  r.set("torsion", TorsionValue{"1 + -g1", "±H"});
  r.add_diagnostic("note");
  const auto j = nlohmann::json::parse(r.emit(Format::Json));
  CHECK(j["torsion"]["up_to"] == "±H");
  CHECK(j["torsion"]["value"] == "1 + -g1");
  CHECK(j["diagnostics"][0] == "note");
  CHECK(r.emit(Format::Text) == "torsion: 1 + -g1 (up to ±H)\ndiagnostic: note\n");
}

TEST_CASE("text layout") {
  Report r("x");
  r.set("value", std::string("1"));
  r.set("ok", true);
  r.set("n", 3LL);
  r.set("list", std::vector<std::string>{"a", "b"});
  r.set("matrix", StringMatrix{{"1", "0"}});
  CHECK(r.emit(Format::Text) == "1\nok: true\nn: 3\nlist:\n  a\n  b\nmatrix:\n  [1, 0]\n");
}

TEST_CASE("matrices round-trip through JSON") {
  Rng rng(support::seed(61));
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentMatrix m = magnus_abelian(random_endomorphism(rng, 3, 5));
    Report r("magnus");
    r.set("matrix", matrix_strings(m));
    const StringMatrix back = parse_report_matrix(r.emit(Format::Json));
    LaurentMatrix parsed(m.rows(), m.cols(), LaurentPolynomial(3));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) parsed(i, j) = parse_laurent(back[i][j], 3);
    CHECK(parsed == m);
  }
  CHECK_THROWS_AS(parse_report_matrix("{\"matrix\": 3}"), Error);
}
