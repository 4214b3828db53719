// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "salemtwist/salemtwist.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  st_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and errors") {
  CHECK(std::string(st_status_string(ST_OK)) == "ok");
  CHECK(std::string(st_status_string(ST_RANK_MISMATCH)) == "rank mismatch");
  st_word* w = nullptr;
  CHECK(st_word_parse("a11", 10, &w) == ST_INDEX_OUT_OF_RANGE);
  CHECK(w == nullptr);
  CHECK(std::strlen(st_last_error_message()) > 0);
  CHECK(st_word_parse(nullptr, 10, &w) == ST_INVALID_ARGUMENT);
  CHECK(st_word_parse("a1 q", 10, &w) == ST_PARSE_ERROR);
  CHECK(st_default_thread_count() >= 1);
}

TEST_CASE("words") {
  st_word *u = nullptr, *v = nullptr, *uv = nullptr, *inv = nullptr, *cyc = nullptr;
  REQUIRE(st_word_parse("a1 a2^-1", 10, &u) == ST_OK);
  REQUIRE(st_word_parse("a2 b1", 10, &v) == ST_OK);
  REQUIRE(st_word_concat(u, v, &uv) == ST_OK);
  char* text = nullptr;
  REQUIRE(st_word_format(uv, &text) == ST_OK);
  CHECK(take(text) == "a1 b1");
  REQUIRE(st_word_invert(uv, &inv) == ST_OK);
  REQUIRE(st_word_format(inv, &text) == ST_OK);
  CHECK(take(text) == "b1^-1 a1^-1");
  st_word* conj = nullptr;
  REQUIRE(st_word_parse("a1 b1 a1^-1", 10, &conj) == ST_OK);
  REQUIRE(st_word_cyclic_reduce(conj, &cyc) == ST_OK);
  CHECK(st_word_length(cyc) == 1);
  CHECK(st_word_rank(cyc) == 10);
  st_word* other = nullptr;
  REQUIRE(st_word_parse("a1", 3, &other) == ST_OK);
  st_word* bad = nullptr;
  CHECK(st_word_concat(u, other, &bad) == ST_RANK_MISMATCH);
  int eq = -1;
  CHECK(st_word_equal(u, u, &eq) == ST_OK);
  CHECK(eq == 1);
  for (st_word* x : {u, v, uv, inv, cyc, conj, other}) st_word_free(x);
  st_word_free(nullptr);
}

TEST_CASE("endomorphisms and isotopy") {
  st_endo *f = nullptr, *t = nullptr, *closed = nullptr, *printed = nullptr;
  REQUIRE(st_endo_f_star(8, &f) == ST_OK);
  REQUIRE(st_endo_t_star(8, ST_TWIST_CORRECTED, &t) == ST_OK);
  REQUIRE(st_endo_t_star_closed_form(8, &closed) == ST_OK);
  REQUIRE(st_endo_t_star(8, ST_TWIST_PRINTED, &printed) == ST_OK);
  int eq = 0;
  REQUIRE(st_endo_equal(f, t, &eq) == ST_OK);
  CHECK(eq == 1);
  REQUIRE(st_endo_equal(t, closed, &eq) == ST_OK);
  CHECK(eq == 1);
  REQUIRE(st_endo_equal(f, printed, &eq) == ST_OK);
  CHECK(eq == 0);

  char* json = nullptr;
  REQUIRE(st_endo_to_json(f, &json) == ST_OK);
  const std::string j = take(json);
  CHECK(j.find("\"a1\":\"a1 a2^-1 b1 c1^-1\"") != std::string::npos);
  st_endo* back = nullptr;
  REQUIRE(st_endo_from_json(j.c_str(), 10, &back) == ST_OK);
  REQUIRE(st_endo_equal(f, back, &eq) == ST_OK);
  CHECK(eq == 1);
  st_endo* incomplete = nullptr;
  CHECK(st_endo_from_json("{\"a1\": \"a2\"}", 10, &incomplete) == ST_PARSE_ERROR);
  CHECK(st_endo_from_json("not json", 10, &incomplete) == ST_PARSE_ERROR);

  st_word *b1 = nullptr, *image = nullptr;
  REQUIRE(st_word_parse("b1", 10, &b1) == ST_OK);
  REQUIRE(st_endo_apply(f, b1, &image) == ST_OK);
  char* text = nullptr;
  REQUIRE(st_word_format(image, &text) == ST_OK);
  CHECK(take(text) == "a1");

  st_endo* ff = nullptr;
  REQUIRE(st_endo_compose(f, f, &ff) == ST_OK);
  st_matrix *a = nullptr, *aa = nullptr;
  REQUIRE(st_endo_abelianization(f, &a) == ST_OK);
  REQUIRE(st_endo_abelianization(ff, &aa) == ST_OK);
  CHECK(st_matrix_dimension(a) == 10);
  double rho = 0, err = 0;
  REQUIRE(st_matrix_spectral_radius(a, 1e-12, &rho, &err) == ST_OK);
  CHECK(std::abs(rho - 1.17628081825991750654) < 1e-8);

  st_endo* tw = nullptr;
  CHECK(st_endo_twist(8, 11, ST_TWIST_PRINTED, &tw) == ST_INDEX_OUT_OF_RANGE);
  CHECK(st_endo_f_star(7, &tw) == ST_INVALID_ARGUMENT);

  st_word_free(b1);
  st_word_free(image);
  st_matrix_free(a);
  st_matrix_free(aa);
  for (st_endo* x : {f, t, closed, printed, back, ff}) st_endo_free(x);
}

TEST_CASE("polynomials") {
  st_poly *chi = nullptr, *lin = nullptr, *q = nullptr, *lehmer = nullptr;
  REQUIRE(st_poly_chi(8, &chi) == ST_OK);
  REQUIRE(st_poly_parse("t - 1", &lin) == ST_OK);
  REQUIRE(st_poly_divide_exact(chi, lin, &q) == ST_OK);
  REQUIRE(st_poly_parse("t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1", &lehmer) == ST_OK);
  int eq = 0;
  REQUIRE(st_poly_equal(q, lehmer, &eq) == ST_OK);
  CHECK(eq == 1);
  CHECK(st_poly_degree(q) == 10);
  double root = 0, err = 1;
  REQUIRE(st_poly_real_root_max(lehmer, 1e-12, &root, &err) == ST_OK);
  CHECK(std::abs(root - 1.17628081825991750654) < 1e-11);
  CHECK(err <= 1e-12);

  char* json = nullptr;
  REQUIRE(st_poly_to_json(lehmer, &json) == ST_OK);
  CHECK(take(json) == R"(["1","1","0","-1","-1","-1","-1","-1","0","1","1"])");
  REQUIRE(st_poly_salem_json(lehmer, 1e-9, &json) == ST_OK);
  CHECK(take(json).find("\"is_salem\":true") != std::string::npos);
  REQUIRE(st_poly_strip_cyclotomic_json(chi, &json) == ST_OK);
  CHECK(take(json).find("\"cyclotomic_factors\":[{\"m\":1,\"multiplicity\":1}]") != std::string::npos);

  const char* big[] = {"-1", "0", "123456789012345678901234567890"};
  st_poly* p = nullptr;
  REQUIRE(st_poly_from_coefficients(big, 3, &p) == ST_OK);
  char* text = nullptr;
  REQUIRE(st_poly_format(p, &text) == ST_OK);
  CHECK(take(text) == "123456789012345678901234567890*t^2 - 1");
  const char* junk[] = {"12x"};
  st_poly* bad = nullptr;
  CHECK(st_poly_from_coefficients(junk, 1, &bad) == ST_PARSE_ERROR);

  st_poly *plus = nullptr, *none = nullptr;
  REQUIRE(st_poly_parse("t^2 + 1", &plus) == ST_OK);
  CHECK(st_poly_divide_exact(plus, lin, &none) == ST_INEXACT_DIVISION);
  CHECK(st_poly_real_root_max(plus, 1e-9, &root, &err) == ST_NO_REAL_ROOT);
  st_poly* c12 = nullptr;
  REQUIRE(st_poly_cyclotomic(12, &c12) == ST_OK);
  REQUIRE(st_poly_format(c12, &text) == ST_OK);
  CHECK(take(text) == "t^4 - t^2 + 1");
  for (st_poly* x : {chi, lin, q, lehmer, p, plus, c12}) st_poly_free(x);
}

TEST_CASE("matrices") {
  const long long e[] = {2, 1, 1, 1};
  st_matrix* m = nullptr;
  REQUIRE(st_matrix_create(2, e, &m) == ST_OK);
  st_poly* cp = nullptr;
  REQUIRE(st_matrix_char_poly(m, &cp) == ST_OK);
  char* text = nullptr;
  REQUIRE(st_poly_format(cp, &text) == ST_OK);
  CHECK(take(text) == "t^2 - 3*t + 1");
  REQUIRE(st_matrix_determinant(m, &text) == ST_OK);
  CHECK(take(text) == "1");
  double rho = 0;
  REQUIRE(st_matrix_spectral_radius(m, 1e-12, &rho, nullptr) == ST_OK);
  CHECK(std::abs(rho - (3 + std::sqrt(5.0)) / 2) < 1e-12);

  int id[10];
  for (int i = 0; i < 10; ++i) id[i] = i + 1;
  st_matrix* q = nullptr;
  REQUIRE(st_matrix_q_product(8, id, 10, &q) == ST_OK);
  REQUIRE(st_matrix_to_json(q, &text) == ST_OK);
  CHECK(take(text).rfind(R"([["2","2","1","2")", 0) == 0);
  id[0] = 2;
  st_matrix* bad = nullptr;
  CHECK(st_matrix_q_product(8, id, 10, &bad) == ST_INVALID_PERMUTATION);
  st_poly_free(cp);
  st_matrix_free(m);
  st_matrix_free(q);
}

TEST_CASE("reports") {
  char* out = nullptr;
  int passed = -1;
  REQUIRE(st_report_isotopy_range(8, 20, ST_TWIST_CORRECTED, 0, ST_FORMAT_TEXT, &out, &passed) == ST_OK);
  const std::string text = take(out);
  CHECK(passed == 1);
  std::size_t lines = 0, pos = 0;
  while ((pos = text.find(" PASS\n", pos)) != std::string::npos) ++lines, ++pos;
  CHECK(lines == 13);
  REQUIRE(st_report_isotopy_range(8, 8, ST_TWIST_PRINTED, 1, ST_FORMAT_TEXT, &out, &passed) == ST_OK);
  CHECK(take(out) == "n=8 FAIL (printed table; differs at a3,a4)\n");
  CHECK(passed == 0);
  CHECK(st_report_isotopy_range(8, 8, ST_TWIST_PRINTED, 1, ST_FORMAT_CSV, &out, &passed) == ST_INVALID_ARGUMENT);

  REQUIRE(st_report_salem(8, 1e-9, ST_CONVENTION_CALIBRATED, &out, &passed) == ST_OK);
  CHECK(take(out).find("\"lehmer_match\": true") != std::string::npos);
  CHECK(passed == 1);
  REQUIRE(st_report_penner(8, "(1 2)", 1e-9, &out, &passed) == ST_OK);
  CHECK(take(out).find("\"sigma\": \"(1 2)\"") != std::string::npos);
  CHECK(st_report_penner(8, "(1 12)", 1e-9, &out, &passed) == ST_INVALID_PERMUTATION);
  CHECK(st_report_family(8, 0.0, ST_CONVENTION_CALIBRATED, &out, &passed) == ST_INVALID_ARGUMENT);
  REQUIRE(st_report_growth(8, 5, 1e-9, &out, nullptr) == ST_OK);
  CHECK(take(out).find("\"samples\"") != std::string::npos);

  st_sweep_options o;
  st_sweep_options_default(&o);
  CHECK(o.samples == 1000);
  o.samples = 20;
  char *csv = nullptr, *summary = nullptr;
  REQUIRE(st_report_sweep(8, &o, &csv, &summary, &passed) == ST_OK);
  const std::string c1 = take(csv);
  take(summary);
  CHECK(passed == 1);
  CHECK(c1.rfind("permutation,stretch_factor\n", 0) == 0);
  o.threads = 1;
  REQUIRE(st_report_sweep(8, &o, &csv, nullptr, nullptr) == ST_OK);
  CHECK(take(csv) == c1);
  o.exhaustive = 1;
  o.exhaustive_bound = 100;
  CHECK(st_report_sweep(8, &o, &csv, nullptr, nullptr) == ST_INVALID_ARGUMENT);
}
