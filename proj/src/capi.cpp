#include "salemtwist/salemtwist.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "salemtwist/error.hpp"
#include "salemtwist/parallel.hpp"
#include "salemtwist/report.hpp"

using namespace salemtwist;

struct st_word {
  Word value;
};
struct st_endo {
  Endomorphism value;
};
struct st_poly {
  IntPolynomial value;
};
struct st_matrix {
  IntMatrix value;
};

namespace {

thread_local std::string last_error;

st_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return ST_INVALID_ARGUMENT;
    case ErrorCode::rank_mismatch: return ST_RANK_MISMATCH;
    case ErrorCode::index_out_of_range: return ST_INDEX_OUT_OF_RANGE;
    case ErrorCode::inexact_division: return ST_INEXACT_DIVISION;
    case ErrorCode::no_real_root: return ST_NO_REAL_ROOT;
    case ErrorCode::zero_polynomial: return ST_ZERO_POLYNOMIAL;
    case ErrorCode::parse_error: return ST_PARSE_ERROR;
    case ErrorCode::no_convention: return ST_NO_CONVENTION;
    case ErrorCode::invalid_permutation: return ST_INVALID_PERMUTATION;
  }
  return ST_INTERNAL_ERROR;
}

template <typename Fn>
st_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return ST_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return map_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return ST_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ST_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ST_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string(name) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const report::Json& doc, char** out, int* passed) {
  require(out, "out");
  if (passed != nullptr) *passed = doc.value("passed", false) ? 1 : 0;
  *out = dup(doc.dump(2) + "\n");
}

void check_tol(double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
}

family::Convention convention_of(st_convention c) {
  if (c == ST_CONVENTION_LITERAL) return family::Convention::literal;
  if (c == ST_CONVENTION_CALIBRATED) return family::Convention::calibrated;
  throw Error(ErrorCode::invalid_argument, "unknown convention");
}

family::TwistTable table_of(st_twist_table t) {
  if (t == ST_TWIST_PRINTED) return family::TwistTable::printed;
  if (t == ST_TWIST_CORRECTED) return family::TwistTable::corrected;
  throw Error(ErrorCode::invalid_argument, "unknown twist table");
}

template <typename Handle, typename Value>
void hand_out(Handle** out, Value v) {
  require(out, "out");
  *out = new Handle{std::move(v)};
}

}  // namespace

extern "C" {

const char* st_version(void) { return "0.1.0"; }

const char* st_status_string(st_status status) {
  switch (status) {
    case ST_OK: return "ok";
    case ST_INVALID_ARGUMENT: return "invalid argument";
    case ST_RANK_MISMATCH: return "rank mismatch";
    case ST_INDEX_OUT_OF_RANGE: return "index out of range";
    case ST_INEXACT_DIVISION: return "inexact division";
    case ST_NO_REAL_ROOT: return "no real root";
    case ST_ZERO_POLYNOMIAL: return "zero polynomial";
    case ST_PARSE_ERROR: return "parse error";
    case ST_NO_CONVENTION: return "no convention";
    case ST_INVALID_PERMUTATION: return "invalid permutation";
    case ST_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* st_last_error_message(void) { return last_error.c_str(); }

void st_string_free(char* s) { std::free(s); }

unsigned st_default_thread_count(void) { return default_thread_count(); }

st_status st_word_parse(const char* text, size_t rank, st_word** out) {
  return guarded([&] {
    require(text, "text");
    hand_out(out, parse_word(text, rank));
  });
}

st_status st_word_format(const st_word* w, char** out) {
  return guarded([&] {
    require(w, "word");
    require(out, "out");
    *out = dup(format_word(w->value));
  });
}

size_t st_word_length(const st_word* w) { return w ? w->value.length() : 0; }
size_t st_word_rank(const st_word* w) { return w ? w->value.rank() : 0; }

st_status st_word_concat(const st_word* u, const st_word* v, st_word** out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    hand_out(out, concat(u->value, v->value));
  });
}

st_status st_word_invert(const st_word* w, st_word** out) {
  return guarded([&] {
    require(w, "word");
    hand_out(out, invert(w->value));
  });
}

st_status st_word_cyclic_reduce(const st_word* w, st_word** out) {
  return guarded([&] {
    require(w, "word");
    hand_out(out, cyclic_reduce(w->value));
  });
}

st_status st_word_equal(const st_word* u, const st_word* v, int* out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    require(out, "out");
    if (u->value.rank() != v->value.rank()) throw Error(ErrorCode::rank_mismatch, "word ranks differ");
    *out = u->value == v->value;
  });
}

void st_word_free(st_word* w) { delete w; }

st_status st_endo_identity(size_t rank, st_endo** out) {
  return guarded([&] { hand_out(out, Endomorphism::identity(rank)); });
}

st_status st_endo_from_json(const char* json, size_t rank, st_endo** out) {
  return guarded([&] {
    require(json, "json");
    hand_out(out, report::endomorphism_from_json(report::Json::parse(json), rank));
  });
}

st_status st_endo_to_json(const st_endo* phi, char** out) {
  return guarded([&] {
    require(phi, "endomorphism");
    require(out, "out");
    *out = dup(report::to_json(phi->value).dump());
  });
}

st_status st_endo_f_star(int n, st_endo** out) {
  return guarded([&] { hand_out(out, family::f_star(n)); });
}

st_status st_endo_twist(int n, int i, st_twist_table table, st_endo** out) {
  return guarded([&] { hand_out(out, family::twist_gen(n, i, table_of(table))); });
}

st_status st_endo_t_star(int n, st_twist_table table, st_endo** out) {
  return guarded([&] { hand_out(out, family::t_star(n, table_of(table))); });
}

st_status st_endo_t_star_closed_form(int n, st_endo** out) {
  return guarded([&] { hand_out(out, family::t_star_closed_form(n)); });
}

st_status st_endo_apply(const st_endo* phi, const st_word* w, st_word** out) {
  return guarded([&] {
    require(phi, "endomorphism");
    require(w, "word");
    hand_out(out, apply(phi->value, w->value));
  });
}

st_status st_endo_compose(const st_endo* phi, const st_endo* psi, st_endo** out) {
  return guarded([&] {
    require(phi, "phi");
    require(psi, "psi");
    hand_out(out, compose(phi->value, psi->value));
  });
}

st_status st_endo_equal(const st_endo* phi, const st_endo* psi, int* out) {
  return guarded([&] {
    require(phi, "phi");
    require(psi, "psi");
    require(out, "out");
    *out = endo_equal(phi->value, psi->value);
  });
}

st_status st_endo_abelianization(const st_endo* phi, st_matrix** out) {
  return guarded([&] {
    require(phi, "endomorphism");
    hand_out(out, abelianization(phi->value));
  });
}

void st_endo_free(st_endo* phi) { delete phi; }

st_status st_poly_parse(const char* text, st_poly** out) {
  return guarded([&] {
    require(text, "text");
    hand_out(out, IntPolynomial::parse(text));
  });
}

st_status st_poly_from_coefficients(const char* const* coefficients, size_t count, st_poly** out) {
  return guarded([&] {
    if (count > 0) require(coefficients, "coefficients");
    report::Json a = report::Json::array();
    for (size_t i = 0; i < count; ++i) {
      require(coefficients[i], "coefficient");
      a.push_back(std::string(coefficients[i]));
    }
    hand_out(out, report::polynomial_from_json(a));
  });
}

st_status st_poly_format(const st_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = dup(p->value.to_string());
  });
}

st_status st_poly_to_json(const st_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = dup(report::to_json(p->value).dump());
  });
}

int st_poly_degree(const st_poly* p) { return p ? p->value.degree() : -1; }

st_status st_poly_equal(const st_poly* p, const st_poly* q, int* out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    *out = p->value == q->value;
  });
}

st_status st_poly_divide_exact(const st_poly* p, const st_poly* q, st_poly** out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    hand_out(out, poly_divide_exact(p->value, q->value));
  });
}

st_status st_poly_cyclotomic(unsigned long m, st_poly** out) {
  return guarded([&] { hand_out(out, cyclotomic(m)); });
}

st_status st_poly_chi(int k, st_poly** out) {
  return guarded([&] { hand_out(out, family::chi_family(k)); });
}

st_status st_poly_real_root_max(const st_poly* p, double tol, double* value, double* error_bound) {
  return guarded([&] {
    require(p, "polynomial");
    require(value, "value");
    const CertifiedReal r = real_root_max(p->value, tol);
    *value = r.value;
    if (error_bound != nullptr) *error_bound = r.error_bound;
  });
}

st_status st_poly_strip_cyclotomic_json(const st_poly* p, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = dup(report::to_json(strip_cyclotomic(p->value)).dump());
  });
}

st_status st_poly_salem_json(const st_poly* p, double tol, char** out) {
  return guarded([&] {
    require(p, "polynomial");
    require(out, "out");
    *out = dup(report::to_json(salem_certify(p->value, tol)).dump());
  });
}

void st_poly_free(st_poly* p) { delete p; }

st_status st_matrix_create(size_t dimension, const long long* entries, st_matrix** out) {
  return guarded([&] {
    if (dimension == 0) throw Error(ErrorCode::invalid_argument, "matrix dimension must be positive");
    require(entries, "entries");
    IntMatrix m(dimension);
    for (size_t r = 0; r < dimension; ++r)
      for (size_t c = 0; c < dimension; ++c) m(r, c) = mpz_class(std::to_string(entries[r * dimension + c]));
    hand_out(out, std::move(m));
  });
}

size_t st_matrix_dimension(const st_matrix* m) { return m ? m->value.dimension() : 0; }

st_status st_matrix_to_json(const st_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup(report::to_json(m->value).dump());
  });
}

st_status st_matrix_char_poly(const st_matrix* m, st_poly** out) {
  return guarded([&] {
    require(m, "matrix");
    hand_out(out, char_poly(m->value));
  });
}

st_status st_matrix_determinant(const st_matrix* m, char** decimal) {
  return guarded([&] {
    require(m, "matrix");
    require(decimal, "out");
    *decimal = dup(determinant(m->value).get_str());
  });
}

st_status st_matrix_spectral_radius(const st_matrix* m, double tol, double* value, double* error_bound) {
  return guarded([&] {
    require(m, "matrix");
    require(value, "value");
    check_tol(tol);
    if (m->value.is_zero()) throw Error(ErrorCode::invalid_argument, "spectral radius of the zero matrix");
    const CertifiedReal r = spectral_radius(m->value, tol);
    *value = r.value;
    if (error_bound != nullptr) *error_bound = r.error_bound;
  });
}

st_status st_matrix_q_product(int n, const int* one_line, size_t length, st_matrix** out) {
  return guarded([&] {
    require(one_line, "one_line");
    hand_out(out, penner::q_product(n, penner::Permutation(std::vector<int>(one_line, one_line + length))));
  });
}

void st_matrix_free(st_matrix* m) { delete m; }

st_status st_report_family(int n, double tol, st_convention convention, char** out, int* passed) {
  return guarded([&] {
    check_tol(tol);
    emit(report::family_report(n, tol, convention_of(convention)), out, passed);
  });
}

st_status st_report_isotopy_range(int first, int last, st_twist_table table, unsigned threads, st_format format,
                                  char** out, int* passed) {
  return guarded([&] {
    require(out, "out");
    const report::Json doc = report::isotopy_range(first, last, table_of(table), threads);
    if (format == ST_FORMAT_TEXT) {
      if (passed != nullptr) *passed = doc["passed"].get<bool>();
      *out = dup(report::isotopy_text(doc));
    } else if (format == ST_FORMAT_JSON) {
      emit(doc, out, passed);
    } else {
      throw Error(ErrorCode::invalid_argument, "isotopy reports are JSON or text");
    }
  });
}

st_status st_report_salem(int n, double tol, st_convention convention, char** out, int* passed) {
  return guarded([&] {
    check_tol(tol);
    emit(report::salem_report(n, tol, convention_of(convention)), out, passed);
  });
}

st_status st_report_penner(int n, const char* sigma_cycles, double tol, char** out, int* passed) {
  return guarded([&] {
    check_tol(tol);
    if (n < 8) throw Error(ErrorCode::invalid_argument, "n must be at least 8");
    const auto sigma = penner::Permutation::parse_cycles(sigma_cycles ? sigma_cycles : "", n + 2);
    emit(report::penner_report(n, sigma, tol), out, passed);
  });
}

st_status st_report_growth(int n, int iterations, double tol, char** out, int* passed) {
  return guarded([&] {
    check_tol(tol);
    emit(report::growth_report(n, iterations, tol), out, passed);
  });
}

void st_sweep_options_default(st_sweep_options* options) {
  if (options == nullptr) return;
  const penner::SweepOptions d;
  options->exhaustive = 0;
  options->samples = d.count;
  options->seed = d.seed;
  options->exhaustive_bound = 0;
  options->tol = d.tol;
  options->threads = 0;
}

st_status st_report_sweep(int n, const st_sweep_options* options, char** csv, char** summary_json, int* passed) {
  return guarded([&] {
    require(options, "options");
    report::SweepRequest req;
    req.n = n;
    req.options.mode = options->exhaustive ? penner::SweepMode::exhaustive : penner::SweepMode::sample;
    req.options.count = options->samples;
    req.options.seed = options->seed;
    req.options.exhaustive_bound = options->exhaustive_bound;
    req.options.tol = options->tol;
    req.options.threads = options->threads;
    const penner::SweepReport r = penner::sigma_sweep(n, req.options);
    const report::Json summary = report::sweep_summary(req, r);
    if (passed != nullptr) *passed = summary["passed"].get<bool>();
    if (csv != nullptr) *csv = dup(report::sweep_csv(r));
    if (summary_json != nullptr) *summary_json = dup(summary.dump(2) + "\n");
  });
}

}  // extern "C"
