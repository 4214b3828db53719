/* C interface to the salemtwist library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Strings returned through char** are allocated
 * by the library and released with st_string_free. Every fallible call
 * returns an st_status; on failure st_last_error_message() describes the
 * problem for the calling thread.
 */
#ifndef SALEMTWIST_H
#define SALEMTWIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SALEMTWIST_BUILDING)
#    define ST_API __declspec(dllexport)
#  else
#    define ST_API __declspec(dllimport)
#  endif
#else
#  define ST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
  ST_OK = 0,
  ST_INVALID_ARGUMENT = 1,
  ST_RANK_MISMATCH = 2,
  ST_INDEX_OUT_OF_RANGE = 3,
  ST_INEXACT_DIVISION = 4,
  ST_NO_REAL_ROOT = 5,
  ST_ZERO_POLYNOMIAL = 6,
  ST_PARSE_ERROR = 7,
  ST_NO_CONVENTION = 8,
  ST_INVALID_PERMUTATION = 9,
  ST_INTERNAL_ERROR = 10
} st_status;

typedef enum st_convention { ST_CONVENTION_CALIBRATED = 0, ST_CONVENTION_LITERAL = 1 } st_convention;

/* ST_TWIST_PRINTED uses the displayed twist actions; ST_TWIST_CORRECTED
 * changes tau_3 on a3, a4 to b1 a_n c1^-1 a_i. */
typedef enum st_twist_table { ST_TWIST_CORRECTED = 0, ST_TWIST_PRINTED = 1 } st_twist_table;

typedef enum st_format { ST_FORMAT_JSON = 0, ST_FORMAT_TEXT = 1, ST_FORMAT_CSV = 2 } st_format;

typedef struct st_word st_word;
typedef struct st_endo st_endo;
typedef struct st_poly st_poly;
typedef struct st_matrix st_matrix;

ST_API const char* st_version(void);
ST_API const char* st_status_string(st_status status);
ST_API const char* st_last_error_message(void);
ST_API void st_string_free(char* s);
/* SALEMTWIST_THREADS if set, else the hardware concurrency. */
ST_API unsigned st_default_thread_count(void);

/* Words in the free group of the given rank; rank n + 2 names the
 * generators a1..an, b1, c1. Text form: "a3 a3^-1 b1 c1^-1", empty "1". */
ST_API st_status st_word_parse(const char* text, size_t rank, st_word** out);
ST_API st_status st_word_format(const st_word* w, char** out);
ST_API size_t st_word_length(const st_word* w);
ST_API size_t st_word_rank(const st_word* w);
ST_API st_status st_word_concat(const st_word* u, const st_word* v, st_word** out);
ST_API st_status st_word_invert(const st_word* w, st_word** out);
ST_API st_status st_word_cyclic_reduce(const st_word* w, st_word** out);
ST_API st_status st_word_equal(const st_word* u, const st_word* v, int* out);
ST_API void st_word_free(st_word* w);

/* Endomorphisms; JSON form maps generator names to word strings. */
ST_API st_status st_endo_identity(size_t rank, st_endo** out);
ST_API st_status st_endo_from_json(const char* json, size_t rank, st_endo** out);
ST_API st_status st_endo_to_json(const st_endo* phi, char** out);
ST_API st_status st_endo_f_star(int n, st_endo** out);
ST_API st_status st_endo_twist(int n, int i, st_twist_table table, st_endo** out);
ST_API st_status st_endo_t_star(int n, st_twist_table table, st_endo** out);
ST_API st_status st_endo_t_star_closed_form(int n, st_endo** out);
ST_API st_status st_endo_apply(const st_endo* phi, const st_word* w, st_word** out);
/* (phi o psi)(g) = phi(psi(g)) */
ST_API st_status st_endo_compose(const st_endo* phi, const st_endo* psi, st_endo** out);
ST_API st_status st_endo_equal(const st_endo* phi, const st_endo* psi, int* out);
ST_API st_status st_endo_abelianization(const st_endo* phi, st_matrix** out);
ST_API void st_endo_free(st_endo* phi);

/* Integer polynomials; text form "t^10 + t^9 - t^7 - 2*t + 1". */
ST_API st_status st_poly_parse(const char* text, st_poly** out);
/* Decimal coefficient strings, constant term first. */
ST_API st_status st_poly_from_coefficients(const char* const* coefficients, size_t count, st_poly** out);
ST_API st_status st_poly_format(const st_poly* p, char** out);
ST_API st_status st_poly_to_json(const st_poly* p, char** out);
ST_API int st_poly_degree(const st_poly* p);
ST_API st_status st_poly_equal(const st_poly* p, const st_poly* q, int* out);
ST_API st_status st_poly_divide_exact(const st_poly* p, const st_poly* q, st_poly** out);
ST_API st_status st_poly_cyclotomic(unsigned long m, st_poly** out);
/* t^k (t^3 - t - 1) + t^3 + t^2 - 1 */
ST_API st_status st_poly_chi(int k, st_poly** out);
ST_API st_status st_poly_real_root_max(const st_poly* p, double tol, double* value, double* error_bound);
ST_API st_status st_poly_strip_cyclotomic_json(const st_poly* p, char** out);
ST_API st_status st_poly_salem_json(const st_poly* p, double tol, char** out);
ST_API void st_poly_free(st_poly* p);

/* Square integer matrices; entries row-major. */
ST_API st_status st_matrix_create(size_t dimension, const long long* entries, st_matrix** out);
ST_API size_t st_matrix_dimension(const st_matrix* m);
ST_API st_status st_matrix_to_json(const st_matrix* m, char** out);
ST_API st_status st_matrix_char_poly(const st_matrix* m, st_poly** out);
ST_API st_status st_matrix_determinant(const st_matrix* m, char** decimal);
ST_API st_status st_matrix_spectral_radius(const st_matrix* m, double tol, double* value, double* error_bound);
/* Penner product for sigma given in one-line form of length n + 2. */
ST_API st_status st_matrix_q_product(int n, const int* one_line, size_t length, st_matrix** out);
ST_API void st_matrix_free(st_matrix* m);

/* Reports. Each writes a document to *out and, when passed is non-null,
 * sets *passed to 1 iff every check in the document passed. */
ST_API st_status st_report_family(int n, double tol, st_convention convention, char** out, int* passed);
/* ST_FORMAT_JSON or ST_FORMAT_TEXT (one "n=<n> PASS|FAIL" line per n). */
ST_API st_status st_report_isotopy_range(int first, int last, st_twist_table table, unsigned threads, st_format format,
                                         char** out, int* passed);
ST_API st_status st_report_salem(int n, double tol, st_convention convention, char** out, int* passed);
/* sigma_cycles like "(1 3 2)(4 5)"; NULL or "" is the identity. */
ST_API st_status st_report_penner(int n, const char* sigma_cycles, double tol, char** out, int* passed);
ST_API st_status st_report_growth(int n, int iterations, double tol, char** out, int* passed);

typedef struct st_sweep_options {
  int exhaustive;            /* nonzero: all permutations, needs (n+2)! <= exhaustive_bound */
  size_t samples;            /* sample mode */
  uint64_t seed;             /* sample mode */
  size_t exhaustive_bound;
  double tol;
  unsigned threads;          /* 0: st_default_thread_count() */
} st_sweep_options;

ST_API void st_sweep_options_default(st_sweep_options* options);
/* csv and summary_json may each be NULL when not wanted. */
ST_API st_status st_report_sweep(int n, const st_sweep_options* options, char** csv, char** summary_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* SALEMTWIST_H */
