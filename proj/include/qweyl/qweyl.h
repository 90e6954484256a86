#ifndef QWEYL_QWEYL_H
#define QWEYL_QWEYL_H

/* C interface to the quantized Weyl algebra library.
 *
 * Handles are opaque and owned by the caller. Functions return a qw_status;
 * on failure qw_last_error() describes the problem for the calling thread.
 * Strings returned through char** are freed with qw_string_free. Analysis
 * functions return a JSON record
 *   {"command", "ctx": {"field", "q"}, "input": [...], "verdict", "details"}. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qw_context qw_context;
typedef struct qw_poly qw_poly;

typedef enum {
  QW_OK = 0,
  QW_DIVISION_BY_ZERO,
  QW_FIELD_MISMATCH,
  QW_CONTEXT_MISMATCH,
  QW_ZERO_INPUT,
  QW_INVALID_MODULUS,
  QW_CHARACTERISTIC_TWO,
  QW_Q_IS_ZERO,
  QW_Q_IS_ONE,
  QW_Q_NOT_MINUS_ONE,
  QW_ZERO_DIVISOR,
  QW_DEGREE_TOO_LOW,
  QW_WRONG_SHAPE,
  QW_ZERO_LEADING_COEFFICIENT,
  QW_UNIT_INPUT,
  QW_SPACE_TOO_LARGE,
  QW_SYNTAX_ERROR,
  QW_UNKNOWN_VARIABLE,
  QW_FIELD_LITERAL_ERROR,
  QW_INVALID_ARGUMENT,
  QW_INTERNAL,
  QW_NULL_ARGUMENT
} qw_status;

/* Error name such as "QIsOne"; "Ok" for QW_OK. */
const char* qw_status_name(qw_status status);
/* Nonzero for malformed input (syntax, literals, arguments) as opposed to
 * mathematical domain errors. */
int qw_status_is_usage_error(qw_status status);
/* Message for the last failure on this thread; empty if none. */
const char* qw_last_error(void);
/* Byte offset into the parsed text for syntax errors, or -1. */
long qw_last_error_position(void);

void qw_string_free(char* s);

/* field: "q" or "fp:<p>"; q: a field literal. */
qw_status qw_context_new(const char* field, const char* q, qw_context** out);
void qw_context_free(qw_context* ctx);

qw_status qw_poly_parse(const qw_context* ctx, const char* text, qw_poly** out);
void qw_poly_free(qw_poly* f);
qw_status qw_poly_render(const qw_poly* f, char** out);
qw_status qw_poly_add(const qw_poly* f, const qw_poly* g, qw_poly** out);
qw_status qw_poly_mul(const qw_poly* f, const qw_poly* g, qw_poly** out);
/* -1 for the zero polynomial. */
qw_status qw_poly_degree(const qw_poly* f, long* out);
/* f(lambda x, mu y). */
qw_status qw_poly_substitute(const qw_poly* f, const char* lambda, const char* mu, qw_poly** out);
qw_status qw_poly_equal(const qw_poly* f, const qw_poly* g, int* out);

/* Records for the arithmetic commands. */
qw_status qw_normal(const qw_poly* f, char** json);
qw_status qw_mul(const qw_poly* f, const qw_poly* g, char** json);
qw_status qw_degree(const qw_poly* f, char** json);
qw_status qw_substitute(const qw_poly* f, const char* lambda, const char* mu, char** json);

/* Predicates and classifiers. */
qw_status qw_divides(const qw_poly* a, const qw_poly* c, char** json);
qw_status qw_normality(const qw_poly* f, char** json);
qw_status qw_central(const qw_poly* f, char** json);
qw_status qw_discriminant(const qw_poly* f, char** json);
/* all_cases != 0 lists every firing case for forms without linear terms. */
qw_status qw_factor(const qw_poly* f, int all_cases, char** json);
qw_status qw_prime(const qw_poly* f, char** json);

/* Brute-force oracles over F_p, p <= 7; degree is the search bound (<= 3). */
qw_status qw_oracle_factor(const qw_poly* f, unsigned degree, char** json);
qw_status qw_oracle_divides(const qw_poly* a, const qw_poly* c, char** json);
qw_status qw_oracle_prime_search(const qw_poly* f, unsigned degree, char** json);

/* Ore-extension route at q = -1. */
qw_status qw_ore_recenter(const qw_poly* f, char** json);
qw_status qw_ore_decide(const qw_context* ctx, const char* a, const char* k, char** json);
/* v and the samples are polynomials in x; samples may be NULL for {x, x^2, x^3}. */
qw_status qw_ore_verify(const qw_poly* v, const qw_poly* const* samples, size_t nsamples, char** json);

#ifdef __cplusplus
}
#endif

#endif
