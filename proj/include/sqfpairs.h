/*
 * sqfpairs: exact toolkit for consecutive square-free values of
 * x^2+y^2+z^2+z+c and x^2+y^2+z+c (c = 1, 2). Complete exponential sums,
 * twisted congruence counts, singular-series constants, lattice censuses,
 * and the verification suites tying them together.
 *
 * C API over an opaque context. Every call returns a status code; a
 * human-readable message for the last failure is kept on the context.
 * Strings returned through char** are heap-allocated; release them with
 * sqf_string_free.
 */

#ifndef SQFPAIRS_H
#define SQFPAIRS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SQF_API __declspec(dllexport)
#else
#define SQF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sqf_ctx sqf_ctx;

typedef enum sqf_status {
    SQF_OK = 0,
    SQF_ERROR_VERIFY = 1,         /* suite ran to completion, failures found */
    SQF_ERROR_USAGE = 2,          /* bad arguments, unknown suite, bad config */
    SQF_ERROR_BUDGET = 3,         /* configured work budget exceeded */
    SQF_ERROR_NOT_COPRIME = 4,
    SQF_ERROR_EVEN_MODULUS = 5,
    SQF_ERROR_BAD_MODULUS = 6,
    SQF_ERROR_NOT_PRIME = 7,
    SQF_ERROR_BAD_RANGE = 8,
    SQF_ERROR_CORRUPT_CACHE = 9,
    SQF_ERROR_DEGENERATE_FIT = 10,
    SQF_ERROR_IO = 11,
    SQF_ERROR_INTERNAL = 12
} sqf_status;

typedef enum sqf_family {
    SQF_FAMILY_A = 0, /* x^2 + y^2 + z^2 + z + c */
    SQF_FAMILY_B = 1  /* x^2 + y^2 + z + c */
} sqf_family;

typedef enum sqf_sum_kind {
    SQF_SUM_GAUSS = 0,
    SQF_SUM_SALIE = 1,
    SQF_SUM_KLOOSTERMAN = 2
} sqf_sum_kind;

typedef enum sqf_method {
    SQF_METHOD_DIRECT = 0, /* enumeration of the solution set (the oracle) */
    SQF_METHOD_CLOSED = 1  /* divisor-sum expansion; odd coprime moduli only */
} sqf_method;

typedef enum sqf_format {
    SQF_FORMAT_JSON = 0,
    SQF_FORMAT_CSV = 1
} sqf_format;

/* ---- context ---------------------------------------------------------- */

SQF_API sqf_status sqf_ctx_new(sqf_ctx** out);
SQF_API void sqf_ctx_free(sqf_ctx* ctx);

/* Message for the most recent failing call on this context. */
SQF_API const char* sqf_ctx_last_error(const sqf_ctx* ctx);

/* Flat key = value configuration; see the README for the key list. */
SQF_API sqf_status sqf_ctx_set_option(sqf_ctx* ctx, const char* key, const char* value);
SQF_API sqf_status sqf_ctx_load_config(sqf_ctx* ctx, const char* path);
SQF_API sqf_status sqf_ctx_set_threads(sqf_ctx* ctx, int threads);      /* 0 = auto */
SQF_API sqf_status sqf_ctx_set_budget(sqf_ctx* ctx, int64_t iterations);

/* Attach a JSON-lines local-density cache; loads existing entries. */
SQF_API sqf_status sqf_ctx_attach_cache(sqf_ctx* ctx, const char* path);

SQF_API void sqf_string_free(char* s);

/* ---- scalar evaluations ------------------------------------------------ */

SQF_API sqf_status sqf_exp_sum(sqf_ctx* ctx, sqf_sum_kind kind, int64_t q, int64_t m, int64_t n,
                               double* re, double* im);

SQF_API sqf_status sqf_geometric_sum(sqf_ctx* ctx, double xi, int64_t n1, int64_t n2, double* re,
                                     double* im);

/* Twisted solution count; *is_integer reports whether the untwisted value
 * rounded to an integer within tolerance (then *integer_value holds it). */
SQF_API sqf_status sqf_lambda(sqf_ctx* ctx, sqf_family family, int64_t q1, int64_t q2, int64_t l,
                              int64_t m, int64_t n, sqf_method method, double* re, double* im,
                              int* is_integer, int64_t* integer_value);

SQF_API sqf_status sqf_local_density(sqf_ctx* ctx, sqf_family family, int64_t p, int64_t* lambda_p2_1,
                                     int64_t* lambda_1_p2, double* term);

SQF_API sqf_status sqf_singular_series(sqf_ctx* ctx, sqf_family family, int64_t cutoff, double* sigma,
                                       double* tail_estimate);

/* Census of triples in [1, h]^3 with both shifted values square-free.
 * sigma_cutoff <= 0 selects the configured default for the family. */
SQF_API sqf_status sqf_gamma_census(sqf_ctx* ctx, sqf_family family, int64_t h, int64_t sigma_cutoff,
                                    int64_t* count, double* main_term, double* residual, double* sigma);

/* ---- rendered commands (exact bytes the CLI prints) -------------------- */

SQF_API sqf_status sqf_render_exp_sum(sqf_ctx* ctx, sqf_sum_kind kind, int64_t q, int64_t m, int64_t n,
                                      sqf_format format, char** out);

SQF_API sqf_status sqf_render_lambda(sqf_ctx* ctx, sqf_family family, int64_t q1, int64_t q2, int64_t l,
                                     int64_t m, int64_t n, sqf_method method, sqf_format format,
                                     char** out);

SQF_API sqf_status sqf_render_sigma(sqf_ctx* ctx, sqf_family family, int64_t cutoff, sqf_format format,
                                    char** out);

SQF_API sqf_status sqf_render_gamma(sqf_ctx* ctx, sqf_family family, int64_t h, int64_t sigma_cutoff,
                                    sqf_format format, char** out);

/* Least-squares residual exponent over an ascending census grid. */
SQF_API sqf_status sqf_render_fit(sqf_ctx* ctx, sqf_family family, const int64_t* h_list, size_t h_count,
                                  int64_t sigma_cutoff, sqf_format format, char** out);

/* Runs one verification suite (or "all"); *out receives the report and the
 * status distinguishes pass (SQF_OK) from failures (SQF_ERROR_VERIFY). */
SQF_API sqf_status sqf_verify(sqf_ctx* ctx, const char* suite, sqf_format format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SQFPAIRS_H */
