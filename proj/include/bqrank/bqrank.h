// Copyright 2026 The bqrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the bqrank library.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_free function. Strings returned through a char** out
 * parameter are heap allocated and must be released with bq_string_free.
 * Functions never throw across this boundary: failures come back as a
 * bq_status, with a message available from bq_context_last_error. */

#ifndef BQRANK_BQRANK_H
#define BQRANK_BQRANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(BQRANK_BUILDING)
#define BQ_API __attribute__((visibility("default")))
#else
#define BQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bq_status {
  BQ_OK = 0,
  BQ_ERR_INVALID_ARGUMENT = 1,
  BQ_ERR_NOT_EQUAL = 2,
  BQ_ERR_PROPERTY_VIOLATION = 3,
  BQ_ERR_NOT_A_SQUARE = 4,
  BQ_ERR_OFF_CURVE = 5,
  BQ_ERR_EFFORT_EXCEEDED = 6,
  BQ_ERR_PRECISION_UNREACHABLE = 7,
  BQ_ERR_INCONCLUSIVE = 8,
  BQ_ERR_WITNESS_INVALID = 9,
  BQ_ERR_OUT_OF_DOMAIN = 10,
  BQ_ERR_NO_REPRESENTATION = 11,
  BQ_ERR_INVARIANT_VIOLATION = 12,
  BQ_ERR_IO = 13,
  BQ_ERR_VERIFICATION_FAILED = 14,
  BQ_ERR_INTERNAL = 15
} bq_status;

typedef enum bq_format {
  BQ_FORMAT_TABLE = 0,
  BQ_FORMAT_JSON_LINES = 1,
  BQ_FORMAT_CSV = 2
} bq_format;

typedef struct bq_context bq_context;
typedef struct bq_search_result bq_search_result;
typedef struct bq_certificate bq_certificate;
typedef struct bq_claims bq_claims;

BQ_API const char* bq_version(void);
BQ_API const char* bq_status_name(bq_status status);
/* Process exit code for a status: 0 ok, 1 verification failure, 2 I/O,
 * 3 no representation, 4 budget, 64 usage. */
BQ_API int bq_exit_code(bq_status status);
BQ_API bq_status bq_parse_format(const char* name, bq_format* out);
BQ_API void bq_string_free(char* s);

/* Context: options shared by every call, plus the last error message. */
BQ_API bq_status bq_context_new(bq_context** out);
BQ_API void bq_context_free(bq_context* ctx);
BQ_API const char* bq_context_last_error(const bq_context* ctx);
BQ_API bq_status bq_context_set_precision(bq_context* ctx, double precision);
BQ_API bq_status bq_context_set_tol(bq_context* ctx, double tol);
/* Pollard rho iteration budget per composite cofactor. */
BQ_API bq_status bq_context_set_factor_effort(bq_context* ctx,
                                              uint64_t rho_iterations);
BQ_API bq_status bq_context_set_seed(bq_context* ctx, uint64_t seed);
BQ_API bq_status bq_context_set_threads(bq_context* ctx, unsigned threads);
BQ_API bq_status bq_context_set_timings(bq_context* ctx, int enabled);
/* Opens (or creates) an append-only cache file. NULL detaches the cache. */
BQ_API bq_status bq_context_set_cache(bq_context* ctx, const char* path);

/* Search for n with two representations p^4 + q^4, 0 < p <= q <= max_base. */
BQ_API bq_status bq_search(bq_context* ctx, uint64_t max_base, unsigned shards,
                           bq_search_result** out);
BQ_API size_t bq_search_count(const bq_search_result* result);
/* Decimal n of hit i, or NULL when out of range. Owned by the result. */
BQ_API const char* bq_search_n(const bq_search_result* result, size_t i);
BQ_API bq_status bq_search_render(const bq_search_result* result,
                                  bq_format format, char** out);
BQ_API void bq_search_free(bq_search_result* result);

/* Certificates. Big integers are passed as decimal strings. When factoring
 * runs out of budget the call returns BQ_ERR_EFFORT_EXCEEDED and still
 * stores a partial certificate in *out. */
BQ_API bq_status bq_analyze_n(bq_context* ctx, const char* n,
                              bq_certificate** out);
BQ_API bq_status bq_analyze_pqrs(bq_context* ctx, const char* p, const char* q,
                                 const char* r, const char* s,
                                 bq_certificate** out);
BQ_API bq_status bq_analyze_ab(bq_context* ctx, const char* a, const char* b,
                               bq_certificate** out);
BQ_API int bq_certificate_complete(const bq_certificate* cert);
BQ_API int bq_certificate_descent_lower(const bq_certificate* cert);
BQ_API int bq_certificate_independence_rank(const bq_certificate* cert);
BQ_API int bq_certificate_unconditional_lower(const bq_certificate* cert);
BQ_API int bq_certificate_conditional_lower(const bq_certificate* cert);
/* -1 when the factorization of 2n is not available. */
BQ_API int bq_certificate_heuristic_upper(const bq_certificate* cert);
/* +1 or -1, or 0 when the root number is unavailable. */
BQ_API int bq_certificate_omega(const bq_certificate* cert);
BQ_API bq_status bq_certificate_render(const bq_certificate* cert,
                                       bq_format format, char** out);
BQ_API void bq_certificate_free(bq_certificate* cert);

/* Re-verifies one machine-format certificate line. Returns
 * BQ_ERR_VERIFICATION_FAILED when any check fails; *report (optional)
 * receives one line per failure, or "ok". */
BQ_API bq_status bq_verify_certificate(bq_context* ctx, const char* json_line,
                                       char** report);

/* CSV header shared by every report row: p,q,n,unconditional_lower,
 * conditional_lower,omega. */
BQ_API const char* bq_report_header(void);
/* One report row for an analyzed certificate, with p and q overridden when
 * both are non-NULL. */
BQ_API bq_status bq_report_row(const bq_certificate* cert, const char* p,
                               const char* q, char** out);
/* Table rows bundled in a fixture file, as {"p","q","n"} triples in order.
 * Writes a JSON array string. */
BQ_API bq_status bq_fixture_rows(bq_context* ctx, const char* fixtures_path,
                                 char** out);

/* The reference claim suite. */
BQ_API bq_status bq_verify_paper(bq_context* ctx, const char* fixtures_path,
                                 bq_claims** out);
BQ_API size_t bq_claims_count(const bq_claims* claims);
BQ_API const char* bq_claim_name(const bq_claims* claims, size_t i);
BQ_API const char* bq_claim_detail(const bq_claims* claims, size_t i);
BQ_API int bq_claim_passed(const bq_claims* claims, size_t i);
BQ_API double bq_claim_elapsed_ms(const bq_claims* claims, size_t i);
BQ_API void bq_claims_free(bq_claims* claims);

#ifdef __cplusplus
}
#endif

#endif /* BQRANK_BQRANK_H */
