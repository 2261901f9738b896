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

#include "bqrank/bqrank.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "bqrank/cache.hpp"
#include "bqrank/certificate.hpp"
#include "bqrank/reference.hpp"
#include "bqrank/serialize.hpp"

using namespace bqrank;
using nlohmann::json;

struct bq_context {
  certificate::AnalysisOptions options;
  unsigned threads = 0;
  std::unique_ptr<Cache> cache;
  std::string last_error;
};

struct bq_search_result {
  std::vector<biquadrate::SearchHit> hits;
  std::vector<std::string> decimals;
};

struct bq_certificate {
  certificate::RankCertificate cert;
};

struct bq_claims {
  std::vector<reference::ClaimResult> claims;
};

namespace {

bq_status from_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return BQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotEqual: return BQ_ERR_NOT_EQUAL;
    case ErrorCode::PropertyViolation: return BQ_ERR_PROPERTY_VIOLATION;
    case ErrorCode::NotASquare: return BQ_ERR_NOT_A_SQUARE;
    case ErrorCode::OffCurve: return BQ_ERR_OFF_CURVE;
    case ErrorCode::EffortExceeded: return BQ_ERR_EFFORT_EXCEEDED;
    case ErrorCode::PrecisionUnreachable: return BQ_ERR_PRECISION_UNREACHABLE;
    case ErrorCode::Inconclusive: return BQ_ERR_INCONCLUSIVE;
    case ErrorCode::WitnessInvalid: return BQ_ERR_WITNESS_INVALID;
    case ErrorCode::OutOfDomain: return BQ_ERR_OUT_OF_DOMAIN;
    case ErrorCode::NoRepresentation: return BQ_ERR_NO_REPRESENTATION;
    case ErrorCode::InvariantViolation: return BQ_ERR_INVARIANT_VIOLATION;
    case ErrorCode::Io: return BQ_ERR_IO;
  }
  return BQ_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the context message.
template <class Body>
bq_status guard(bq_context* ctx, Body&& body) {
  try {
    if (ctx) ctx->last_error.clear();
    return body();
  } catch (const Error& e) {
    if (ctx) ctx->last_error = e.what();
    return from_code(e.code());
  } catch (const json::exception& e) {
    if (ctx) ctx->last_error = std::string("malformed JSON: ") + e.what();
    return BQ_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    if (ctx) ctx->last_error = "out of memory";
    return BQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return BQ_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

certificate::Format to_format(bq_format format) {
  switch (format) {
    case BQ_FORMAT_TABLE: return certificate::Format::Table;
    case BQ_FORMAT_JSON_LINES: return certificate::Format::JsonLines;
    case BQ_FORMAT_CSV: return certificate::Format::Csv;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format");
}

ExactInt arg(const char* text, const char* name) {
  if (!text) throw Error(ErrorCode::InvalidArgument, std::string(name) + " is NULL");
  return parse_int(text);
}

bq_status analyze_into(bq_context* ctx, const certificate::AnalysisInput& input,
                       bq_certificate** out) {
  if (!ctx || !out) return BQ_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guard(ctx, [&] {
    auto handle = std::make_unique<bq_certificate>();
    ctx->options.cache = ctx->cache.get();
    handle->cert = certificate::analyze(input, ctx->options);
    const bool complete = handle->cert.complete();
    if (!complete)
      ctx->last_error = "factoring budget exhausted; residual " +
                        to_decimal(handle->cert.unfactored_residual) +
                        " left unfactored";
    *out = handle.release();
    return complete ? BQ_OK : BQ_ERR_EFFORT_EXCEEDED;
  });
}

}  // namespace

extern "C" {

const char* bq_version(void) { return kToolVersion; }

const char* bq_status_name(bq_status status) {
  switch (status) {
    case BQ_OK: return "ok";
    case BQ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case BQ_ERR_NOT_EQUAL: return "not_equal";
    case BQ_ERR_PROPERTY_VIOLATION: return "property_violation";
    case BQ_ERR_NOT_A_SQUARE: return "not_a_square";
    case BQ_ERR_OFF_CURVE: return "off_curve";
    case BQ_ERR_EFFORT_EXCEEDED: return "effort_exceeded";
    case BQ_ERR_PRECISION_UNREACHABLE: return "precision_unreachable";
    case BQ_ERR_INCONCLUSIVE: return "inconclusive";
    case BQ_ERR_WITNESS_INVALID: return "witness_invalid";
    case BQ_ERR_OUT_OF_DOMAIN: return "out_of_domain";
    case BQ_ERR_NO_REPRESENTATION: return "no_representation";
    case BQ_ERR_INVARIANT_VIOLATION: return "invariant_violation";
    case BQ_ERR_IO: return "io";
    case BQ_ERR_VERIFICATION_FAILED: return "verification_failed";
    case BQ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

int bq_exit_code(bq_status status) {
  switch (status) {
    case BQ_OK: return 0;
    case BQ_ERR_IO: return 2;
    case BQ_ERR_NOT_EQUAL:
    case BQ_ERR_NO_REPRESENTATION: return 3;
    case BQ_ERR_EFFORT_EXCEEDED:
    case BQ_ERR_PRECISION_UNREACHABLE: return 4;
    case BQ_ERR_INVALID_ARGUMENT:
    case BQ_ERR_OUT_OF_DOMAIN:
    case BQ_ERR_OFF_CURVE: return 64;
    default: return 1;
  }
}

bq_status bq_parse_format(const char* name, bq_format* out) {
  if (!name || !out) return BQ_ERR_INVALID_ARGUMENT;
  return guard(nullptr, [&] {
    switch (certificate::parse_format(name)) {
      case certificate::Format::Table: *out = BQ_FORMAT_TABLE; break;
      case certificate::Format::JsonLines: *out = BQ_FORMAT_JSON_LINES; break;
      case certificate::Format::Csv: *out = BQ_FORMAT_CSV; break;
    }
    return BQ_OK;
  });
}

void bq_string_free(char* s) { std::free(s); }

bq_status bq_context_new(bq_context** out) {
  if (!out) return BQ_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) bq_context();
  return *out ? BQ_OK : BQ_ERR_INTERNAL;
}

void bq_context_free(bq_context* ctx) { delete ctx; }

const char* bq_context_last_error(const bq_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

bq_status bq_context_set_precision(bq_context* ctx, double precision) {
  if (!ctx || !(precision > 0)) return BQ_ERR_INVALID_ARGUMENT;
  ctx->options.precision = precision;
  return BQ_OK;
}

bq_status bq_context_set_tol(bq_context* ctx, double tol) {
  if (!ctx || !(tol > 0)) return BQ_ERR_INVALID_ARGUMENT;
  ctx->options.tol = tol;
  return BQ_OK;
}

bq_status bq_context_set_factor_effort(bq_context* ctx, uint64_t rho_iterations) {
  if (!ctx || rho_iterations == 0) return BQ_ERR_INVALID_ARGUMENT;
  ctx->options.effort.rho_iterations = rho_iterations;
  return BQ_OK;
}

bq_status bq_context_set_seed(bq_context* ctx, uint64_t seed) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  ctx->options.effort.seed = seed;
  return BQ_OK;
}

bq_status bq_context_set_threads(bq_context* ctx, unsigned threads) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  ctx->threads = threads;
  return BQ_OK;
}

bq_status bq_context_set_timings(bq_context* ctx, int enabled) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  ctx->options.include_timings = enabled != 0;
  return BQ_OK;
}

bq_status bq_context_set_cache(bq_context* ctx, const char* path) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  return guard(ctx, [&] {
    ctx->cache.reset();
    if (path && *path) ctx->cache = std::make_unique<Cache>(path);
    return BQ_OK;
  });
}

bq_status bq_search(bq_context* ctx, uint64_t max_base, unsigned shards,
                    bq_search_result** out) {
  if (!ctx || !out) return BQ_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guard(ctx, [&] {
    auto handle = std::make_unique<bq_search_result>();
    handle->hits = cached_search({max_base, shards, ctx->threads}, ctx->cache.get());
    for (const auto& hit : handle->hits) handle->decimals.push_back(to_decimal(hit.n));
    *out = handle.release();
    return BQ_OK;
  });
}

size_t bq_search_count(const bq_search_result* result) {
  return result ? result->hits.size() : 0;
}

const char* bq_search_n(const bq_search_result* result, size_t i) {
  if (!result || i >= result->decimals.size()) return nullptr;
  return result->decimals[i].c_str();
}

bq_status bq_search_render(const bq_search_result* result, bq_format format,
                           char** out) {
  if (!result || !out) return BQ_ERR_INVALID_ARGUMENT;
  return guard(nullptr, [&] {
    *out = dup_string(certificate::render_search(result->hits, to_format(format)));
    return BQ_OK;
  });
}

void bq_search_free(bq_search_result* result) { delete result; }

bq_status bq_analyze_n(bq_context* ctx, const char* n, bq_certificate** out) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  certificate::AnalysisInput input;
  bq_status parsed = guard(ctx, [&] {
    input = certificate::AnalysisInput::from_n(arg(n, "n"));
    return BQ_OK;
  });
  return parsed == BQ_OK ? analyze_into(ctx, input, out) : parsed;
}

bq_status bq_analyze_pqrs(bq_context* ctx, const char* p, const char* q,
                          const char* r, const char* s, bq_certificate** out) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  certificate::AnalysisInput input;
  bq_status parsed = guard(ctx, [&] {
    input = certificate::AnalysisInput::from_pqrs(arg(p, "p"), arg(q, "q"),
                                                  arg(r, "r"), arg(s, "s"));
    return BQ_OK;
  });
  return parsed == BQ_OK ? analyze_into(ctx, input, out) : parsed;
}

bq_status bq_analyze_ab(bq_context* ctx, const char* a, const char* b,
                        bq_certificate** out) {
  if (!ctx) return BQ_ERR_INVALID_ARGUMENT;
  certificate::AnalysisInput input;
  bq_status parsed = guard(ctx, [&] {
    input = certificate::AnalysisInput::from_ab(arg(a, "a"), arg(b, "b"));
    return BQ_OK;
  });
  return parsed == BQ_OK ? analyze_into(ctx, input, out) : parsed;
}

int bq_certificate_complete(const bq_certificate* cert) {
  return cert && cert->cert.complete();
}

int bq_certificate_descent_lower(const bq_certificate* cert) {
  return cert ? cert->cert.descent_lower : -1;
}

int bq_certificate_independence_rank(const bq_certificate* cert) {
  return cert ? cert->cert.independence_rank : -1;
}

int bq_certificate_unconditional_lower(const bq_certificate* cert) {
  return cert ? cert->cert.unconditional_lower : -1;
}

int bq_certificate_conditional_lower(const bq_certificate* cert) {
  return cert ? cert->cert.conditional_lower : -1;
}

int bq_certificate_heuristic_upper(const bq_certificate* cert) {
  return cert && cert->cert.heuristic_upper ? *cert->cert.heuristic_upper : -1;
}

int bq_certificate_omega(const bq_certificate* cert) {
  return cert && cert->cert.root_number ? cert->cert.root_number->omega : 0;
}

bq_status bq_certificate_render(const bq_certificate* cert, bq_format format,
                                char** out) {
  if (!cert || !out) return BQ_ERR_INVALID_ARGUMENT;
  return guard(nullptr, [&] {
    *out = dup_string(certificate::render(cert->cert, to_format(format)));
    return BQ_OK;
  });
}

void bq_certificate_free(bq_certificate* cert) { delete cert; }

bq_status bq_verify_certificate(bq_context* ctx, const char* json_line,
                                char** report) {
  if (!ctx || !json_line) return BQ_ERR_INVALID_ARGUMENT;
  if (report) *report = nullptr;
  return guard(ctx, [&] {
    auto parsed = json::parse(json_line);
    auto result = certificate::verify_certificate(parsed, ctx->options.precision);
    std::string text;
    for (const auto& failure : result.failures) text += failure + "\n";
    if (result.ok) text = "ok\n";
    else ctx->last_error = result.failures.front();
    if (report) *report = dup_string(text);
    return result.ok ? BQ_OK : BQ_ERR_VERIFICATION_FAILED;
  });
}

const char* bq_report_header(void) {
  static const std::string header = certificate::csv_header();
  return header.c_str();
}

bq_status bq_report_row(const bq_certificate* cert, const char* p,
                        const char* q, char** out) {
  if (!cert || !out) return BQ_ERR_INVALID_ARGUMENT;
  return guard(nullptr, [&] {
    std::string row = certificate::csv_row(cert->cert);
    if (p && q) row = std::string(p) + "," + q + row.substr(row.find(',', row.find(',') + 1));
    *out = dup_string(row);
    return BQ_OK;
  });
}

bq_status bq_fixture_rows(bq_context* ctx, const char* fixtures_path, char** out) {
  if (!ctx || !fixtures_path || !out) return BQ_ERR_INVALID_ARGUMENT;
  return guard(ctx, [&] {
    auto fixtures = reference::load_fixtures(fixtures_path);
    json rows = json::array();
    for (const auto& row : fixtures.at("table_rows"))
      rows.push_back({{"p", row.at("p")}, {"q", row.at("q")}, {"n", row.at("n")}});
    *out = dup_string(rows.dump());
    return BQ_OK;
  });
}

bq_status bq_verify_paper(bq_context* ctx, const char* fixtures_path,
                          bq_claims** out) {
  if (!ctx || !fixtures_path || !out) return BQ_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guard(ctx, [&] {
    auto fixtures = reference::load_fixtures(fixtures_path);
    reference::ReferenceOptions options;
    options.precision = ctx->options.precision;
    options.effort = ctx->options.effort;
    options.cache = ctx->cache.get();
    options.threads = ctx->threads;
    auto handle = std::make_unique<bq_claims>();
    handle->claims = reference::run_reference_claims(fixtures, options);
    bool all = true;
    for (const auto& claim : handle->claims) all = all && claim.passed;
    *out = handle.release();
    return all ? BQ_OK : BQ_ERR_VERIFICATION_FAILED;
  });
}

size_t bq_claims_count(const bq_claims* claims) {
  return claims ? claims->claims.size() : 0;
}

const char* bq_claim_name(const bq_claims* claims, size_t i) {
  if (!claims || i >= claims->claims.size()) return nullptr;
  return claims->claims[i].name.c_str();
}

const char* bq_claim_detail(const bq_claims* claims, size_t i) {
  if (!claims || i >= claims->claims.size()) return nullptr;
  return claims->claims[i].detail.c_str();
}

int bq_claim_passed(const bq_claims* claims, size_t i) {
  return claims && i < claims->claims.size() && claims->claims[i].passed;
}

double bq_claim_elapsed_ms(const bq_claims* claims, size_t i) {
  if (!claims || i >= claims->claims.size()) return 0;
  return claims->claims[i].elapsed_ms;
}

void bq_claims_free(bq_claims* claims) { delete claims; }

}  // extern "C"
