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

// Exercises the shared library through its C header only.

#include <cstdio>
#include <cstring>
#include <string>

#include "doctest.h"

#include "bqrank/bqrank.h"

namespace {

struct Ctx {
  bq_context* ctx = nullptr;
  Ctx() { REQUIRE(bq_context_new(&ctx) == BQ_OK); }
  ~Ctx() { bq_context_free(ctx); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  bq_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("exit code mapping") {
  CHECK(bq_exit_code(BQ_OK) == 0);
  CHECK(bq_exit_code(BQ_ERR_VERIFICATION_FAILED) == 1);
  CHECK(bq_exit_code(BQ_ERR_IO) == 2);
  CHECK(bq_exit_code(BQ_ERR_NO_REPRESENTATION) == 3);
  CHECK(bq_exit_code(BQ_ERR_NOT_EQUAL) == 3);
  CHECK(bq_exit_code(BQ_ERR_EFFORT_EXCEEDED) == 4);
  CHECK(bq_exit_code(BQ_ERR_INVALID_ARGUMENT) == 64);
  CHECK(std::strcmp(bq_status_name(BQ_ERR_IO), "io") == 0);
  CHECK(std::strlen(bq_version()) > 0);
}

TEST_CASE("search through the C interface") {
  Ctx c;
  bq_search_result* result = nullptr;
  REQUIRE(bq_search(c.ctx, 200, 2, &result) == BQ_OK);
  REQUIRE(bq_search_count(result) == 1);
  CHECK(std::string(bq_search_n(result, 0)) == "635318657");
  CHECK(bq_search_n(result, 1) == nullptr);
  char* text = nullptr;
  REQUIRE(bq_search_render(result, BQ_FORMAT_CSV, &text) == BQ_OK);
  CHECK(take(text) == "n,p,q,r,s\n635318657,59,158,133,134\n");
  bq_search_free(result);

  CHECK(bq_search(c.ctx, 1, 1, &result) == BQ_ERR_INVALID_ARGUMENT);
  CHECK(result == nullptr);
  CHECK(std::strlen(bq_context_last_error(c.ctx)) > 0);
}

TEST_CASE("analyze, render and verify") {
  Ctx c;
  bq_certificate* cert = nullptr;
  REQUIRE(bq_analyze_ab(c.ctx, "2", "1", &cert) == BQ_OK);
  CHECK(bq_certificate_complete(cert));
  CHECK(bq_certificate_descent_lower(cert) == 3);
  CHECK(bq_certificate_independence_rank(cert) == 4);
  CHECK(bq_certificate_conditional_lower(cert) == 4);
  CHECK(bq_certificate_heuristic_upper(cert) == 9);
  CHECK(bq_certificate_omega(cert) == 1);
  char* json = nullptr;
  REQUIRE(bq_certificate_render(cert, BQ_FORMAT_JSON_LINES, &json) == BQ_OK);
  std::string line = take(json);
  char* report = nullptr;
  CHECK(bq_verify_certificate(c.ctx, line.c_str(), &report) == BQ_OK);
  CHECK(take(report) == "ok\n");

  std::string tampered = line;
  auto at = tampered.find("\"descent_lower\":3");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 17, "\"descent_lower\":4");
  CHECK(bq_verify_certificate(c.ctx, tampered.c_str(), &report) ==
        BQ_ERR_VERIFICATION_FAILED);
  CHECK(take(report).find("descent") != std::string::npos);
  CHECK(bq_verify_certificate(c.ctx, "{not json", nullptr) == BQ_ERR_INVALID_ARGUMENT);

  char* row = nullptr;
  REQUIRE(bq_report_row(cert, "133", "134", &row) == BQ_OK);
  CHECK(take(row) == "133,134,635318657,4,4,+1");
  CHECK(std::string(bq_report_header()) ==
        "p,q,n,unconditional_lower,conditional_lower,omega");
  bq_certificate_free(cert);
}

TEST_CASE("analyze failures") {
  Ctx c;
  bq_certificate* cert = nullptr;
  CHECK(bq_analyze_n(c.ctx, "18", &cert) == BQ_ERR_NO_REPRESENTATION);
  CHECK(cert == nullptr);
  CHECK(bq_analyze_pqrs(c.ctx, "1", "2", "3", "4", &cert) == BQ_ERR_NOT_EQUAL);
  CHECK(bq_analyze_n(c.ctx, "12abc", &cert) == BQ_ERR_INVALID_ARGUMENT);
  CHECK(bq_analyze_n(c.ctx, nullptr, &cert) == BQ_ERR_INVALID_ARGUMENT);
  CHECK(bq_analyze_n(nullptr, "17", &cert) == BQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("budget exhaustion still returns a certificate") {
  Ctx c;
  bq_context_set_factor_effort(c.ctx, 1);
  bq_certificate* cert = nullptr;
  // Both prime factors lie far above the trial division bound.
  bq_status status = bq_analyze_n(c.ctx, "1000052001014008788028577", &cert);
  CHECK(status == BQ_ERR_EFFORT_EXCEEDED);
  REQUIRE(cert != nullptr);
  CHECK_FALSE(bq_certificate_complete(cert));
  CHECK(bq_certificate_heuristic_upper(cert) == -1);
  bq_certificate_free(cert);
}

TEST_CASE("context setters validate") {
  Ctx c;
  CHECK(bq_context_set_precision(c.ctx, 0) == BQ_ERR_INVALID_ARGUMENT);
  CHECK(bq_context_set_tol(c.ctx, -1) == BQ_ERR_INVALID_ARGUMENT);
  CHECK(bq_context_set_precision(c.ctx, 1e-9) == BQ_OK);
  CHECK(bq_context_set_cache(c.ctx, nullptr) == BQ_OK);
  bq_format format;
  CHECK(bq_parse_format("csv", &format) == BQ_OK);
  CHECK(format == BQ_FORMAT_CSV);
  CHECK(bq_parse_format("yaml", &format) == BQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reference claims through the C interface") {
  Ctx c;
  bq_claims* claims = nullptr;
  CHECK(bq_verify_paper(c.ctx, "/nonexistent/fixtures.json", &claims) == BQ_ERR_IO);
  CHECK(claims == nullptr);
  char* rows = nullptr;
  REQUIRE(bq_fixture_rows(c.ctx, BQRANK_FIXTURES, &rows) == BQ_OK);
  CHECK(take(rows).find("\"635318657\"") != std::string::npos);
}
