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

// Command-line front end. Links only the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bqrank/bqrank.h"

#ifndef BQRANK_DEFAULT_FIXTURES
#define BQRANK_DEFAULT_FIXTURES "data/reference_values.json"
#endif

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

struct ContextDeleter {
  void operator()(bq_context* ctx) const { bq_context_free(ctx); }
};
struct CertDeleter {
  void operator()(bq_certificate* c) const { bq_certificate_free(c); }
};
struct SearchDeleter {
  void operator()(bq_search_result* r) const { bq_search_free(r); }
};
struct ClaimsDeleter {
  void operator()(bq_claims* c) const { bq_claims_free(c); }
};
using Context = std::unique_ptr<bq_context, ContextDeleter>;
using Cert = std::unique_ptr<bq_certificate, CertDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  bq_string_free(s);
  return out;
}

struct Options {
  std::uint64_t max_base = 0;
  unsigned shards = 1;
  unsigned threads = 0;
  double precision = 1e-8;
  double tol = 1e-3;
  std::uint64_t factor_effort = 50'000'000;
  std::optional<std::string> format;
  std::string cache;
  std::uint64_t seed = 0x5eedb19ad4;
  bool timings = false;
  std::string output;
  std::string input;
  std::string fixtures = BQRANK_DEFAULT_FIXTURES;
  std::string n;
  std::vector<std::string> pqrs, ab;
};

int fail(bq_context* ctx, bq_status status) {
  std::cerr << "bqrank: " << bq_status_name(status);
  const char* message = bq_context_last_error(ctx);
  if (message && *message) std::cerr << ": " << message;
  std::cerr << "\n";
  return bq_exit_code(status);
}

bq_format format_or(const Options& opt, bq_format fallback) {
  if (!opt.format) return fallback;
  bq_format out;
  bq_parse_format(opt.format->c_str(), &out);
  return out;
}

// Writes to --output when given, otherwise standard output.
bool emit(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text << std::flush;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(opt.output, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  return static_cast<bool>(out);
}

int cmd_search(bq_context* ctx, const Options& opt) {
  bq_search_result* raw = nullptr;
  bq_status status = bq_search(ctx, opt.max_base, opt.shards, &raw);
  std::unique_ptr<bq_search_result, SearchDeleter> result(raw);
  if (status != BQ_OK) return fail(ctx, status);
  char* text = nullptr;
  status = bq_search_render(result.get(), format_or(opt, BQ_FORMAT_JSON_LINES), &text);
  if (status != BQ_OK) return fail(ctx, status);
  if (!emit(opt, take(text))) {
    std::cerr << "bqrank: cannot write " << opt.output << "\n";
    return kExitIo;
  }
  return 0;
}

int cmd_analyze(bq_context* ctx, const Options& opt) {
  bq_certificate* raw = nullptr;
  bq_status status;
  if (!opt.n.empty())
    status = bq_analyze_n(ctx, opt.n.c_str(), &raw);
  else if (!opt.pqrs.empty())
    status = bq_analyze_pqrs(ctx, opt.pqrs[0].c_str(), opt.pqrs[1].c_str(),
                             opt.pqrs[2].c_str(), opt.pqrs[3].c_str(), &raw);
  else if (!opt.ab.empty())
    status = bq_analyze_ab(ctx, opt.ab[0].c_str(), opt.ab[1].c_str(), &raw);
  else {
    std::cerr << "bqrank: analyze needs one of --n, --pqrs, --ab\n";
    return kExitUsage;
  }
  Cert cert(raw);
  if (!cert) return fail(ctx, status);
  char* text = nullptr;
  bq_status rendered =
      bq_certificate_render(cert.get(), format_or(opt, BQ_FORMAT_TABLE), &text);
  if (rendered != BQ_OK) return fail(ctx, rendered);
  if (!emit(opt, take(text))) {
    std::cerr << "bqrank: cannot write " << opt.output << "\n";
    return kExitIo;
  }
  return status == BQ_OK ? 0 : fail(ctx, status);
}

int cmd_verify_paper(bq_context* ctx, const Options& opt) {
  bq_claims* raw = nullptr;
  bq_status status = bq_verify_paper(ctx, opt.fixtures.c_str(), &raw);
  std::unique_ptr<bq_claims, ClaimsDeleter> claims(raw);
  if (!claims) return fail(ctx, status);
  std::size_t passed = 0, total = bq_claims_count(claims.get());
  for (std::size_t i = 0; i < total; ++i) {
    bool ok = bq_claim_passed(claims.get(), i);
    passed += ok;
    std::printf("%s  %s: %s\n", ok ? "PASS" : "FAIL", bq_claim_name(claims.get(), i),
                bq_claim_detail(claims.get(), i));
  }
  std::printf("%zu/%zu claims passed\n", passed, total);
  if (passed != total) {
    std::fprintf(stderr, "bqrank: failed claims:\n");
    for (std::size_t i = 0; i < total; ++i)
      if (!bq_claim_passed(claims.get(), i))
        std::fprintf(stderr, "  %s\n", bq_claim_name(claims.get(), i));
    return kExitVerify;
  }
  return 0;
}

struct ReportRow {
  std::string p, q, n;
};

int read_rows(bq_context* ctx, const Options& opt, std::vector<ReportRow>& rows) {
  if (opt.input.empty()) {
    char* text = nullptr;
    bq_status status = bq_fixture_rows(ctx, opt.fixtures.c_str(), &text);
    if (status != BQ_OK) return fail(ctx, status);
    for (const auto& row : nlohmann::json::parse(take(text)))
      rows.push_back({row.at("p"), row.at("q"), row.at("n")});
    return 0;
  }
  std::ifstream in(opt.input);
  if (!in) {
    std::cerr << "bqrank: cannot open " << opt.input << "\n";
    return kExitIo;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.contains("n") || !record.contains("pairs")) {
      std::cerr << "bqrank: " << opt.input << ": not a search record: " << line << "\n";
      return kExitIo;
    }
    const auto& pair = record.at("pairs").at(0);
    rows.push_back({std::to_string(pair.at(0).get<std::uint64_t>()),
                    std::to_string(pair.at(1).get<std::uint64_t>()),
                    record.at("n").get<std::string>()});
  }
  return 0;
}

int cmd_report(bq_context* ctx, const Options& opt) {
  std::vector<ReportRow> rows;
  if (int code = read_rows(ctx, opt, rows)) return code;
  const bq_format format = format_or(opt, BQ_FORMAT_CSV);
  std::ostringstream out;
  if (format == BQ_FORMAT_CSV) out << bq_report_header() << "\n";
  int worst = 0;
  for (const auto& row : rows) {
    bq_certificate* raw = nullptr;
    bq_status status = bq_analyze_n(ctx, row.n.c_str(), &raw);
    Cert cert(raw);
    if (!cert) return fail(ctx, status);
    if (status != BQ_OK) worst = std::max(worst, fail(ctx, status));
    char* text = nullptr;
    bq_status rendered =
        format == BQ_FORMAT_CSV
            ? bq_report_row(cert.get(), row.p.c_str(), row.q.c_str(), &text)
            : bq_certificate_render(cert.get(), format, &text);
    if (rendered != BQ_OK) return fail(ctx, rendered);
    out << take(text);
    if (format == BQ_FORMAT_CSV) out << "\n";
  }
  if (!emit(opt, out.str())) {
    std::cerr << "bqrank: cannot write " << opt.output << "\n";
    return kExitIo;
  }
  return worst;
}

int cmd_verify_certificate(bq_context* ctx, const Options& opt) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!opt.input.empty() && opt.input != "-") {
    file.open(opt.input);
    if (!file) {
      std::cerr << "bqrank: cannot open " << opt.input << "\n";
      return kExitIo;
    }
    in = &file;
  }
  std::string line;
  std::size_t count = 0, bad = 0;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    ++count;
    char* report = nullptr;
    bq_status status = bq_verify_certificate(ctx, line.c_str(), &report);
    std::string text = take(report);
    if (status == BQ_OK) {
      std::cout << "certificate " << count << ": ok\n";
    } else {
      ++bad;
      std::cout << "certificate " << count << ": FAILED\n";
      if (!text.empty()) std::cout << text;
      else fail(ctx, status);
    }
  }
  if (count == 0) {
    std::cerr << "bqrank: no certificates on input\n";
    return kExitUsage;
  }
  return bad ? kExitVerify : 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Rank certificates for y^2 = x^3 - n x with n = p^4 + q^4 = r^4 + s^4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bq_version());

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--precision", opt.precision, "canonical height accuracy")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", opt.tol, "Gram determinant threshold")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--factor-effort", opt.factor_effort,
                    "Pollard rho iterations per cofactor")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "table, json-lines or csv")
        ->check(CLI::IsMember({"table", "json-lines", "csv"}));
    cmd->add_option("--cache", opt.cache, "append-only cache file")
        ->envname("BQRANK_CACHE");
    cmd->add_option("--seed", opt.seed, "seed for randomized primality rounds");
    cmd->add_option("--threads", opt.threads, "worker threads, 0 for all cores");
    cmd->add_option("-o,--output", opt.output, "write to a file instead of stdout");
    cmd->add_flag("--timings", opt.timings, "include timings in certificates");
  };

  auto* search = app.add_subcommand("search", "find n with two representations");
  add_common(search);
  search->add_option("--max-base", opt.max_base, "largest p, q considered")->required();
  search->add_option("--shards", opt.shards, "number of search shards")
      ->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "certificate for one n");
  add_common(analyze);
  auto* n_opt = analyze->add_option("--n", opt.n, "the integer n");
  auto* pqrs_opt = analyze->add_option("--pqrs", opt.pqrs, "p q r s")->expected(4);
  auto* ab_opt = analyze->add_option("--ab", opt.ab, "Euler parameters a b")->expected(2);
  n_opt->excludes(pqrs_opt, ab_opt);
  pqrs_opt->excludes(ab_opt);

  auto* verify = app.add_subcommand("verify-paper", "run the reference claim suite");
  add_common(verify);
  verify->add_option("--fixtures", opt.fixtures, "reference value file");

  auto* report = app.add_subcommand("report", "bounds table for many n");
  add_common(report);
  report->add_option("--input", opt.input, "search output to report on");
  report->add_option("--fixtures", opt.fixtures, "reference value file");

  auto* check = app.add_subcommand("verify-certificate",
                                   "re-check json-lines certificates");
  add_common(check);
  check->add_option("--input", opt.input, "certificate file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  bq_context* raw = nullptr;
  if (bq_context_new(&raw) != BQ_OK) return kExitVerify;
  Context ctx(raw);
  bq_context_set_precision(ctx.get(), opt.precision);
  bq_context_set_tol(ctx.get(), opt.tol);
  bq_context_set_factor_effort(ctx.get(), opt.factor_effort);
  bq_context_set_seed(ctx.get(), opt.seed);
  bq_context_set_threads(ctx.get(), opt.threads);
  bq_context_set_timings(ctx.get(), opt.timings);
  if (!opt.cache.empty()) {
    bq_status status = bq_context_set_cache(ctx.get(), opt.cache.c_str());
    if (status != BQ_OK) return fail(ctx.get(), status);
  }

  if (*search) return cmd_search(ctx.get(), opt);
  if (*analyze) return cmd_analyze(ctx.get(), opt);
  if (*verify) return cmd_verify_paper(ctx.get(), opt);
  if (*report) return cmd_report(ctx.get(), opt);
  if (*check) return cmd_verify_certificate(ctx.get(), opt);
  return kExitUsage;
}
