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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"
#include "bqrank/cache.hpp"
#include "bqrank/curve.hpp"
#include "bqrank/descent.hpp"
#include "bqrank/heights.hpp"
#include "bqrank/parity.hpp"

namespace bqrank::certificate {

struct AnalysisInput {
  enum class Kind { N, Pqrs, Ab };

  Kind kind = Kind::N;
  ExactInt n;
  ExactInt p, q, r, s;
  biquadrate::EulerParams ab;

  static AnalysisInput from_n(ExactInt n);
  static AnalysisInput from_pqrs(ExactInt p, ExactInt q, ExactInt r,
                                 ExactInt s);
  static AnalysisInput from_ab(ExactInt a, ExactInt b);
};

struct AnalysisOptions {
  double precision = heights::kDefaultPrecision;
  double tol = 1e-3;
  arith::FactorEffort effort;
  std::uint64_t euler_search_bound = 64;
  std::uint64_t representation_scan_limit = 50'000'000;
  bool include_timings = false;
  Cache* cache = nullptr;
};

enum class Format { Table, JsonLines, Csv };

Format parse_format(const std::string& name);

struct PointRecord {
  std::string label;
  curve::RationalPoint point;
  heights::HeightValue height;
};

enum class LawStatus { Verified, NotApplicable, Unchecked };

const char* to_string(LawStatus status) noexcept;

struct Timings {
  double factor_ms = 0, heights_ms = 0, descent_ms = 0, total_ms = 0;
};

struct RankCertificate {
  std::string input_description;
  ExactInt n;
  ExactInt core_n;     // fourth-power-free part of n
  ExactInt twist_root; // n = core_n * twist_root^4
  std::vector<std::pair<ExactInt, ExactInt>> representations;
  biquadrate::BiquadQuadruple quadruple;
  bool double_representation = false;
  std::optional<biquadrate::EulerParams> euler;

  arith::Factorization factorization;
  bool factorization_complete = true;
  ExactInt unfactored_residual = 1;

  std::optional<curve::TorsionShape> torsion;
  std::vector<PointRecord> points;
  heights::GramMatrix gram;
  int independence_rank = 0;
  bool independence_inconclusive = false;

  descent::DescentImage phi, psi;
  int descent_lower = 0;

  std::optional<parity::RootNumber> root_number;
  LawStatus prime_divisor_law = LawStatus::Unchecked;

  int unconditional_lower = 0;
  int conditional_lower = 0;
  std::optional<int> heuristic_upper;

  std::string tool_version;
  std::uint64_t seed = 0;
  double precision = 0, tol = 0;
  std::optional<Timings> timings;

  bool complete() const { return factorization_complete; }
};

/// Runs the whole pipeline. Throws NoRepresentation / NotEqual for inputs
/// that do not resolve to a representation. A factoring budget overrun does
/// not throw: the certificate comes back with `complete() == false`.
RankCertificate analyze(const AnalysisInput& input,
                        const AnalysisOptions& options = {});

nlohmann::json to_json(const RankCertificate& cert);
std::string render(const RankCertificate& cert, Format format);
std::string csv_header();
std::string csv_row(const RankCertificate& cert);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> failures;
  int descent_lower = 0;
  int unconditional_lower = 0;
  int conditional_lower = 0;
  std::optional<int> heuristic_upper;
  std::optional<int> omega;
};

/// Re-checks a machine-format certificate from scratch: the representation,
/// every point, every witness, the factorization and the bound arithmetic.
VerificationReport verify_certificate(const nlohmann::json& cert,
                                      double precision = heights::kDefaultPrecision);

std::string render_search(const std::vector<biquadrate::SearchHit>& hits,
                          Format format);

}  // namespace bqrank::certificate
