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

#include <string>
#include <vector>

#include "json.hpp"

#include "bqrank/arith.hpp"
#include "bqrank/cache.hpp"
#include "bqrank/heights.hpp"

namespace bqrank::reference {

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
};

struct ReferenceOptions {
  double precision = heights::kDefaultPrecision;
  arith::FactorEffort effort;
  Cache* cache = nullptr;
  unsigned threads = 0;
};

/// Loads the bundled fixture file; throws Io when it cannot be read.
nlohmann::json load_fixtures(const std::string& path);

/// Every desk-checkable claim, in a fixed order. Never throws for a failing
/// claim; the exception text lands in `detail`.
std::vector<ClaimResult> run_reference_claims(const nlohmann::json& fixtures,
                                              const ReferenceOptions& options = {});

}  // namespace bqrank::reference
