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

// JSON forms of the library's value types. Big integers are always decimal
// strings so no consumer ever parses them as floating point.

#include "json.hpp"

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"
#include "bqrank/curve.hpp"

namespace bqrank {

nlohmann::json to_json(const arith::Factorization& f);
// A partial factorization (complete = false) may leave an unfactored cofactor.
arith::Factorization factorization_from_json(const nlohmann::json& j, bool complete = true);

nlohmann::json to_json(const biquadrate::SearchHit& hit);
biquadrate::SearchHit hit_from_json(const nlohmann::json& j);

nlohmann::json to_json(const biquadrate::BiquadQuadruple& quad);
biquadrate::BiquadQuadruple quadruple_from_json(const nlohmann::json& j);

nlohmann::json to_json(const curve::RationalPoint& P);
curve::RationalPoint point_from_json(const nlohmann::json& j);

ExactInt int_from_json(const nlohmann::json& j);

}  // namespace bqrank
