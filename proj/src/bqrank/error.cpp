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

#include "bqrank/error.hpp"

namespace bqrank {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotEqual: return "NotEqual";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::OffCurve: return "OffCurve";
    case ErrorCode::EffortExceeded: return "EffortExceeded";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NoRepresentation: return "NoRepresentation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace bqrank
