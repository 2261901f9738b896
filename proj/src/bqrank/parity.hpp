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

#include <optional>
#include <string>

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"

namespace bqrank::parity {

/// -1 for n = 1, 3, 11, 13 (mod 16); +1 for 2, 5, 6, 7, 9, 10, 14, 15.
/// OutOfDomain for n <= 0 or 4 | n.
int epsilon(const ExactInt& n);

enum class SquarePartPath {
  Factorization,      // product over p^2 || n read off a full factorization
  PrimeDivisorLaw,    // every odd prime is 1 mod 8, so each factor is +1
};

const char* to_string(SquarePartPath path) noexcept;

struct RootNumber {
  int omega = 1;
  int sign = -1;  // sgn(-n)
  int epsilon = 1;
  int square_part_product = 1;
  unsigned residue = 0;  // n mod 16
  SquarePartPath path = SquarePartPath::Factorization;
  bool conditional = true;  // meaningful only under the parity conjecture
};

/// omega(E_n) = sgn(-n) * epsilon(n) * prod_{p^2 || n, p >= 3} (-1/p).
RootNumber root_number(const ExactInt& n, const arith::Factorization& f);

/// For a primitive double-biquadrate n whose factorization stalled. Every
/// odd prime of such n is 1 mod 8, so each (-1/p) factor is +1.
RootNumber root_number_by_divisor_law(const ExactInt& n);

/// Every odd prime divisor of n is 1 (mod 8). Violation throws
/// PropertyViolation naming the offending prime.
bool prime_divisor_law(const ExactInt& n, const arith::Factorization& f,
                       const biquadrate::BiquadQuadruple& quad);

struct AdjustedBound {
  int value = 0;
  bool conditional = true;
  bool raised = false;
};

/// Raises `lower` by one when its parity disagrees with omega.
AdjustedBound parity_adjusted_bound(int lower, const RootNumber& omega);
AdjustedBound parity_adjusted_bound(int lower, int omega);

}  // namespace bqrank::parity
