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

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bqrank/error.hpp"

namespace bqrank {

// Exact integers and rationals. All curve and descent arithmetic runs on
// these; floating point only appears in the archimedean height series.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

ExactInt parse_int(std::string_view text);
std::string to_decimal(const ExactInt& value);
std::string to_decimal(const ExactRat& value);
template <class Expr>
std::string to_decimal(const __gmp_expr<mpz_t, Expr>& value) {
  return to_decimal(ExactInt(value));
}
template <std::integral I>
std::string to_decimal(I value) {
  return std::to_string(value);
}
ExactRat parse_rat(std::string_view text);

bool is_square(const ExactInt& value);
bool is_square(const ExactRat& value);
template <class Expr>
bool is_square(const __gmp_expr<mpz_t, Expr>& value) { return is_square(ExactInt(value)); }
ExactInt isqrt(const ExactInt& value);
/// Floor of the nonnegative fourth root.
ExactInt iroot4(const ExactInt& value);
ExactInt pow(const ExactInt& base, unsigned long exponent);

namespace arith {

ExactInt gcd_many(std::span<const ExactInt> values);

/// Jacobi symbol (a/m) for odd m >= 1.
int jacobi(const ExactInt& a, const ExactInt& m);

struct PrimePower {
  ExactInt prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  ExactInt value;
  int sign = 1;
  std::vector<PrimePower> primes;  // strictly increasing
  bool certified = true;           // every prime passed a primality test

  ExactInt product() const;  // |value| reconstructed from primes
  unsigned exponent_of(const ExactInt& prime) const;
};

struct FactorEffort {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 50'000'000;  // shared across all splits
  std::uint64_t seed = 0x5eed'b1'9a'd4ULL;
  int primality_rounds = 64;                  // error below 4^-64 = 2^-128
};

/// Thrown by `factor` when the iteration budget runs out. Carries what was
/// found so far and the composite that could not be split.
class EffortExceeded : public Error {
 public:
  EffortExceeded(Factorization partial, ExactInt residual);

  const Factorization& partial() const noexcept { return partial_; }
  const ExactInt& residual() const noexcept { return residual_; }

 private:
  Factorization partial_;
  ExactInt residual_;
};

bool is_probable_prime(const ExactInt& n, int rounds = 64,
                       std::uint64_t seed = FactorEffort{}.seed);

Factorization factor(const ExactInt& n, const FactorEffort& effort = {});

Factorization multiply(const Factorization& lhs, const Factorization& rhs);

struct SquarefreeDecomposition {
  ExactInt core;   // squarefree, same sign as n
  ExactInt root;   // positive; n = core * root^2
};

struct FourthPowerFreeDecomposition {
  ExactInt core;   // fourth-power-free, same sign as n
  ExactInt root;   // positive; n = core * root^4
};

SquarefreeDecomposition squarefree_part(const ExactInt& n,
                                        const FactorEffort& effort = {});
SquarefreeDecomposition squarefree_part(const Factorization& f);

FourthPowerFreeDecomposition fourth_power_free_part(
    const ExactInt& n, const FactorEffort& effort = {});
FourthPowerFreeDecomposition fourth_power_free_part(const Factorization& f);

/// Primes up to `bound`, sieved once per bound and shared.
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound);

}  // namespace arith
}  // namespace bqrank
