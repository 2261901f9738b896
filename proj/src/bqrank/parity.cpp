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

#include "bqrank/parity.hpp"

namespace bqrank::parity {

namespace {

unsigned mod16(const ExactInt& n) {
  return static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 16));
}

void check_domain(const ExactInt& n) {
  if (n <= 0)
    throw Error(ErrorCode::OutOfDomain, "root number formula needs n > 0");
  if (mpz_divisible_ui_p(n.get_mpz_t(), 4))
    throw Error(ErrorCode::OutOfDomain,
                to_decimal(n) + " is divisible by 4; twist-normalize first");
}

}  // namespace

int epsilon(const ExactInt& n) {
  check_domain(n);
  switch (mod16(n)) {
    case 1: case 3: case 11: case 13:
      return -1;
    case 2: case 5: case 6: case 7: case 9: case 10: case 14: case 15:
      return 1;
    default:
      throw Error(ErrorCode::OutOfDomain,
                  "n mod 16 = " + std::to_string(mod16(n)) + " not covered");
  }
}

const char* to_string(SquarePartPath path) noexcept {
  return path == SquarePartPath::Factorization ? "factorization"
                                               : "prime_divisor_law";
}

RootNumber root_number(const ExactInt& n, const arith::Factorization& f) {
  check_domain(n);
  if (f.product() != abs(n))
    throw Error(ErrorCode::InvalidArgument, "factorization does not match n");
  RootNumber out;
  out.sign = -1;
  out.epsilon = epsilon(n);
  out.residue = mod16(n);
  for (const auto& pp : f.primes) {
    if (pp.exponent >= 4)
      throw Error(ErrorCode::OutOfDomain,
                  to_decimal(n) + " is not fourth-power-free");
    if (pp.prime >= 3 && pp.exponent == 2)
      out.square_part_product *= arith::jacobi(ExactInt(-1), pp.prime);
  }
  out.path = SquarePartPath::Factorization;
  out.omega = out.sign * out.epsilon * out.square_part_product;
  return out;
}

RootNumber root_number_by_divisor_law(const ExactInt& n) {
  check_domain(n);
  RootNumber out;
  out.sign = -1;
  out.epsilon = epsilon(n);
  out.residue = mod16(n);
  out.square_part_product = 1;
  out.path = SquarePartPath::PrimeDivisorLaw;
  out.omega = out.sign * out.epsilon;
  return out;
}

bool prime_divisor_law(const ExactInt& n, const arith::Factorization& f,
                       const biquadrate::BiquadQuadruple& quad) {
  if (!quad.primitive)
    throw Error(ErrorCode::InvalidArgument, "quadruple must be primitive");
  if (quad.n != n || f.product() != abs(n))
    throw Error(ErrorCode::InvalidArgument, "factorization does not match n");
  if (!f.certified)
    throw Error(ErrorCode::InvalidArgument, "factorization not certified");
  for (const auto& pp : f.primes) {
    if (pp.prime == 2) continue;
    if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 8) != 1)
      throw Error(ErrorCode::PropertyViolation,
                  "odd prime " + to_decimal(pp.prime) + " | " + to_decimal(n) +
                      " is not 1 mod 8");
  }
  return true;
}

AdjustedBound parity_adjusted_bound(int lower, int omega) {
  if (lower < 0)
    throw Error(ErrorCode::InvalidArgument, "lower bound must be nonnegative");
  if (omega != 1 && omega != -1)
    throw Error(ErrorCode::InvalidArgument, "omega must be +1 or -1");
  int parity_sign = lower % 2 == 0 ? 1 : -1;
  AdjustedBound out;
  out.raised = parity_sign != omega;
  out.value = out.raised ? lower + 1 : lower;
  return out;
}

AdjustedBound parity_adjusted_bound(int lower, const RootNumber& omega) {
  return parity_adjusted_bound(lower, omega.omega);
}

}  // namespace bqrank::parity
