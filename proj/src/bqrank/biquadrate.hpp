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
#include <utility>
#include <vector>

#include "bqrank/arith.hpp"

namespace bqrank::biquadrate {

/// n = p^4 + q^4 = r^4 + s^4. Signs of the components are kept as produced;
/// `scale` is the common gcd divided out of a raw parametrized quadruple.
struct BiquadQuadruple {
  ExactInt p, q, r, s;
  ExactInt n;
  ExactInt scale = 1;
  bool primitive = false;
  bool degenerate = false;  // {|p|,|q|} == {|r|,|s|}
};

struct EulerParams {
  ExactInt a, b;
};

struct AbcdQuantities {
  ExactInt A, B, C, D;
  ExactInt b1, b2;  // b1 = B*D, b2 = -A*C
  // Only a == ±b breaks the four numeric properties; those parameters give
  // degenerate quadruples and the checks are skipped for them.
  bool properties_checked = false;
};

struct DescentWitnessK {
  ExactInt K;
  ExactInt N;
  ExactInt inner;  // a^6 + a^4 b^2 + 4 a^2 b^4 - 5 b^6
};

/// The four polynomials evaluated exactly, before gcd reduction.
std::vector<ExactInt> euler_components(const EulerParams& params);

/// Euler's parametrized quadruple, reduced by the common gcd.
BiquadQuadruple euler_quadruple(const EulerParams& params);

BiquadQuadruple validate_double_representation(const ExactInt& p,
                                               const ExactInt& q,
                                               const ExactInt& r,
                                               const ExactInt& s);

AbcdQuantities abcd_quantities(const EulerParams& params);

/// K = B*D - b^4*A*C, asserted to equal (a^2 * inner)^2.
DescentWitnessK descent_witness_K(const EulerParams& params);

/// The factorization printed for K, "a^4 (a^6 + b^2 a^4 + 4 b^4 a^3 - 5 b^6)^2".
/// Kept so the erratum stays demonstrable.
ExactInt printed_K_formula(const EulerParams& params);

/// One n with all of its representations 0 < p <= q <= max_base.
struct SearchHit {
  ExactInt n;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // sorted

  BiquadQuadruple quadruple() const;  // first primitive pairing, else first two
};

struct SearchOptions {
  std::uint64_t max_base = 2;
  unsigned shards = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Meet in the middle over p^4 + q^4. Only sums with a primitive pairing are
/// kept. Sorted by n, pairs lexicographic.
std::vector<SearchHit> search_double_representations(
    const SearchOptions& options);

/// One shard of the search: only sums congruent to `shard` mod `shards`.
std::vector<SearchHit> search_shard(std::uint64_t max_base, unsigned shards,
                                    unsigned shard);

/// Merge per-shard results into the canonical order.
std::vector<SearchHit> merge_shards(std::vector<std::vector<SearchHit>> parts);

/// Every (r, s) with 0 < r <= s and r^4 + s^4 = n, by scanning r.
/// Returns nullopt when the scan would exceed `max_steps`.
std::optional<std::vector<std::pair<ExactInt, ExactInt>>> representations_of(
    const ExactInt& n, std::uint64_t max_steps = 50'000'000);

/// Coprime (a, b) with |a|, b <= bound whose reduced Euler quadruple shares
/// n and both unordered pairs with `quad`.
std::optional<EulerParams> find_euler_params(const BiquadQuadruple& quad,
                                             std::uint64_t bound = 64);

}  // namespace bqrank::biquadrate
