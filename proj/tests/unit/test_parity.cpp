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

#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"
#include "bqrank/parity.hpp"

using namespace bqrank;
using namespace bqrank::parity;

namespace {

nlohmann::json fixtures() {
  std::ifstream in(BQRANK_FIXTURES);
  return nlohmann::json::parse(in);
}

arith::Factorization fourth_free(const arith::Factorization& f) {
  arith::Factorization out;
  for (const auto& pp : f.primes)
    if (pp.exponent % 4) out.primes.push_back({pp.prime, pp.exponent % 4});
  out.value = out.product();
  return out;
}

// (-1/p) is +1 exactly for p = 1 mod 4.
int minus_one_symbol(const ExactInt& p) {
  return mpz_fdiv_ui(p.get_mpz_t(), 4) == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("epsilon by residue class") {
  const int expected[16] = {0, -1, 1, -1, 0, 1, 1, 1, 0, 1, 1, -1, 0, -1, 1, 1};
  for (long n = 1; n < 400; ++n) {
    if (n % 4 == 0) {
      CHECK_THROWS_AS(epsilon(ExactInt(n)), Error);
      continue;
    }
    REQUIRE(epsilon(ExactInt(n)) == expected[n % 16]);
  }
  CHECK_THROWS_AS(epsilon(ExactInt(0)), Error);
  CHECK_THROWS_AS(epsilon(ExactInt(-3)), Error);
}

TEST_CASE("root number against a direct product formula") {
  for (long n = 1; n < 3000; ++n) {
    if (n % 4 == 0) continue;
    ExactInt N(n);
    auto f = arith::factor(N);
    bool fourth = false;
    int square_part = 1;
    for (const auto& pp : f.primes) {
      if (pp.exponent >= 4) fourth = true;
      if (pp.exponent == 2 && pp.prime != 2) square_part *= minus_one_symbol(pp.prime);
    }
    if (fourth) {
      CHECK_THROWS_AS(root_number(N, f), Error);
      continue;
    }
    auto r = root_number(N, f);
    REQUIRE(r.omega == -epsilon(N) * square_part);
    REQUIRE(r.omega == r.sign * r.epsilon * r.square_part_product);
    REQUIRE(r.conditional);
  }
}

TEST_CASE("table rows: residue, root number and listed rank parity") {
  for (const auto& row : fixtures().at("table_rows")) {
    ExactInt n = parse_int(row.at("n").get<std::string>());
    CAPTURE(row.at("n").get<std::string>());
    auto f = arith::factor(n);
    auto core = arith::fourth_power_free_part(f).core;
    auto r = root_number(core, fourth_free(f));
    REQUIRE(r.omega == r.sign * r.epsilon * r.square_part_product);
    const bool odd = mpz_odd_p(n.get_mpz_t());
    CHECK(r.residue == (odd ? 1u : 2u));
    CHECK(r.omega == (odd ? 1 : -1));
    int rank = row.at("rank").get<int>();
    CHECK((rank % 2 == 0) == (r.omega == 1));
    auto d = root_number_by_divisor_law(core);
    CHECK(d.omega == r.omega);
    CHECK(d.path == SquarePartPath::PrimeDivisorLaw);
  }
}

TEST_CASE("odd prime divisors of primitive double representations") {
  auto hits = biquadrate::search_double_representations({1000, 2});
  REQUIRE(hits.size() >= 5);
  for (const auto& hit : hits) {
    auto quad = hit.quadruple();
    auto f = arith::factor(hit.n);
    for (const auto& pp : f.primes)
      if (pp.prime != 2) REQUIRE(mpz_fdiv_ui(pp.prime.get_mpz_t(), 8) == 1);
    if (quad.primitive) CHECK(prime_divisor_law(hit.n, f, quad));
  }
  auto single = biquadrate::validate_double_representation(1, 2, 1, 2);
  CHECK(prime_divisor_law(ExactInt(17), arith::factor(ExactInt(17)), single));
}

TEST_CASE("square factor examples") {
  for (const auto& ex : fixtures().at("square_factor_examples")) {
    const auto& c = ex.at("pqrs");
    auto quad = biquadrate::validate_double_representation(
        parse_int(c.at(0).get<std::string>()), parse_int(c.at(1).get<std::string>()),
        parse_int(c.at(2).get<std::string>()), parse_int(c.at(3).get<std::string>()));
    ExactInt p = parse_int(ex.at("prime").get<std::string>());
    CHECK(quad.n % (p * p) == 0);
    auto f = arith::factor(quad.n);
    CHECK(f.exponent_of(p) >= 2);
    if (quad.primitive) CHECK(prime_divisor_law(quad.n, f, quad));
  }
}

TEST_CASE("parity adjustment") {
  CHECK(parity_adjusted_bound(3, 1).value == 4);
  CHECK(parity_adjusted_bound(3, 1).raised);
  CHECK(parity_adjusted_bound(3, -1).value == 3);
  CHECK(parity_adjusted_bound(0, 1).value == 0);
  CHECK(parity_adjusted_bound(4, -1).value == 5);
  CHECK(parity_adjusted_bound(2, 1).conditional);
}
