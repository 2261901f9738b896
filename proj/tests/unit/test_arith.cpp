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

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "bqrank/arith.hpp"

using namespace bqrank;
using namespace bqrank::arith;

namespace {

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

// Legendre symbol by scanning the squares mod p.
int legendre_scan(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("jacobi matches a quadratic residue scan for primes below 500") {
  for (std::int64_t m = 3; m < 500; m += 2) {
    if (!is_prime_small(m)) continue;
    for (std::int64_t a = -60; a < 2 * m + 5; ++a)
      REQUIRE(jacobi(ExactInt(static_cast<long>(a)), ExactInt(static_cast<long>(m))) ==
              legendre_scan(a, m));
  }
}

TEST_CASE("jacobi is multiplicative in the modulus") {
  for (std::int64_t m1 = 1; m1 < 60; m1 += 2)
    for (std::int64_t m2 = 1; m2 < 60; m2 += 2)
      for (long a = -20; a <= 20; ++a)
        REQUIRE(jacobi(ExactInt(a), ExactInt(static_cast<long>(m1 * m2))) ==
                jacobi(ExactInt(a), ExactInt(static_cast<long>(m1))) *
                    jacobi(ExactInt(a), ExactInt(static_cast<long>(m2))));
}

TEST_CASE("jacobi rejects even or nonpositive moduli") {
  CHECK_THROWS_AS(jacobi(ExactInt(3), ExactInt(8)), Error);
  CHECK_THROWS_AS(jacobi(ExactInt(3), ExactInt(-7)), Error);
  CHECK(jacobi(ExactInt(-1), ExactInt(17)) == 1);
  CHECK(jacobi(ExactInt(-1), ExactInt(19)) == -1);
}

TEST_CASE("primality") {
  for (std::uint64_t n = 0; n < 3000; ++n)
    REQUIRE(is_probable_prime(ExactInt(static_cast<unsigned long>(n))) ==
            is_prime_small(n));
  // Carmichael numbers and strong pseudoprimes to small bases.
  for (const char* c : {"561", "41041", "825265", "3215031751", "2152302898747",
                        "3474749660383", "341550071728321", "3825123056546413051"})
    CHECK_FALSE(is_probable_prime(parse_int(c)));
  CHECK(is_probable_prime(parse_int("18446744073709551557")));
  CHECK(is_probable_prime(parse_int("170141183460469231731687303715884105727")));
}

TEST_CASE("factor and multiply are inverse on random prime multisets") {
  std::mt19937_64 rng(20260214);
  auto random_prime = [&](int bits) {
    for (;;) {
      std::uint64_t v = rng() >> (64 - bits);
      v |= 1ULL | (1ULL << (bits - 1));
      ExactInt c(static_cast<unsigned long>(v));
      if (is_probable_prime(c)) return c;
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ExactInt> primes;
    int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      int bits = trial < 30 ? 8 + static_cast<int>(rng() % 24) : 24 + static_cast<int>(rng() % 8);
      primes.push_back(random_prime(bits));
      if (rng() % 3 == 0) primes.push_back(primes.back());
    }
    Factorization acc = factor(ExactInt(1));
    ExactInt n = 1;
    for (const auto& p : primes) {
      acc = multiply(acc, factor(p));
      n *= p;
    }
    Factorization direct = factor(n);
    REQUIRE(direct.product() == n);
    REQUIRE(direct.primes == acc.primes);
    for (const auto& pp : direct.primes) REQUIRE(is_probable_prime(pp.prime));
  }
}

TEST_CASE("factor splits products of large primes") {
  ExactInt p = parse_int("2305843009213693951");  // 2^61 - 1
  ExactInt q = parse_int("4294967311");
  auto f = factor(p * q * q);
  REQUIRE(f.primes.size() == 2);
  CHECK(f.primes[0] == PrimePower{q, 2});
  CHECK(f.primes[1] == PrimePower{p, 1});
  auto g = factor(ExactInt(-360));
  CHECK(g.sign == -1);
  CHECK(g.product() == 360);
  CHECK(g.exponent_of(ExactInt(2)) == 3);
  CHECK(g.exponent_of(ExactInt(7)) == 0);
}

TEST_CASE("factor reports the residual when the budget runs out") {
  ExactInt p = parse_int("1000000000000000003");
  ExactInt q = parse_int("1000000000000000009");
  FactorEffort effort;
  effort.rho_iterations = 1000;
  try {
    factor(ExactInt(6) * p * q, effort);
    FAIL("expected EffortExceeded");
  } catch (const EffortExceeded& e) {
    CHECK(e.code() == ErrorCode::EffortExceeded);
    CHECK(e.residual() == p * q);
    CHECK(e.partial().product() * e.residual() == 6 * p * q);
  }
}

TEST_CASE("squarefree and fourth-power-free parts are minimal up to 10^6") {
  constexpr std::int64_t kLimit = 1'000'000;
  std::vector<char> has_square(kLimit + 1, 0), has_fourth(kLimit + 1, 0);
  for (std::int64_t d = 2; d * d <= kLimit; ++d) {
    for (std::int64_t m = d * d; m <= kLimit; m += d * d) has_square[m] = 1;
    if (d * d * d * d <= kLimit)
      for (std::int64_t m = d * d * d * d; m <= kLimit; m += d * d * d * d)
        has_fourth[m] = 1;
  }
  for (std::int64_t v = -kLimit; v <= kLimit; ++v) {
    if (v == 0) continue;
    ExactInt n(static_cast<long>(v));
    auto f = factor(n);
    auto s = squarefree_part(f);
    auto q = fourth_power_free_part(f);
    REQUIRE(s.core * s.root * s.root == n);
    REQUIRE(q.core * q.root * q.root * q.root * q.root == n);
    REQUIRE(sgn(s.core) == sgn(n));
    REQUIRE(has_square[ExactInt(abs(s.core)).get_ui()] == 0);
    REQUIRE(has_fourth[ExactInt(abs(q.core)).get_ui()] == 0);
  }
}

TEST_CASE("integer roots and squares") {
  for (long v = 0; v < 20000; ++v) {
    ExactInt n(v);
    ExactInt r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
    ExactInt r4 = iroot4(n);
    REQUIRE(pow(r4, 4) <= n);
    REQUIRE(pow(r4 + 1, 4) > n);
    REQUIRE(is_square(n) == (r * r == n));
  }
  CHECK(is_square(ExactRat(parse_rat("49/121"))));
  CHECK_FALSE(is_square(ExactRat(parse_rat("-4/9"))));
  CHECK(to_decimal(parse_rat("6/-4")) == "-3/2");
  CHECK_THROWS_AS(parse_int("12x"), Error);
}

TEST_CASE("gcd of many") {
  std::vector<ExactInt> v{ExactInt(118), ExactInt(316), ExactInt(266), ExactInt(268)};
  CHECK(gcd_many(v) == 2);
  std::vector<ExactInt> w{ExactInt(0), ExactInt(0)};
  CHECK(gcd_many(w) == 0);
}
