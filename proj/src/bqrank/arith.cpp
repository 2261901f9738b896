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

#include "bqrank/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace bqrank {

namespace {

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

ExactInt parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (!all_digits(digits))
    throw Error(ErrorCode::InvalidArgument,
                "not a decimal integer: '" + std::string(text) + "'");
  ExactInt out;
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  out.set_str(owned, 10);
  return out;
}

ExactRat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(parse_int(text));
  ExactInt num = parse_int(text.substr(0, slash));
  ExactInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  ExactRat out(num, den);
  out.canonicalize();
  return out;
}

std::string to_decimal(const ExactInt& value) { return value.get_str(10); }

std::string to_decimal(const ExactRat& value) { return value.get_str(10); }

bool is_square(const ExactInt& value) {
  return mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

bool is_square(const ExactRat& value) {
  return is_square(value.get_num()) && is_square(value.get_den());
}

ExactInt isqrt(const ExactInt& value) {
  require(value >= 0, "isqrt of a negative integer");
  ExactInt out;
  mpz_sqrt(out.get_mpz_t(), value.get_mpz_t());
  return out;
}

ExactInt iroot4(const ExactInt& value) {
  require(value >= 0, "fourth root of a negative integer");
  ExactInt out;
  mpz_root(out.get_mpz_t(), value.get_mpz_t(), 4);
  return out;
}

ExactInt pow(const ExactInt& base, unsigned long exponent) {
  ExactInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

namespace arith {

ExactInt gcd_many(std::span<const ExactInt> values) {
  require(!values.empty(), "gcd of an empty list");
  ExactInt g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return abs(g);
}

// Binary Jacobi: pull out factors of two, then reciprocity.
int jacobi(const ExactInt& a, const ExactInt& m) {
  if (m <= 0 || mpz_even_p(m.get_mpz_t()))
    throw Error(ErrorCode::InvalidArgument,
                "jacobi modulus must be odd and positive, got " +
                    to_decimal(m));
  ExactInt x = a % m;
  if (x < 0) x += m;
  ExactInt y = m;
  int result = 1;
  while (x != 0) {
    mp_bitcnt_t twos = mpz_scan1(x.get_mpz_t(), 0);
    x >>= twos;
    unsigned long y8 = mpz_fdiv_ui(y.get_mpz_t(), 8);
    if ((twos & 1) && (y8 == 3 || y8 == 5)) result = -result;
    if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && y8 % 4 == 3) result = -result;
    std::swap(x, y);
    x %= y;
  }
  return y == 1 ? result : 0;
}

ExactInt Factorization::product() const {
  ExactInt out = 1;
  for (const auto& pp : primes) out *= pow(pp.prime, pp.exponent);
  return out;
}

unsigned Factorization::exponent_of(const ExactInt& prime) const {
  for (const auto& pp : primes)
    if (pp.prime == prime) return pp.exponent;
  return 0;
}

EffortExceeded::EffortExceeded(Factorization partial, ExactInt residual)
    : Error(ErrorCode::EffortExceeded,
            "factoring budget exhausted; unfactored composite " +
                to_decimal(residual)),
      partial_(std::move(partial)),
      residual_(std::move(residual)) {}

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::uint32_t>> sieved;
  std::lock_guard lock(mutex);
  auto it = sieved.find(bound);
  if (it != sieved.end()) return it->second;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return sieved.emplace(bound, std::move(primes)).first->second;
}

namespace {

bool miller_rabin_round(const ExactInt& n, const ExactInt& n_minus_1,
                        const ExactInt& odd_part, mp_bitcnt_t twos,
                        const ExactInt& base) {
  ExactInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(),
           n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t i = 1; i < twos; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 gcd64(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

u64 diff64(u64 a, u64 b) { return a > b ? a - b : b - a; }

struct Budget {
  std::uint64_t remaining;

  bool spend(std::uint64_t steps) {
    if (steps > remaining) {
      remaining = 0;
      return false;
    }
    remaining -= steps;
    return true;
  }
};

// Brent's variant of Pollard rho. Returns 0 when the budget runs out.
u64 rho_split64(u64 n, gmp_randclass& rng, Budget& budget) {
  if (n % 2 == 0) return 2;
  constexpr u64 kBatch = 128;
  while (true) {
    u64 c = mpz_class(rng.get_z_range(n - 1)).get_ui() + 1;
    u64 y = mpz_class(rng.get_z_range(n)).get_ui();
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      if (!budget.spend(r)) return 0;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        u64 steps = std::min(kBatch, r - k);
        if (!budget.spend(steps)) return 0;
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, diff64(x, y), n);
        }
        g = gcd64(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd64(diff64(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

ExactInt rho_split(const ExactInt& n, gmp_randclass& rng, Budget& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  if (mpz_fits_ulong_p(n.get_mpz_t()))
    return ExactInt(rho_split64(n.get_ui(), rng, budget));
  constexpr std::uint64_t kBatch = 128;
  while (true) {
    ExactInt c = rng.get_z_range(n - 1) + 1;
    ExactInt y = rng.get_z_range(n);
    ExactInt g = 1, q = 1, x, ys, t;
    std::uint64_t r = 1;
    auto f = [&](ExactInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
      x = y;
      if (!budget.spend(r)) return 0;
      for (std::uint64_t i = 0; i < r; ++i) f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        std::uint64_t steps = std::min(kBatch, r - k);
        if (!budget.spend(steps)) return 0;
        for (std::uint64_t i = 0; i < steps; ++i) {
          f(y);
          t = abs(x - y);
          q = (q * t) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      do {
        f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void add_prime(std::map<ExactInt, unsigned>& into, const ExactInt& p,
               unsigned e) {
  into[p] += e;
}

std::vector<PrimePower> to_prime_powers(
    const std::map<ExactInt, unsigned>& found) {
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (const auto& [p, e] : found) out.push_back({p, e});
  return out;
}

}  // namespace

bool is_probable_prime(const ExactInt& n, int rounds, std::uint64_t seed) {
  if (n < 2) return false;
  static constexpr unsigned kFixedBases[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  for (unsigned p : kFixedBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  ExactInt n_minus_1 = n - 1;
  mp_bitcnt_t twos = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  ExactInt odd_part = n_minus_1 >> twos;
  for (unsigned p : kFixedBases)
    if (!miller_rabin_round(n, n_minus_1, odd_part, twos, ExactInt(p)))
      return false;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  for (int i = 0; i < rounds; ++i) {
    ExactInt base = rng.get_z_range(n - 3) + 2;
    if (!miller_rabin_round(n, n_minus_1, odd_part, twos, base)) return false;
  }
  return true;
}

Factorization factor(const ExactInt& n, const FactorEffort& effort) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
  Factorization out;
  out.value = n;
  out.sign = sgn(n) < 0 ? -1 : 1;
  std::map<ExactInt, unsigned> found;
  ExactInt m = abs(n);

  const auto bound = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(effort.trial_bound, 0xffffffffULL));
  bool exhausted_trial = true;
  for (std::uint32_t p : small_primes(std::max<std::uint32_t>(bound, 2))) {
    if (ExactInt(p) * p > m) {
      exhausted_trial = false;
      break;
    }
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    add_prime(found, ExactInt(p), e);
  }
  if (m == 1) {
    out.primes = to_prime_powers(found);
    return out;
  }
  if (!exhausted_trial) {
    // Every prime up to sqrt(m) was tried.
    add_prime(found, m, 1);
    out.primes = to_prime_powers(found);
    return out;
  }

  const ExactInt trial_square = ExactInt(bound) * bound;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(effort.seed);
  Budget budget{effort.rho_iterations};
  std::vector<ExactInt> pending{m};
  while (!pending.empty()) {
    ExactInt c = std::move(pending.back());
    pending.pop_back();
    if (c == 1) continue;
    if (c < trial_square) {
      add_prime(found, c, 1);
      continue;
    }
    if (is_square(c)) {
      ExactInt root = isqrt(c);
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    if (is_probable_prime(c, effort.primality_rounds, effort.seed)) {
      add_prime(found, c, 1);
      continue;
    }
    ExactInt d = rho_split(c, rng, budget);
    if (d == 0) {
      ExactInt residual = c;
      for (const auto& rest : pending) residual *= rest;
      out.primes = to_prime_powers(found);
      throw EffortExceeded(std::move(out), std::move(residual));
    }
    pending.push_back(d);
    pending.push_back(c / d);
  }
  out.primes = to_prime_powers(found);
  return out;
}

Factorization multiply(const Factorization& lhs, const Factorization& rhs) {
  std::map<ExactInt, unsigned> merged;
  for (const auto& pp : lhs.primes) add_prime(merged, pp.prime, pp.exponent);
  for (const auto& pp : rhs.primes) add_prime(merged, pp.prime, pp.exponent);
  Factorization out;
  out.value = lhs.value * rhs.value;
  out.sign = lhs.sign * rhs.sign;
  out.primes = to_prime_powers(merged);
  out.certified = lhs.certified && rhs.certified;
  return out;
}

SquarefreeDecomposition squarefree_part(const Factorization& f) {
  SquarefreeDecomposition out{ExactInt(f.sign), ExactInt(1)};
  for (const auto& pp : f.primes) {
    if (pp.exponent % 2) out.core *= pp.prime;
    out.root *= pow(pp.prime, pp.exponent / 2);
  }
  return out;
}

SquarefreeDecomposition squarefree_part(const ExactInt& n,
                                        const FactorEffort& effort) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "squarefree part of 0");
  return squarefree_part(factor(n, effort));
}

FourthPowerFreeDecomposition fourth_power_free_part(const Factorization& f) {
  FourthPowerFreeDecomposition out{ExactInt(f.sign), ExactInt(1)};
  for (const auto& pp : f.primes) {
    out.core *= pow(pp.prime, pp.exponent % 4);
    out.root *= pow(pp.prime, pp.exponent / 4);
  }
  return out;
}

FourthPowerFreeDecomposition fourth_power_free_part(
    const ExactInt& n, const FactorEffort& effort) {
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "fourth-power-free part of 0");
  return fourth_power_free_part(factor(n, effort));
}

}  // namespace arith
}  // namespace bqrank
