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

#include "bqrank/biquadrate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace bqrank::biquadrate {

namespace {

ExactInt fourth(const ExactInt& v) { return pow(v, 4); }

bool same_unordered_abs(const ExactInt& p, const ExactInt& q,
                        const ExactInt& r, const ExactInt& s) {
  ExactInt ap = abs(p), aq = abs(q), ar = abs(r), as = abs(s);
  return (ap == ar && aq == as) || (ap == as && aq == ar);
}

void check_params(const EulerParams& params) {
  if (params.a == 0 || params.b == 0)
    throw Error(ErrorCode::InvalidArgument,
                "Euler parameters need a*b != 0");
}

BiquadQuadruple make_quadruple(ExactInt p, ExactInt q, ExactInt r,
                               ExactInt s) {
  BiquadQuadruple out;
  out.n = fourth(p) + fourth(q);
  const ExactInt parts[] = {p, q, r, s};
  out.primitive = arith::gcd_many(parts) == 1;
  out.degenerate = same_unordered_abs(p, q, r, s);
  out.p = std::move(p);
  out.q = std::move(q);
  out.r = std::move(r);
  out.s = std::move(s);
  return out;
}

}  // namespace

std::vector<ExactInt> euler_components(const EulerParams& params) {
  check_params(params);
  const ExactInt& a = params.a;
  const ExactInt& b = params.b;
  ExactInt a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a, a6 = a5 * a,
           a7 = a6 * a;
  ExactInt b2 = b * b, b3 = b2 * b, b4 = b3 * b, b5 = b4 * b, b6 = b5 * b,
           b7 = b6 * b;
  return {
      ExactInt(a7 + a5 * b2 - 2 * a3 * b4 + 3 * a2 * b5 + a * b6),
      ExactInt(a6 * b - 3 * a5 * b2 - 2 * a4 * b3 + a2 * b5 + b7),
      ExactInt(a7 + a5 * b2 - 2 * a3 * b4 - 3 * a2 * b5 + a * b6),
      ExactInt(a6 * b + 3 * a5 * b2 - 2 * a4 * b3 + a2 * b5 + b7),
  };
}

BiquadQuadruple euler_quadruple(const EulerParams& params) {
  auto raw = euler_components(params);
  ExactInt g = arith::gcd_many(raw);
  if (g == 0)
    throw Error(ErrorCode::PropertyViolation,
                "Euler quadruple vanished identically");
  auto out = make_quadruple(raw[0] / g, raw[1] / g, raw[2] / g, raw[3] / g);
  out.scale = g;
  if (fourth(out.r) + fourth(out.s) != out.n)
    throw Error(ErrorCode::PropertyViolation,
                "Euler identity failed for a=" + to_decimal(params.a) +
                    ", b=" + to_decimal(params.b));
  return out;
}

BiquadQuadruple validate_double_representation(const ExactInt& p,
                                               const ExactInt& q,
                                               const ExactInt& r,
                                               const ExactInt& s) {
  ExactInt left = fourth(p) + fourth(q);
  ExactInt right = fourth(r) + fourth(s);
  if (left != right)
    throw Error(ErrorCode::NotEqual,
                "p^4+q^4 = " + to_decimal(left) + " but r^4+s^4 = " +
                    to_decimal(right));
  return make_quadruple(p, q, r, s);
}

AbcdQuantities abcd_quantities(const EulerParams& params) {
  check_params(params);
  const ExactInt& a = params.a;
  const ExactInt& b = params.b;
  ExactInt a2 = a * a, a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
  ExactInt b2 = b * b, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4;

  AbcdQuantities out;
  out.A = b4 + 6 * b2 * a2 + a4;
  out.B = b8 + 2 * b6 * a2 + 11 * b4 * a4 + 2 * b2 * a6 + a8;
  out.C = b8 - 4 * b6 * a2 + 8 * b4 * a4 - 4 * b2 * a6 + a8;
  out.D = b8 - b4 * a4 + a8;
  out.b1 = out.B * out.D;
  out.b2 = -out.A * out.C;

  auto violation = [&](const std::string& what) {
    return Error(ErrorCode::PropertyViolation,
                 what + " at a=" + to_decimal(a) + ", b=" + to_decimal(b));
  };
  auto raw = euler_components(params);
  if (out.A * out.B * out.C * out.D != fourth(raw[0]) + fourth(raw[1]))
    throw violation("A*B*C*D differs from n(a,b)");
  if (out.A <= 0 || out.B <= 0 || out.C <= 0 || out.D <= 0)
    throw violation("A, B, C, D not all positive");

  if (abs(a) != abs(b)) {
    if (out.B == out.D) throw violation("B == D");
    if (is_square(out.D)) throw violation("D is a square");
    if (out.A == out.C) throw violation("A == C");
    if (is_square(out.A)) throw violation("A is a square");
    out.properties_checked = true;
  }
  return out;
}

ExactInt printed_K_formula(const EulerParams& params) {
  const ExactInt& a = params.a;
  const ExactInt& b = params.b;
  ExactInt inner = pow(a, 6) + b * b * pow(a, 4) + 4 * pow(b, 4) * pow(a, 3) -
                   5 * pow(b, 6);
  return pow(a, 4) * inner * inner;
}

DescentWitnessK descent_witness_K(const EulerParams& params) {
  auto abcd = abcd_quantities(params);
  const ExactInt& a = params.a;
  const ExactInt& b = params.b;
  DescentWitnessK out;
  out.K = abcd.B * abcd.D - pow(b, 4) * abcd.A * abcd.C;
  if (out.K < 0 || !is_square(out.K))
    throw Error(ErrorCode::NotASquare,
                "K = " + to_decimal(out.K) + " is not a perfect square");
  out.N = isqrt(out.K);
  out.inner = pow(a, 6) + pow(a, 4) * b * b + 4 * a * a * pow(b, 4) -
              5 * pow(b, 6);
  if (out.N != abs(a * a * out.inner))
    throw Error(ErrorCode::PropertyViolation,
                "sqrt(K) != a^2 * (a^6 + a^4 b^2 + 4 a^2 b^4 - 5 b^6)");
  return out;
}

BiquadQuadruple SearchHit::quadruple() const {
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [p, q] = pairs[i];
      auto [r, s] = pairs[j];
      if (std::gcd(std::gcd(p, q), std::gcd(r, s)) == 1)
        return validate_double_representation(ExactInt(p), ExactInt(q),
                                               ExactInt(r), ExactInt(s));
    }
  if (pairs.size() < 2)
    throw Error(ErrorCode::InvariantViolation,
                "search hit " + to_decimal(n) + " has a single pair");
  return validate_double_representation(
      ExactInt(pairs[0].first), ExactInt(pairs[0].second),
      ExactInt(pairs[1].first), ExactInt(pairs[1].second));
}

namespace {

using u128 = unsigned __int128;

ExactInt from_u128(u128 v) {
  ExactInt hi(static_cast<unsigned long>(v >> 64));
  ExactInt lo(static_cast<unsigned long>(v));
  return (hi << 64) + lo;
}

template <class Key>
struct Entry {
  Key key;
  std::uint32_t p, q;
};

template <class Key>
std::vector<SearchHit> shard_impl(std::uint64_t max_base, unsigned shards,
                                  unsigned shard) {
  std::vector<Key> fourth_pow(max_base + 1);
  for (std::uint64_t i = 0; i <= max_base; ++i) {
    Key v = static_cast<Key>(i);
    fourth_pow[i] = v * v * v * v;
  }
  std::vector<Entry<Key>> entries;
  for (std::uint64_t p = 1; p <= max_base; ++p)
    for (std::uint64_t q = p; q <= max_base; ++q) {
      Key key = fourth_pow[p] + fourth_pow[q];
      if (shards > 1 && key % shards != shard) continue;
      entries.push_back({key, static_cast<std::uint32_t>(p),
                         static_cast<std::uint32_t>(q)});
    }
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    if (l.key != r.key) return l.key < r.key;
    return std::tie(l.p, l.q) < std::tie(r.p, r.q);
  });

  std::vector<SearchHit> hits;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    if (j - i >= 2) {
      SearchHit hit;
      if constexpr (sizeof(Key) > 8)
        hit.n = from_u128(entries[i].key);
      else
        hit.n = ExactInt(static_cast<unsigned long>(entries[i].key));
      for (std::size_t k = i; k < j; ++k)
        hit.pairs.emplace_back(entries[k].p, entries[k].q);
      bool primitive = false;
      for (std::size_t x = 0; x < hit.pairs.size() && !primitive; ++x)
        for (std::size_t y = x + 1; y < hit.pairs.size(); ++y) {
          auto [p, q] = hit.pairs[x];
          auto [r, s] = hit.pairs[y];
          if (std::gcd(std::gcd(p, q), std::gcd(r, s)) == 1) {
            primitive = true;
            break;
          }
        }
      if (primitive) hits.push_back(std::move(hit));
    }
    i = j;
  }
  return hits;
}

}  // namespace

std::vector<SearchHit> search_shard(std::uint64_t max_base, unsigned shards,
                                    unsigned shard) {
  require(max_base >= 2, "max_base must be at least 2");
  require(max_base <= 0xffffffffULL, "max_base must fit in 32 bits");
  require(shards >= 1 && shard < shards, "shard index out of range");
  // 2 * 55000^4 < 2^64.
  if (max_base <= 55000) return shard_impl<std::uint64_t>(max_base, shards, shard);
  return shard_impl<u128>(max_base, shards, shard);
}

std::vector<SearchHit> merge_shards(std::vector<std::vector<SearchHit>> parts) {
  std::vector<SearchHit> out;
  for (auto& part : parts)
    for (auto& hit : part) out.push_back(std::move(hit));
  std::sort(out.begin(), out.end(), [](const SearchHit& l, const SearchHit& r) {
    if (l.n != r.n) return l.n < r.n;
    return l.pairs < r.pairs;
  });
  return out;
}

std::vector<SearchHit> search_double_representations(
    const SearchOptions& options) {
  require(options.max_base >= 2, "max_base must be at least 2");
  const unsigned shards = std::max(1u, options.shards);
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, shards);

  std::vector<std::vector<SearchHit>> parts(shards);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (unsigned s = next++; s < shards; s = next++)
      parts[s] = search_shard(options.max_base, shards, s);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return merge_shards(std::move(parts));
}

std::optional<std::vector<std::pair<ExactInt, ExactInt>>> representations_of(
    const ExactInt& n, std::uint64_t max_steps) {
  std::vector<std::pair<ExactInt, ExactInt>> out;
  if (n <= 1) return out;
  ExactInt s = iroot4(n);
  if (s > ExactInt(static_cast<unsigned long>(max_steps))) return std::nullopt;
  ExactInt r = 1;
  ExactInt r4 = 1, s4 = fourth(s);
  // Two pointers: r climbs, s falls.
  while (r <= s) {
    ExactInt sum = r4 + s4;
    if (sum == n) {
      out.emplace_back(r, s);
      ++r;
      r4 = fourth(r);
    } else if (sum < n) {
      ++r;
      r4 = fourth(r);
    } else {
      --s;
      s4 = fourth(s);
    }
  }
  return out;
}

std::optional<EulerParams> find_euler_params(const BiquadQuadruple& quad,
                                             std::uint64_t bound) {
  const auto ib = static_cast<long>(bound);
  for (long b = 1; b <= ib; ++b)
    for (long sign : {1L, -1L})
      for (long a_abs = 1; a_abs <= ib; ++a_abs) {
        if (std::gcd(a_abs, b) != 1) continue;
        EulerParams params{ExactInt(sign * a_abs), ExactInt(b)};
        auto raw = euler_components(params);
        ExactInt g = arith::gcd_many(raw);
        if (g == 0) continue;
        ExactInt n = (fourth(raw[0]) + fourth(raw[1])) / fourth(g);
        if (n != quad.n) continue;
        auto candidate = euler_quadruple(params);
        bool first = same_unordered_abs(candidate.p, candidate.q, quad.p,
                                        quad.q) &&
                     same_unordered_abs(candidate.r, candidate.s, quad.r,
                                        quad.s);
        bool swapped = same_unordered_abs(candidate.p, candidate.q, quad.r,
                                          quad.s) &&
                       same_unordered_abs(candidate.r, candidate.s, quad.p,
                                          quad.q);
        if (first || swapped) return params;
      }
  return std::nullopt;
}

}  // namespace bqrank::biquadrate
