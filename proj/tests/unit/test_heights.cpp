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

#include <cmath>
#include <vector>

#include "doctest.h"

#include "bqrank/biquadrate.hpp"
#include "bqrank/curve.hpp"
#include "bqrank/heights.hpp"

using namespace bqrank;
using namespace bqrank::curve;
using namespace bqrank::heights;

namespace {

RationalPoint pt(long x, long y) { return RationalPoint(ExactRat(x), ExactRat(y)); }

double naive(const RationalPoint& P) {
  ExactInt a = abs(P.x().get_num());
  const ExactInt& d = P.x().get_den();
  const ExactInt& m = a > d ? a : d;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, m.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double h(const RationalPoint& P, const CurveEn& E) {
  return canonical_height(P, E).value;
}

}  // namespace

TEST_CASE("height vanishes on torsion") {
  CurveEn E(17);
  CHECK(h(RationalPoint(), E) == 0.0);
  CHECK(h(pt(0, 0), E) == 0.0);
  CurveEn F(4);  // x^3 - 4x has full 2-torsion
  CHECK(h(pt(2, 0), F) == 0.0);
  CHECK(h(pt(-2, 0), F) == 0.0);
}

TEST_CASE("height agrees with the limit of naive heights") {
  // h(2^k P) / 4^k converges with error O(4^-k); k = 7 is well inside 1e-3.
  CurveEn E(17);
  for (const auto& P : {pt(-4, 2), pt(-1, 4)}) {
    RationalPoint Q = P;
    for (int k = 0; k < 7; ++k) Q = add(Q, Q, E);
    CHECK(std::fabs(naive(Q) / std::pow(4.0, 7) - h(P, E)) < 1e-3);
  }
}

TEST_CASE("quadraticity for small multiples") {
  auto quad = biquadrate::euler_quadruple({2, 1});
  CurveEn big(quad.n);
  CurveEn small(17);
  std::vector<std::pair<CurveEn, RationalPoint>> samples{
      {small, pt(-4, 2)}, {small, pt(-1, 4)}};
  for (const auto& P : constructed_points(quad)) samples.emplace_back(big, P);
  for (const auto& [E, P] : samples) {
    double base = h(P, E);
    REQUIRE(base > 0.1);
    for (long m = 2; m <= 4; ++m)
      REQUIRE(std::fabs(h(scalar_mul(m, P, E), E) - m * m * base) < 1e-5 * m * m);
    REQUIRE(std::fabs(h(negate(P), E) - base) < 1e-9);
  }
}

TEST_CASE("parallelogram law") {
  auto quad = biquadrate::euler_quadruple({3, 2});
  CurveEn E(quad.n);
  auto pts = constructed_points(quad);
  pts.push_back(add(pts[0], pt(0, 0), E));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& P = pts[i];
      const auto& Q = pts[j];
      double lhs = h(add(P, Q, E), E) + h(subtract(P, Q, E), E);
      double rhs = 2 * h(P, E) + 2 * h(Q, E);
      REQUIRE(std::fabs(lhs - rhs) < 6 * kDefaultPrecision);
    }
}

TEST_CASE("pairing is symmetric, bilinear and kills torsion") {
  CurveEn E(17);
  auto P = pt(-4, 2), Q = pt(-1, 4), T = pt(0, 0);
  double pq = pairing(P, Q, E).value;
  CHECK(std::fabs(pq - pairing(Q, P, E).value) < 1e-10);
  CHECK(std::fabs(pairing(add(P, P, E), Q, E).value - 2 * pq) < 1e-6);
  CHECK(std::fabs(pairing(add(P, T, E), Q, E).value - pq) < 1e-6);
  CHECK(std::fabs(pairing(P, P, E).value - h(P, E)) < 1e-10);
}

TEST_CASE("regulator for n = 17") {
  auto gram = gram_determinant({pt(-4, 2), pt(-1, 4)}, CurveEn(17));
  CHECK(std::fabs(gram.determinant - 1.8567) / 1.8567 < 5e-4);
  CHECK(gram.determinant_error < 1e-6);
}

TEST_CASE("regulator for the four points of 635318657") {
  std::vector<RationalPoint> pts{pt(-24964, 549998), pt(-3481, -1472876),
                                 pt(-17956, 2370326), pt(-17689, 2388148)};
  CurveEn E(635318657);
  auto gram = gram_determinant(pts, E);
  CHECK(std::fabs(gram.determinant - 5635.73654) / 5635.73654 < 1e-4);
  CHECK(independence_rank(gram, 1e-3) == 4);

  // Replacing P1 by P1 + P2 is a unimodular change of basis.
  auto moved = pts;
  moved[0] = add(pts[0], pts[1], E);
  auto gram2 = gram_determinant(moved, E);
  CHECK(std::fabs(gram2.determinant - gram.determinant) < 1e-4);
}

TEST_CASE("dependent points are detected") {
  CurveEn E(17);
  auto P = pt(-4, 2), Q = pt(-1, 4);
  std::vector<RationalPoint> pts{P, Q, add(P, Q, E)};
  auto gram = gram_determinant(pts, E);
  CHECK(std::fabs(gram.determinant) < 1e-6);
  CHECK(independence_rank(pts, E, 1e-3) == 2);
  CHECK(independence_rank({pt(0, 0)}, E, 1e-3) == 0);
}

TEST_CASE("determinant helper") {
  CHECK(determinant({{2, 0}, {0, 3}}) == doctest::Approx(6));
  CHECK(determinant({{0, 1}, {1, 0}}) == doctest::Approx(-1));
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == doctest::Approx(-3));
  CHECK(determinant({}) == doctest::Approx(1));
}

TEST_CASE("trace records the multiplier") {
  CurveEn E(17);
  HeightTrace trace;
  canonical_height(pt(-4, 2), E, kDefaultPrecision, &trace);
  CHECK(trace.multiplier >= 1);
  CHECK(trace.series_terms >= 16);
  CHECK_FALSE(trace.torsion);
  CHECK_THROWS_AS(canonical_height(pt(1, 1), E), Error);
}
