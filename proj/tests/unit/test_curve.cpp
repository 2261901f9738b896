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

#include <vector>

#include "doctest.h"

#include "bqrank/biquadrate.hpp"
#include "bqrank/curve.hpp"

using namespace bqrank;
using namespace bqrank::curve;

namespace {

RationalPoint pt(long x, long y) { return RationalPoint(ExactRat(x), ExactRat(y)); }

// Chord-tangent by the textbook formulas, independent of the library.
RationalPoint oracle_add(const RationalPoint& P, const RationalPoint& Q, const ExactInt& n) {
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  ExactRat lambda;
  if (P.x() == Q.x()) {
    if (P.y() + Q.y() == 0) return {};
    lambda = (3 * P.x() * P.x() - ExactRat(n)) / (2 * P.y());
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  ExactRat x = lambda * lambda - P.x() - Q.x();
  ExactRat y = lambda * (P.x() - x) - P.y();
  return RationalPoint(x, y);
}

struct Sample {
  CurveEn E;
  std::vector<RationalPoint> points;
};

std::vector<Sample> samples() {
  auto quad = biquadrate::euler_quadruple({2, 1});
  CurveEn big(quad.n);
  CurveEn small(17);
  std::vector<RationalPoint> a{pt(-4, 2), pt(-1, 4), pt(0, 0)};
  std::vector<RationalPoint> b = constructed_points(quad);
  b.push_back(pt(0, 0));
  for (std::size_t i = 0, size = a.size(); i < size; ++i)
    a.push_back(scalar_mul(static_cast<long>(i) + 2, a[i], small));
  return {{small, a}, {big, b}};
}

}  // namespace

TEST_CASE("curve basics") {
  CurveEn E(17);
  CHECK(E.b_coeff() == -17);
  CHECK(E.discriminant() == 64 * 17 * 17 * 17);
  CHECK(E.equation() == "y^2 = x^3 - 17x");
  CHECK_THROWS_AS(CurveEn(0), Error);
  CHECK(dual_curve(E).n() == -68);
}

TEST_CASE("addition matches the textbook formulas and stays on the curve") {
  for (const auto& s : samples())
    for (const auto& P : s.points)
      for (const auto& Q : s.points) {
        auto R = add(P, Q, s.E);
        REQUIRE(on_curve(R, s.E));
        REQUIRE(R == oracle_add(P, Q, s.E.n()));
        REQUIRE(R == add(Q, P, s.E));
      }
}

TEST_CASE("associativity on scalar multiples") {
  for (const auto& s : samples()) {
    std::vector<RationalPoint> pool;
    for (const auto& P : s.points)
      for (long m : {-2L, 1L, 3L}) pool.push_back(scalar_mul(m, P, s.E));
    for (std::size_t i = 0; i < pool.size(); i += 2)
      for (std::size_t j = 1; j < pool.size(); j += 3)
        for (std::size_t k = 0; k < pool.size(); k += 4) {
          auto lhs = add(add(pool[i], pool[j], s.E), pool[k], s.E);
          auto rhs = add(pool[i], add(pool[j], pool[k], s.E), s.E);
          REQUIRE(lhs == rhs);
          REQUIRE(on_curve(lhs, s.E));
        }
  }
}

TEST_CASE("identity, inverse and scalar multiplication") {
  CurveEn E(17);
  auto P = pt(-4, 2);
  CHECK(add(P, RationalPoint(), E) == P);
  CHECK(add(P, negate(P), E).is_infinity());
  CHECK(subtract(P, P, E).is_infinity());
  CHECK(scalar_mul(0, P, E).is_infinity());
  CHECK(scalar_mul(-1, P, E) == negate(P));
  RationalPoint acc;
  for (long m = 1; m <= 9; ++m) {
    acc = add(acc, P, E);
    REQUIRE(scalar_mul(m, P, E) == acc);
  }
  CHECK(scalar_mul(2, pt(0, 0), E).is_infinity());
}

TEST_CASE("points off the curve are rejected") {
  CurveEn E(17);
  CHECK_FALSE(on_curve(pt(1, 1), E));
  CHECK_THROWS_AS(require_on_curve(pt(1, 1), E), Error);
  try {
    require_on_curve(pt(2, 3), E);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OffCurve);
  }
}

TEST_CASE("x(x^2 - n) is a square at x = -p^2 when n = p^4 + q^4") {
  for (long p = -30; p <= 30; ++p)
    for (long q = -30; q <= 30; ++q) {
      if (p == 0 && q == 0) continue;
      ExactInt P(p), Q(q);
      ExactInt n = pow(P, 4) + pow(Q, 4);
      ExactInt x = -P * P;
      REQUIRE(is_square(x * (x * x - n)));
      REQUIRE(on_curve(quartic_point(P, Q), CurveEn(n)));
    }
}

TEST_CASE("constructed points for the Euler (2,1) quadruple") {
  auto quad = biquadrate::validate_double_representation(158, -59, 133, 134);
  auto pts = constructed_points(quad);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == pt(-24964, 549998));
  CHECK(pts[1] == pt(-3481, -1472876));
  CHECK(pts[2] == pt(-17689, 2388148));
  CHECK(pts[3] == pt(-17956, 2370326));
  auto single = biquadrate::validate_double_representation(1, 2, 1, 2);
  CHECK(constructed_points(single).size() == 2);
}

TEST_CASE("large generator for y^2 = x^3 + 877x") {
  ExactInt num = parse_int("612776083187947368101");
  ExactRat printed(ExactRat(num, parse_int("7884153586063900210")));
  ExactRat corrected(ExactRat(num, parse_int("78841535860683900210")));
  printed.canonicalize();
  corrected.canonicalize();
  auto rhs = [](const ExactRat& t) {
    ExactRat x = t * t;
    return ExactRat(x * x * x + 877 * x);
  };
  CHECK_FALSE(is_square(rhs(printed)));
  REQUIRE(is_square(rhs(corrected)));
  ExactRat r = rhs(corrected);
  ExactRat y(isqrt(r.get_num()), isqrt(r.get_den()));
  CHECK(on_curve(RationalPoint(corrected * corrected, y), CurveEn(-877)));
}

TEST_CASE("torsion shapes") {
  CHECK(torsion_shape(4) == TorsionShape::Z4);
  CHECK(torsion_shape(-4) == TorsionShape::Z2xZ2);
  CHECK(torsion_shape(-9) == TorsionShape::Z2xZ2);
  CHECK(torsion_shape(-17) == TorsionShape::Z2);
  CHECK(torsion_shape(-635318657) == TorsionShape::Z2);
  CHECK(torsion_points(-4).size() == 4);
  CHECK(torsion_points(4).size() == 4);
  CHECK(torsion_points(-17).size() == 2);
  CHECK_THROWS_AS(torsion_shape(16 * 3), Error);
  for (long D : {4L, -4L, -9L, -17L})
    for (const auto& T : torsion_points(D)) {
      CurveEn E(-D);
      CHECK(on_curve(T, E));
      CHECK(scalar_mul(4, T, E).is_infinity());
    }
}
