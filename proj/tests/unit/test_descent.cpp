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

#include <bit>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "bqrank/biquadrate.hpp"
#include "bqrank/curve.hpp"
#include "bqrank/descent.hpp"

using namespace bqrank;
using namespace bqrank::descent;
using curve::CurveEn;
using curve::RationalPoint;

namespace {

struct Images {
  DescentImage phi, psi;
};

Images euler_images(long a, long b) {
  auto quad = biquadrate::euler_quadruple({a, b});
  CurveEn E(quad.n);
  auto input = euler_witness_input({a, b});
  return {phi_image(E, quad, &input), psi_image(curve::dual_curve(E), quad)};
}

// Closure and distinctness checked directly with square tests.
void check_group(const DescentImage& image) {
  REQUIRE(std::has_single_bit(image.size()));
  REQUIRE(image.entries[0].cls.is_trivial());
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = 0; j < image.size(); ++j) {
      const ExactInt& x = image.entries[i].cls.representative();
      const ExactInt& y = image.entries[j].cls.representative();
      if (i != j) REQUIRE_FALSE(is_square(ExactInt(x * y)));
      bool found = false;
      for (const auto& e : image.entries)
        found |= is_square(ExactInt(x * y * e.cls.representative()));
      REQUIRE(found);
    }
}

}  // namespace

TEST_CASE("square classes") {
  CHECK(SquareClass::of(ExactInt(12)).representative() == 3);
  CHECK(SquareClass::of(ExactInt(-50)).representative() == -2);
  CHECK(SquareClass::of(ExactRat(parse_rat("3/8"))).representative() == 6);
  CHECK((SquareClass::of(ExactInt(6)) * SquareClass::of(ExactInt(10))).representative() == 15);
  CHECK(SquareClass::of(ExactInt(49)).is_trivial());
  CHECK(SquareClass::of(ExactInt(18)) == SquareClass::of(ExactInt(2)));
  CHECK_THROWS_AS(SquareClass::of(ExactInt(0)), Error);
}

TEST_CASE("descent images for Euler quadruples, 1 <= a,b <= 20") {
  for (long a = 1; a <= 20; ++a)
    for (long b = 1; b <= 20; ++b) {
      if (a == b || std::gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      auto images = euler_images(a, b);
      REQUIRE(images.phi.size() >= 8);
      REQUIRE(images.psi.size() >= 4);
      REQUIRE(rank_lower_bound(images.phi, images.psi) >= 3);
      verify_image(images.phi);
      verify_image(images.psi);
      check_group(images.phi);
      check_group(images.psi);
    }
}

TEST_CASE("the four phi generators are independent mod squares") {
  auto quad = biquadrate::euler_quadruple({2, 1});
  auto abcd = biquadrate::abcd_quantities({2, 1});
  ExactInt n = quad.n;
  CHECK(independence_mod_squares({ExactInt(-1), n, abcd.b1}));
  CHECK_FALSE(independence_mod_squares({ExactInt(-1), ExactInt(-4), n}));
}

TEST_CASE("image of 635318657") {
  auto images = euler_images(2, 1);
  CHECK(images.phi.size() == 8);
  CHECK(images.psi.size() == 4);
  CHECK(rank_lower_bound(images.phi, images.psi) == 3);
  CHECK(images.phi.contains(SquareClass::of(ExactInt(-1))));
  CHECK(images.phi.contains(SquareClass::of(ExactInt(-635318657))));
  CHECK(images.psi.contains(SquareClass::of(ExactInt(2))));
}

TEST_CASE("without Euler parameters only the generic classes appear") {
  auto quad = biquadrate::validate_double_representation(7, 239, 157, 227);
  CurveEn E(quad.n);
  auto phi = phi_image(E, quad);
  auto psi = psi_image(curve::dual_curve(E), quad);
  CHECK(phi.size() == 4);
  CHECK(psi.size() == 4);
  CHECK(rank_lower_bound(phi, psi) == 2);
  CHECK_THROWS_AS(psi_image(E, quad), Error);
}

TEST_CASE("tampered witnesses are rejected") {
  auto images = euler_images(2, 1);
  auto broken = images.phi;
  auto& w = broken.entries.back().witness;
  w.point = curve::negate(w.point);
  w.point = RationalPoint(w.point.x() + 1, w.point.y());
  CHECK_THROWS_AS(verify_image(broken), Error);

  auto wrong_class = images.phi;
  wrong_class.entries[2].cls = SquareClass::of(ExactInt(5));
  CHECK_THROWS_AS(verify_image(wrong_class), Error);

  auto missing = images.phi;
  missing.entries.pop_back();
  CHECK_THROWS_AS(verify_image(missing), Error);

  for (auto& entry : images.phi.entries) {
    if (entry.witness.kind != Witness::Kind::HomogeneousSpace) continue;
    auto bad = entry.witness;
    bad.N += 1;
    CHECK_THROWS_AS(verify_witness(bad, entry.cls, CurveEn(635318657)), Error);
  }
}

TEST_CASE("rank bound arithmetic") {
  CHECK(rank_lower_bound(8, 4) == 3);
  CHECK(rank_lower_bound(4, 4) == 2);
  CHECK(rank_lower_bound(2, 2) == 0);
  CHECK(rank_lower_bound(1, 2) == 0);
}

TEST_CASE("heuristic upper bound") {
  ExactInt n = 635318657;
  auto two_n = arith::factor(ExactInt(2 * n));
  CHECK(yoshida_upper_bound(n, two_n) == 9);
  CHECK(yoshida_upper_bound(ExactInt(17), arith::factor(ExactInt(34))) == 3);
  CHECK_THROWS_AS(yoshida_upper_bound(n, arith::factor(ExactInt(34))), Error);
}
