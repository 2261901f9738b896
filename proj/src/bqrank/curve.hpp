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

#include <string>
#include <vector>

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"

namespace bqrank::curve {

/// y^2 = x^3 - n x. The same type serves for the 2-isogenous partner
/// y^2 = x^3 + 4n x, which is E_{-4n}.
class CurveEn {
 public:
  explicit CurveEn(ExactInt n);

  const ExactInt& n() const noexcept { return n_; }
  /// Coefficient of x in y^2 = x^3 + a x^2 + b x; a is always 0 here.
  ExactInt b_coeff() const { return -n_; }
  ExactInt discriminant() const { return 64 * n_ * n_ * n_; }
  static constexpr int j_invariant = 1728;

  std::string equation() const;

  bool operator==(const CurveEn&) const = default;

 private:
  ExactInt n_;
};

CurveEn curve_from_n(const ExactInt& n);

class RationalPoint {
 public:
  RationalPoint() = default;  // the point at infinity
  RationalPoint(ExactRat x, ExactRat y);

  static RationalPoint infinity() { return {}; }

  bool is_infinity() const noexcept { return infinity_; }
  const ExactRat& x() const;
  const ExactRat& y() const;

  bool operator==(const RationalPoint& other) const;

  std::string to_string() const;

 private:
  bool infinity_ = true;
  ExactRat x_, y_;
};

bool on_curve(const RationalPoint& P, const CurveEn& E);
void require_on_curve(const RationalPoint& P, const CurveEn& E);

RationalPoint negate(const RationalPoint& P);
RationalPoint add(const RationalPoint& P, const RationalPoint& Q,
                  const CurveEn& E);
RationalPoint subtract(const RationalPoint& P, const RationalPoint& Q,
                       const CurveEn& E);
RationalPoint scalar_mul(long m, const RationalPoint& P, const CurveEn& E);

/// (-p^2, p q^2), (-q^2, q p^2), (-r^2, r s^2), (-s^2, s r^2). Degenerate
/// quadruples contribute only the first pair.
std::vector<RationalPoint> constructed_points(
    const biquadrate::BiquadQuadruple& quad);

/// Image of (u, v) with u^4 + v^4 = n.
RationalPoint quartic_point(const ExactInt& u, const ExactInt& v);

enum class TorsionShape { Z4, Z2xZ2, Z2 };

const char* to_string(TorsionShape shape) noexcept;

/// Torsion of y^2 = x^3 + D x for fourth-power-free D; pass D = -n for E_n.
TorsionShape torsion_shape(const ExactInt& D,
                           const arith::FactorEffort& effort = {});

/// Explicit torsion points of y^2 = x^3 + D x (D fourth-power-free).
std::vector<RationalPoint> torsion_points(const ExactInt& D);

CurveEn dual_curve(const CurveEn& E);

}  // namespace bqrank::curve
