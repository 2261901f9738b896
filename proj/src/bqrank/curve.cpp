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

#include "bqrank/curve.hpp"

namespace bqrank::curve {

CurveEn::CurveEn(ExactInt n) : n_(std::move(n)) {
  if (n_ == 0)
    throw Error(ErrorCode::InvalidArgument,
                "n = 0 gives a singular curve (discriminant 0)");
}

std::string CurveEn::equation() const {
  ExactInt b = b_coeff();
  return "y^2 = x^3 " + std::string(b < 0 ? "- " : "+ ") +
         to_decimal(abs(b)) + "x";
}

CurveEn curve_from_n(const ExactInt& n) { return CurveEn(n); }

RationalPoint::RationalPoint(ExactRat x, ExactRat y)
    : infinity_(false), x_(std::move(x)), y_(std::move(y)) {
  x_.canonicalize();
  y_.canonicalize();
}

const ExactRat& RationalPoint::x() const {
  if (infinity_)
    throw Error(ErrorCode::InvalidArgument, "point at infinity has no x");
  return x_;
}

const ExactRat& RationalPoint::y() const {
  if (infinity_)
    throw Error(ErrorCode::InvalidArgument, "point at infinity has no y");
  return y_;
}

bool RationalPoint::operator==(const RationalPoint& other) const {
  if (infinity_ || other.infinity_) return infinity_ == other.infinity_;
  return x_ == other.x_ && y_ == other.y_;
}

std::string RationalPoint::to_string() const {
  if (infinity_) return "O";
  return "(" + to_decimal(x_) + ", " + to_decimal(y_) + ")";
}

bool on_curve(const RationalPoint& P, const CurveEn& E) {
  if (P.is_infinity()) return true;
  const ExactRat& x = P.x();
  return P.y() * P.y() == x * x * x - E.n() * x;
}

void require_on_curve(const RationalPoint& P, const CurveEn& E) {
  if (!on_curve(P, E))
    throw Error(ErrorCode::OffCurve,
                P.to_string() + " is not on " + E.equation());
}

RationalPoint negate(const RationalPoint& P) {
  if (P.is_infinity()) return P;
  return {P.x(), -P.y()};
}

RationalPoint add(const RationalPoint& P, const RationalPoint& Q,
                  const CurveEn& E) {
  require_on_curve(P, E);
  require_on_curve(Q, E);
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  ExactRat slope;
  if (P.x() == Q.x()) {
    if (P.y() + Q.y() == 0) return RationalPoint::infinity();
    slope = (3 * P.x() * P.x() - E.n()) / (2 * P.y());
  } else {
    slope = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  ExactRat x3 = slope * slope - P.x() - Q.x();
  ExactRat y3 = slope * (P.x() - x3) - P.y();
  return {std::move(x3), std::move(y3)};
}

RationalPoint subtract(const RationalPoint& P, const RationalPoint& Q,
                       const CurveEn& E) {
  return add(P, negate(Q), E);
}

RationalPoint scalar_mul(long m, const RationalPoint& P, const CurveEn& E) {
  require_on_curve(P, E);
  RationalPoint base = m < 0 ? negate(P) : P;
  unsigned long k = m < 0 ? 0UL - static_cast<unsigned long>(m)
                          : static_cast<unsigned long>(m);
  RationalPoint acc;
  while (k != 0) {
    if (k & 1) acc = add(acc, base, E);
    k >>= 1;
    if (k != 0) base = add(base, base, E);
  }
  return acc;
}

RationalPoint quartic_point(const ExactInt& u, const ExactInt& v) {
  return {ExactRat(-u * u), ExactRat(u * v * v)};
}

std::vector<RationalPoint> constructed_points(
    const biquadrate::BiquadQuadruple& quad) {
  CurveEn E(quad.n);
  std::vector<RationalPoint> out{quartic_point(quad.p, quad.q),
                                 quartic_point(quad.q, quad.p)};
  if (!quad.degenerate) {
    out.push_back(quartic_point(quad.r, quad.s));
    out.push_back(quartic_point(quad.s, quad.r));
  }
  for (const auto& P : out) require_on_curve(P, E);
  return out;
}

const char* to_string(TorsionShape shape) noexcept {
  switch (shape) {
    case TorsionShape::Z4: return "Z/4Z";
    case TorsionShape::Z2xZ2: return "Z/2Z x Z/2Z";
    case TorsionShape::Z2: return "Z/2Z";
  }
  return "?";
}

TorsionShape torsion_shape(const ExactInt& D,
                           const arith::FactorEffort& effort) {
  if (D == 0) throw Error(ErrorCode::InvalidArgument, "D must be nonzero");
  if (arith::fourth_power_free_part(D, effort).root != 1)
    throw Error(ErrorCode::InvalidArgument,
                to_decimal(D) + " is not fourth-power-free; normalize first");
  if (D == 4) return TorsionShape::Z4;
  if (D < 0 && is_square(ExactInt(-D))) return TorsionShape::Z2xZ2;
  return TorsionShape::Z2;
}

std::vector<RationalPoint> torsion_points(const ExactInt& D) {
  std::vector<RationalPoint> out{RationalPoint::infinity(),
                                 RationalPoint(0, 0)};
  if (D == 4) {
    out.emplace_back(2, 4);
    out.emplace_back(2, -4);
  } else if (D < 0 && is_square(ExactInt(-D))) {
    ExactInt root = isqrt(ExactInt(-D));
    out.emplace_back(ExactRat(root), 0);
    out.emplace_back(ExactRat(-root), 0);
  }
  return out;
}

CurveEn dual_curve(const CurveEn& E) { return CurveEn(-4 * E.n()); }

}  // namespace bqrank::curve
