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

#include "bqrank/descent.hpp"

#include <bit>

namespace bqrank::descent {

using curve::CurveEn;
using curve::RationalPoint;

arith::FactorEffort SquareClass::class_effort() {
  arith::FactorEffort effort;
  effort.rho_iterations = 2'000'000;
  return effort;
}

SquareClass SquareClass::of(const ExactInt& value,
                            const arith::FactorEffort& effort) {
  if (value == 0)
    throw Error(ErrorCode::InvalidArgument, "zero has no square class");
  try {
    return {arith::squarefree_part(arith::factor(value, effort)).core, true};
  } catch (const arith::EffortExceeded& partial) {
    ExactInt rep = arith::squarefree_part(partial.partial()).core *
                   partial.residual();
    return {rep, false};
  }
}

SquareClass SquareClass::of(const ExactRat& value,
                            const arith::FactorEffort& effort) {
  return of(ExactInt(value.get_num() * value.get_den()), effort);
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  ExactInt g = gcd(rep_, other.rep_);
  return {rep_ * other.rep_ / (g * g), canonical_ && other.canonical_};
}

bool SquareClass::operator==(const SquareClass& other) const {
  if (canonical_ && other.canonical_) return rep_ == other.rep_;
  return is_square(ExactInt(rep_ * other.rep_));
}

bool SquareClass::is_trivial() const { return is_square(rep_); }

const char* to_string(Side side) noexcept {
  return side == Side::Phi ? "phi" : "psi";
}

const char* to_string(Witness::Kind kind) noexcept {
  switch (kind) {
    case Witness::Kind::Identity: return "identity";
    case Witness::Kind::TwoTorsion: return "two_torsion";
    case Witness::Kind::HomogeneousSpace: return "homogeneous_space";
    case Witness::Kind::Product: return "product";
  }
  return "?";
}

bool DescentImage::contains(const SquareClass& cls) const {
  for (const auto& entry : entries)
    if (entry.cls == cls) return true;
  return false;
}

SquareClass point_class(const RationalPoint& P, const CurveEn& E) {
  if (P.is_infinity()) return SquareClass::of(ExactInt(1));
  if (P.x() == 0) return SquareClass::of(E.b_coeff());
  return SquareClass::of(P.x());
}

namespace {

Witness identity_witness() {
  return {Witness::Kind::Identity, RationalPoint::infinity(), 0, 0, 0, 0, "O"};
}

Witness torsion_witness() {
  return {Witness::Kind::TwoTorsion, RationalPoint(0, 0), 0, 0, 0, 0, "(0,0)"};
}

// Point (d M^2 / e^2, d M N / e^3) on y^2 = x^3 + b x for a solution of
// N^2 = d M^4 + (b/d) e^4.
Witness homogeneous_witness(const ExactInt& d, const ExactInt& M,
                            const ExactInt& e, const ExactInt& N,
                            std::string origin) {
  if (e == 0)
    throw Error(ErrorCode::WitnessInvalid, "homogeneous witness with e = 0");
  ExactRat e_rat(e);
  RationalPoint point(ExactRat(d * M * M) / (e_rat * e_rat),
                      ExactRat(d * M * N) / (e_rat * e_rat * e_rat));
  return {Witness::Kind::HomogeneousSpace, point, d, M, e, N,
          std::move(origin)};
}

ImageEntry entry_for(Witness w, const CurveEn& E) {
  SquareClass cls = w.kind == Witness::Kind::HomogeneousSpace
                        ? SquareClass::of(w.d)
                        : point_class(w.point, E);
  verify_witness(w, cls, E);
  return {cls, std::move(w)};
}

// Prefer a nonzero leading component so the witnesses stay non-degenerate.
std::pair<ExactInt, ExactInt> nonzero_first(const ExactInt& p,
                                            const ExactInt& q) {
  if (p != 0) return {p, q};
  return {q, p};
}

}  // namespace

void verify_witness(const Witness& w, const SquareClass& cls,
                    const CurveEn& E) {
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::WitnessInvalid,
                 "witness '" + w.origin + "' for class " +
                     to_decimal(cls.representative()) + ": " + what);
  };
  if (!curve::on_curve(w.point, E)) throw fail("point is not on the curve");
  if (!(point_class(w.point, E) == cls))
    throw fail("point maps to a different class");
  switch (w.kind) {
    case Witness::Kind::Identity:
      if (!w.point.is_infinity()) throw fail("identity witness is not O");
      break;
    case Witness::Kind::TwoTorsion:
      if (w.point.is_infinity() || w.point.x() != 0 || w.point.y() != 0)
        throw fail("two-torsion witness is not (0,0)");
      break;
    case Witness::Kind::HomogeneousSpace: {
      if (w.d == 0 || w.e == 0) throw fail("degenerate homogeneous solution");
      ExactRat rhs = ExactRat(w.d * pow(w.M, 4)) +
                     ExactRat(E.b_coeff()) / ExactRat(w.d) * ExactRat(pow(w.e, 4));
      if (ExactRat(w.N * w.N) != rhs) throw fail("N^2 != d M^4 + (b/d) e^4");
      if (!(SquareClass::of(w.d) == cls)) throw fail("d is in another class");
      ExactRat e_rat(w.e);
      RationalPoint expected(ExactRat(w.d * w.M * w.M) / (e_rat * e_rat),
                             ExactRat(w.d * w.M * w.N) /
                                 (e_rat * e_rat * e_rat));
      if (!(expected == w.point)) throw fail("point does not match (M, e, N)");
      break;
    }
    case Witness::Kind::Product:
      break;
  }
}

DescentImage close_image(Side side, const CurveEn& E,
                         const std::vector<ImageEntry>& generators) {
  DescentImage image;
  image.side = side;
  image.curve_n = E.n();
  image.entries.push_back({SquareClass::of(ExactInt(1)), identity_witness()});
  for (const auto& gen : generators) {
    if (image.contains(gen.cls)) continue;
    const std::size_t existing = image.entries.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const ImageEntry& base = image.entries[i];
      if (i == 0) {
        image.entries.push_back(gen);
        continue;
      }
      Witness w;
      w.kind = Witness::Kind::Product;
      w.point = curve::add(base.witness.point, gen.witness.point, E);
      w.origin = base.witness.origin + " * " + gen.witness.origin;
      SquareClass cls = base.cls * gen.cls;
      verify_witness(w, cls, E);
      image.entries.push_back({cls, std::move(w)});
    }
  }
  return image;
}

void verify_image(const DescentImage& image) {
  CurveEn E(image.curve_n);
  if (image.entries.empty() || !image.entries.front().cls.is_trivial())
    throw Error(ErrorCode::WitnessInvalid, "image must start with class 1");
  if (!std::has_single_bit(image.entries.size()))
    throw Error(ErrorCode::WitnessInvalid, "image size is not a power of 2");
  for (std::size_t i = 0; i < image.entries.size(); ++i) {
    verify_witness(image.entries[i].witness, image.entries[i].cls, E);
    for (std::size_t j = 0; j < i; ++j)
      if (image.entries[i].cls == image.entries[j].cls)
        throw Error(ErrorCode::WitnessInvalid, "repeated class in image");
  }
  for (const auto& a : image.entries)
    for (const auto& b : image.entries)
      if (!image.contains(a.cls * b.cls))
        throw Error(ErrorCode::WitnessInvalid,
                    "image is not closed under multiplication");
}

EulerWitnessInput euler_witness_input(const biquadrate::EulerParams& params) {
  return {params, biquadrate::abcd_quantities(params),
          biquadrate::descent_witness_K(params)};
}

DescentImage phi_image(const CurveEn& E,
                       const biquadrate::BiquadQuadruple& quad,
                       const EulerWitnessInput* euler) {
  if (E.n() != quad.n)
    throw Error(ErrorCode::InvalidArgument,
                "quadruple does not belong to " + E.equation());
  auto [M, N2] = nonzero_first(quad.p, quad.q);
  if (M == 0) throw Error(ErrorCode::InvalidArgument, "p = q = 0");

  std::vector<ImageEntry> gens;
  gens.push_back(entry_for(torsion_witness(), E));
  // N^2 = -M^4 + n e^4 at (M, e, N) = (p, 1, q^2).
  gens.push_back(entry_for(
      homogeneous_witness(ExactInt(-1), M, 1, N2 * N2, "N^2=-M^4+n*e^4"), E));
  // N^2 = n M^4 - e^4 at (M, e, N) = (1, p, q^2).
  gens.push_back(entry_for(
      homogeneous_witness(E.n(), 1, M, N2 * N2, "N^2=n*M^4-e^4"), E));
  if (euler != nullptr) {
    const auto& L = euler->abcd;
    ExactInt g = biquadrate::euler_quadruple(euler->params).scale;
    if (L.A * L.B * L.C * L.D != E.n() * pow(g, 4))
      throw Error(ErrorCode::InvalidArgument,
                  "Euler parameters do not produce this n");
    // N^2 = b1 M^4 + b2 e^4 with M = 1, e = b; e picks up the reduction g.
    gens.push_back(entry_for(homogeneous_witness(L.b1, 1, euler->params.b * g,
                                                 euler->k.N, "N^2=b1*M^4+b2*e^4"),
                             E));
  }
  return close_image(Side::Phi, E, gens);
}

DescentImage psi_image(const CurveEn& dual,
                       const biquadrate::BiquadQuadruple& quad) {
  if (dual.n() != -4 * quad.n)
    throw Error(ErrorCode::InvalidArgument,
                "psi needs the dual curve y^2 = x^3 + 4n x");
  ExactInt M = quad.p + quad.q;
  ExactInt N = 2 * (quad.p * quad.p + quad.p * quad.q + quad.q * quad.q);
  if (M == 0) {
    M = quad.p - quad.q;
    N = 2 * (quad.p * quad.p - quad.p * quad.q + quad.q * quad.q);
  }
  if (M == 0) throw Error(ErrorCode::InvalidArgument, "p = q = 0");
  std::vector<ImageEntry> gens;
  gens.push_back(entry_for(torsion_witness(), dual));
  // N^2 = 2 M^4 + 2n e^4 at (M, e, N) = (p+q, 1, 2(p^2+pq+q^2)).
  gens.push_back(entry_for(
      homogeneous_witness(ExactInt(2), M, 1, N, "N^2=2*M^4+2n*e^4"), dual));
  return close_image(Side::Psi, dual, gens);
}

bool independence_mod_squares(const std::vector<ExactInt>& values) {
  for (const auto& v : values)
    if (v == 0)
      throw Error(ErrorCode::InvalidArgument, "zero has no square class");
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (is_square(ExactInt(values[i] * values[j]))) return false;
  return true;
}

int rank_lower_bound(std::size_t phi_size, std::size_t psi_size) {
  if (!std::has_single_bit(phi_size) || !std::has_single_bit(psi_size))
    throw Error(ErrorCode::InvalidArgument,
                "image sizes must be powers of 2");
  int bits = std::countr_zero(phi_size) + std::countr_zero(psi_size);
  return std::max(0, bits - 2);
}

int rank_lower_bound(const DescentImage& phi, const DescentImage& psi) {
  return rank_lower_bound(phi.size(), psi.size());
}

int yoshida_upper_bound(const ExactInt& n, const arith::Factorization& two_n) {
  if (abs(two_n.value) != abs(2 * n) || two_n.product() != abs(2 * n))
    throw Error(ErrorCode::InvalidArgument,
                "factorization does not describe 2n");
  if (!two_n.certified)
    throw Error(ErrorCode::InvalidArgument, "factorization not certified");
  return 2 * static_cast<int>(two_n.primes.size()) - 1;
}

}  // namespace bqrank::descent
