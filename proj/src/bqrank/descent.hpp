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

#include <optional>
#include <string>
#include <vector>

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"
#include "bqrank/curve.hpp"

namespace bqrank::descent {

/// A nonzero rational modulo squares. The representative is the signed
/// squarefree part whenever factoring succeeds within the effort budget;
/// equality is decided by an exact square test either way.
class SquareClass {
 public:
  static SquareClass of(const ExactInt& value,
                        const arith::FactorEffort& effort = class_effort());
  static SquareClass of(const ExactRat& value,
                        const arith::FactorEffort& effort = class_effort());

  const ExactInt& representative() const noexcept { return rep_; }
  bool canonical() const noexcept { return canonical_; }

  SquareClass operator*(const SquareClass& other) const;
  bool operator==(const SquareClass& other) const;
  bool is_trivial() const;

  static arith::FactorEffort class_effort();

 private:
  SquareClass(ExactInt rep, bool canonical)
      : rep_(std::move(rep)), canonical_(canonical) {}

  ExactInt rep_;
  bool canonical_ = true;
};

enum class Side { Phi, Psi };

const char* to_string(Side side) noexcept;

/// Why a class belongs to the image. Every witness carries an explicit point
/// whose image is the class; homogeneous-space witnesses also keep the
/// solution (M, e, N) of N^2 = d M^4 + (b/d) e^4.
struct Witness {
  enum class Kind { Identity, TwoTorsion, HomogeneousSpace, Product };

  Kind kind = Kind::Identity;
  curve::RationalPoint point;
  ExactInt d, M, e, N;  // HomogeneousSpace only
  std::string origin;   // short provenance label
};

const char* to_string(Witness::Kind kind) noexcept;

struct ImageEntry {
  SquareClass cls;
  Witness witness;
};

struct DescentImage {
  Side side = Side::Phi;
  ExactInt curve_n;               // image of E_{curve_n}: y^2 = x^3 - curve_n x
  std::vector<ImageEntry> entries;  // entries[0] is the trivial class

  std::size_t size() const noexcept { return entries.size(); }
  bool contains(const SquareClass& cls) const;
};

/// Image of a point under x mod squares, with (0,0) mapped to the class of
/// the x-coefficient and O to 1.
SquareClass point_class(const curve::RationalPoint& P,
                        const curve::CurveEn& E);

/// Explicit Euler-parameter input for the b1 = B*D witness.
struct EulerWitnessInput {
  biquadrate::EulerParams params;
  biquadrate::AbcdQuantities abcd;
  biquadrate::DescentWitnessK k;
};

EulerWitnessInput euler_witness_input(const biquadrate::EulerParams& params);

DescentImage phi_image(const curve::CurveEn& E,
                       const biquadrate::BiquadQuadruple& quad,
                       const EulerWitnessInput* euler = nullptr);

DescentImage psi_image(const curve::CurveEn& dual,
                       const biquadrate::BiquadQuadruple& quad);

/// Subgroup generated by `generators` (witnesses must be valid).
DescentImage close_image(Side side, const curve::CurveEn& E,
                         const std::vector<ImageEntry>& generators);

/// Re-checks every witness by exact arithmetic; throws WitnessInvalid.
void verify_image(const DescentImage& image);
void verify_witness(const Witness& witness, const SquareClass& cls,
                    const curve::CurveEn& E);

/// True iff no ratio of two listed values is a rational square.
bool independence_mod_squares(const std::vector<ExactInt>& values);

int rank_lower_bound(const DescentImage& phi, const DescentImage& psi);
int rank_lower_bound(std::size_t phi_size, std::size_t psi_size);

/// 2 * #{primes dividing 2n} - 1, from a factorization of 2n.
int yoshida_upper_bound(const ExactInt& n, const arith::Factorization& two_n);

}  // namespace bqrank::descent
