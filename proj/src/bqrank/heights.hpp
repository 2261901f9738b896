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

#include <cstddef>
#include <vector>

#include "bqrank/curve.hpp"

namespace bqrank::heights {

// Normalization: h(P) = lim h_x(2^k P) / 4^k with h_x(a/d) = log max(|a|, d).
// With it <P,P> = h(P) and the n = 17 pair has regulator ~1.85678.

struct HeightValue {
  double value = 0.0;
  double error_bound = 0.0;
};

constexpr double kDefaultPrecision = 1e-8;

/// How a height was obtained: P was multiplied by `multiplier` to land in the
/// subgroup with nonsingular reduction at every prime, after which the
/// non-archimedean part is exactly log(denominator).
struct HeightTrace {
  long multiplier = 1;
  double naive_part = 0.0;      // log max(|A|, D) of multiplier * P
  double archimedean_part = 0.0;
  int series_terms = 0;
  bool torsion = false;
};

HeightValue canonical_height(const curve::RationalPoint& P,
                             const curve::CurveEn& E,
                             double precision = kDefaultPrecision,
                             HeightTrace* trace = nullptr);

HeightValue pairing(const curve::RationalPoint& P,
                    const curve::RationalPoint& Q, const curve::CurveEn& E,
                    double precision = kDefaultPrecision);

struct GramMatrix {
  std::vector<std::vector<double>> entries;
  double determinant = 0.0;
  double entry_error = 0.0;
  double determinant_error = 0.0;

  std::size_t size() const noexcept { return entries.size(); }
};

GramMatrix gram_determinant(const std::vector<curve::RationalPoint>& points,
                            const curve::CurveEn& E,
                            double precision = kDefaultPrecision);

/// Determinant by partial-pivot elimination.
double determinant(std::vector<std::vector<double>> m);

/// Largest k such that some k-subset has Gram determinant above `tol`.
/// Throws Inconclusive when nothing clears `tol` but some point's height is
/// positive beyond its error bound.
int independence_rank(const std::vector<curve::RationalPoint>& points,
                      const curve::CurveEn& E, double tol,
                      double precision = kDefaultPrecision);

/// Same, on an already computed matrix.
int independence_rank(const GramMatrix& gram, double tol);

}  // namespace bqrank::heights
