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

#include "bqrank/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bqrank::heights {

using curve::CurveEn;
using curve::RationalPoint;

namespace {

constexpr long kMaxMultiplier = 64;
constexpr int kMaxSeriesTerms = 200;

double log_abs(const ExactInt& v) {
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(std::fabs(mantissa)) +
         static_cast<double>(exponent) * std::log(2.0);
}

// gcd of the homogeneous duplication numerator and denominator at x = A/D.
// It is 1 exactly when the point has nonsingular reduction at every prime.
bool everywhere_good(const RationalPoint& P, const ExactInt& n) {
  const ExactInt& A = P.x().get_num();
  const ExactInt& D = P.x().get_den();
  ExactInt t = A * A + n * D * D;
  ExactInt F = t * t;
  ExactInt G = 4 * A * D * (A * A - n * D * D);
  return gcd(F, G) == 1;
}

struct Series {
  long double sum = 0.0L;
  long double max_term = 0.0L;
  int terms = 0;
};

// sum_k 4^-(k+1) log max(|F|, |G|) along the doubling orbit, in projective
// coordinates normalized so max(|u|, |v|) = 1.
Series archimedean_series(const ExactRat& x, long double n, int terms) {
  const ExactInt& A = x.get_num();
  const ExactInt& D = x.get_den();
  long double u, v;
  if (abs(A) >= D) {
    u = sgn(A);
    v = ExactRat(D, abs(A)).get_d();
  } else {
    u = ExactRat(A, D).get_d();
    v = 1.0L;
  }
  Series out;
  long double weight = 0.25L;
  for (int k = 0; k < terms; ++k) {
    long double t = u * u + n * v * v;
    long double F = t * t;
    long double G = 4.0L * u * v * (u * u - n * v * v);
    long double M = std::max(std::fabs(F), std::fabs(G));
    long double phi = std::log(M);
    out.sum += weight * phi;
    out.max_term = std::max(out.max_term, std::fabs(phi));
    u = F / M;
    v = G / M;
    weight *= 0.25L;
    ++out.terms;
  }
  return out;
}

}  // namespace

HeightValue canonical_height(const RationalPoint& P, const CurveEn& E,
                             double precision, HeightTrace* trace) {
  curve::require_on_curve(P, E);
  if (!(precision > 0))
    throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  HeightTrace local;
  HeightTrace& t = trace ? *trace : local;
  t = HeightTrace{};

  RationalPoint Q = P;
  long m = 1;
  while (true) {
    if (Q.is_infinity()) {
      t.torsion = true;
      t.multiplier = m;
      return {0.0, 0.0};
    }
    if (everywhere_good(Q, E.n())) break;
    if (++m > kMaxMultiplier)
      throw Error(ErrorCode::PrecisionUnreachable,
                  "no multiple up to " + std::to_string(kMaxMultiplier) +
                      " of " + P.to_string() + " has good reduction");
    Q = curve::add(Q, P, E);
  }
  t.multiplier = m;

  const double log_n = log_abs(E.n());
  if (log_n > 11000.0)
    throw Error(ErrorCode::PrecisionUnreachable,
                "n too large for the floating-point series");
  const long double n_ld = ExactRat(E.n()).get_d();

  const ExactInt& A = Q.x().get_num();
  const ExactInt& D = Q.x().get_den();
  t.naive_part = log_abs(abs(A) >= D ? ExactInt(abs(A)) : D);

  // Upper bound on |log max(|F|,|G|)| from the coefficients; the lower side
  // is covered by the largest value seen on the orbit, doubled.
  const double coeff_bound = 2.0 * std::log1p(std::fabs(static_cast<double>(n_ld))) +
                             std::log(4.0);
  const double scale = static_cast<double>(m) * static_cast<double>(m);
  const double rounding = 1e-15 * (1.0 + t.naive_part) / scale;
  if (precision < 10 * rounding)
    throw Error(ErrorCode::PrecisionUnreachable,
                "requested precision below floating-point resolution");

  int terms = 16;
  Series series;
  double tail = 0.0;
  while (true) {
    series = archimedean_series(Q.x(), n_ld, terms);
    double bound = std::max(coeff_bound, 2.0 * static_cast<double>(series.max_term));
    tail = bound * std::pow(4.0, -terms) / 3.0 / scale;
    if (tail + rounding <= precision) break;
    terms += 8;
    if (terms > kMaxSeriesTerms)
      throw Error(ErrorCode::PrecisionUnreachable,
                  "archimedean series did not reach the requested precision");
  }
  t.archimedean_part = static_cast<double>(series.sum);
  t.series_terms = series.terms;
  return {(t.naive_part + t.archimedean_part) / scale, tail + rounding};
}

HeightValue pairing(const RationalPoint& P, const RationalPoint& Q,
                    const CurveEn& E, double precision) {
  auto hp = canonical_height(P, E, precision);
  auto hq = canonical_height(Q, E, precision);
  auto hs = canonical_height(curve::add(P, Q, E), E, precision);
  return {(hs.value - hp.value - hq.value) / 2.0,
          (hs.error_bound + hp.error_bound + hq.error_bound) / 2.0};
}

double determinant(std::vector<std::vector<double>> m) {
  const std::size_t k = m.size();
  double det = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < k; ++row)
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < k; ++row) {
      double f = m[row][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return det;
}

namespace {

double determinant_error(const std::vector<std::vector<double>>& m,
                         double entry_error) {
  // First-order perturbation: each row moves by at most entry_error * sqrt(k);
  // Hadamard bounds the cofactors by the product of the other row norms.
  const std::size_t k = m.size();
  if (k == 0) return 0.0;
  std::vector<double> norms(k);
  for (std::size_t i = 0; i < k; ++i)
    norms[i] = std::sqrt(std::inner_product(m[i].begin(), m[i].end(),
                                            m[i].begin(), 0.0));
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double others = 1.0;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others *= norms[j] + entry_error * std::sqrt(double(k));
    total += entry_error * std::sqrt(double(k)) * others;
  }
  return total;
}

}  // namespace

GramMatrix gram_determinant(const std::vector<RationalPoint>& points,
                            const CurveEn& E, double precision) {
  const std::size_t k = points.size();
  GramMatrix out;
  out.entries.assign(k, std::vector<double>(k, 0.0));
  std::vector<HeightValue> diag(k);
  for (std::size_t i = 0; i < k; ++i) {
    diag[i] = canonical_height(points[i], E, precision);
    out.entries[i][i] = diag[i].value;
    out.entry_error = std::max(out.entry_error, diag[i].error_bound);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      auto sum = canonical_height(curve::add(points[i], points[j], E), E,
                                  precision);
      double value = (sum.value - diag[i].value - diag[j].value) / 2.0;
      out.entries[i][j] = out.entries[j][i] = value;
      out.entry_error =
          std::max(out.entry_error, (sum.error_bound + diag[i].error_bound +
                                     diag[j].error_bound) / 2.0);
    }
  out.determinant = determinant(out.entries);
  out.determinant_error = determinant_error(out.entries, out.entry_error);
  return out;
}

int independence_rank(const GramMatrix& gram, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  const std::size_t k = gram.size();
  if (k > 24)
    throw Error(ErrorCode::InvalidArgument, "too many points for subset search");
  for (std::size_t size = k; size >= 1; --size) {
    std::vector<bool> chosen(k, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<long>(size), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i)
        if (chosen[i]) idx.push_back(i);
      std::vector<std::vector<double>> sub(size, std::vector<double>(size));
      for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
          sub[a][b] = gram.entries[idx[a]][idx[b]];
      if (determinant(sub) > tol) return static_cast<int>(size);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    double h = gram.entries[i][i];
    if (h > std::max(gram.entry_error, 0.0) && h <= tol)
      throw Error(ErrorCode::Inconclusive,
                  "heights fall between the error bound and tol");
  }
  return 0;
}

int independence_rank(const std::vector<RationalPoint>& points,
                      const CurveEn& E, double tol, double precision) {
  return independence_rank(gram_determinant(points, E, precision), tol);
}

}  // namespace bqrank::heights
