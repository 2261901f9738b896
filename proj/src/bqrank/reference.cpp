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

#include "bqrank/reference.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "bqrank/biquadrate.hpp"
#include "bqrank/curve.hpp"
#include "bqrank/descent.hpp"
#include "bqrank/parity.hpp"
#include "bqrank/serialize.hpp"

namespace bqrank::reference {

using nlohmann::json;
using biquadrate::EulerParams;
using curve::CurveEn;
using curve::RationalPoint;

json load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open fixture file " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, "malformed fixture file " + path + ": " + e.what());
  }
}

namespace {

// Each check returns a detail line on success and throws on failure.
using Check = std::function<std::string()>;

ClaimResult run(const std::string& name, const Check& check) {
  ClaimResult out;
  out.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    out.detail = check();
    out.passed = true;
  } catch (const std::exception& e) {
    out.detail = e.what();
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, what);
}

ExactInt fourth(const ExactInt& v) { return pow(v, 4); }

std::string euler_identity(long range) {
  for (long a = 1; a <= range; ++a)
    for (long b = 1; b <= range; ++b) {
      auto raw = biquadrate::euler_components({a, b});
      if (fourth(raw[0]) + fourth(raw[1]) != fourth(raw[2]) + fourth(raw[3]))
        fail("p^4+q^4 != r^4+s^4 at a=" + std::to_string(a) +
             ", b=" + std::to_string(b));
    }
  return std::to_string(range * range) + " parameter pairs";
}

std::string product_identity(long range) {
  for (long a = 1; a <= range; ++a)
    for (long b = 1; b <= range; ++b) {
      auto raw = biquadrate::euler_components({a, b});
      auto q = biquadrate::abcd_quantities({a, b});
      if (q.A * q.B * q.C * q.D != fourth(raw[0]) + fourth(raw[1]))
        fail("A*B*C*D != n at a=" + std::to_string(a) +
             ", b=" + std::to_string(b));
    }
  return std::to_string(range * range) + " parameter pairs";
}

std::string k_identity(long range, const json& erratum) {
  for (long a = 1; a <= range; ++a)
    for (long b = 1; b <= range; ++b) {
      auto q = biquadrate::abcd_quantities({a, b});
      ExactInt K = q.B * q.D - fourth(ExactInt(b)) * q.A * q.C;
      ExactInt A(a), B(b);
      ExactInt inner = pow(A, 6) + pow(A, 4) * B * B + 4 * A * A * pow(B, 4) -
                       5 * pow(B, 6);
      if (!is_square(K) || K != pow(A, 4) * inner * inner)
        fail("K is not a^4 (a^6+a^4b^2+4a^2b^4-5b^6)^2 at a=" +
             std::to_string(a) + ", b=" + std::to_string(b));
      biquadrate::descent_witness_K({a, b});
    }
  EulerParams ab{int_from_json(erratum.at("a")), int_from_json(erratum.at("b"))};
  ExactInt printed = biquadrate::printed_K_formula(ab);
  ExactInt actual = biquadrate::descent_witness_K(ab).K;
  if (printed != int_from_json(erratum.at("printed")) ||
      actual != int_from_json(erratum.at("actual")))
    fail("erratum values differ: printed form gives " + to_decimal(printed) +
         ", K = " + to_decimal(actual));
  if (printed == actual) fail("printed form unexpectedly agrees with K");
  return "K = a^4 (a^6+a^4b^2+4a^2b^4-5b^6)^2 on " +
         std::to_string(range * range) + " pairs; printed 4b^4a^3 term gives " +
         to_decimal(printed) + " != " + to_decimal(actual) + " at (a,b)=(" +
         to_decimal(ab.a) + "," + to_decimal(ab.b) + "), recorded as erratum";
}

arith::Factorization core_of(const arith::Factorization& f) {
  arith::Factorization out;
  out.certified = f.certified;
  for (const auto& pp : f.primes)
    if (pp.exponent % 4) out.primes.push_back({pp.prime, pp.exponent % 4});
  out.value = out.product();
  return out;
}

std::string table_row(const json& row, const ReferenceOptions& options) {
  ExactInt p = int_from_json(row.at("p")), q = int_from_json(row.at("q"));
  ExactInt n = int_from_json(row.at("n"));
  int rank = row.at("rank").get<int>();
  std::ostringstream detail;
  if (fourth(p) + fourth(q) != n) fail("p^4+q^4 = " + to_decimal(fourth(p) + fourth(q)));
  const bool odd = mpz_odd_p(n.get_mpz_t());
  unsigned long residue = mpz_fdiv_ui(n.get_mpz_t(), 16);
  if (residue != (odd ? 1u : 2u))
    fail("n = " + std::to_string(residue) + " mod 16");
  detail << "p^4+q^4 = n, n = " << residue << " mod 16";

  auto reps = biquadrate::representations_of(n);
  std::optional<biquadrate::BiquadQuadruple> quad;
  if (reps)
    for (const auto& [r, s] : *reps) {
      if ((r == abs(p) && s == abs(q)) || (r == abs(q) && s == abs(p))) continue;
      auto candidate = biquadrate::validate_double_representation(p, q, r, s);
      if (candidate.primitive) {
        quad = candidate;
        detail << ", partner " << to_decimal(r) << "^4 + " << to_decimal(s) << "^4";
        break;
      }
    }
  if (!quad) detail << ", partner not found";

  parity::RootNumber omega;
  try {
    auto f = cached_factor(n, options.effort, options.cache);
    omega = parity::root_number(arith::fourth_power_free_part(f).core,
                                core_of(f));
    if (quad) parity::prime_divisor_law(n, f, *quad);
  } catch (const arith::EffortExceeded&) {
    if (!quad) throw;
    omega = parity::root_number_by_divisor_law(n);
  }
  if (omega.omega != omega.sign * omega.epsilon * omega.square_part_product)
    fail("omega is not the product of its factors");
  if (omega.omega != (odd ? 1 : -1))
    fail("omega = " + std::to_string(omega.omega));
  if ((rank % 2 == 0 ? 1 : -1) != omega.omega)
    fail("listed rank " + std::to_string(rank) + " has the wrong parity");
  detail << ", omega = " << (omega.omega > 0 ? "+1" : "-1") << " via "
         << parity::to_string(omega.path) << ", listed rank " << rank;
  return detail.str();
}

std::string regulator(const json& entry, const ReferenceOptions& options) {
  CurveEn E(int_from_json(entry.at("n")));
  std::vector<RationalPoint> points;
  for (const auto& pt : entry.at("points"))
    points.emplace_back(ExactRat(int_from_json(pt.at(0))),
                        ExactRat(int_from_json(pt.at(1))));
  for (const auto& P : points) curve::require_on_curve(P, E);
  auto gram = heights::gram_determinant(points, E, options.precision);
  double expected = entry.at("determinant").get<double>();
  double rel = std::fabs(gram.determinant - expected) / std::fabs(expected);
  std::ostringstream detail;
  detail.precision(10);
  detail << "det = " << gram.determinant << ", reference " << expected
         << ", relative error " << rel;
  if (rel > entry.at("rel_tol").get<double>()) fail(detail.str());
  return detail.str();
}

std::string descent_range(long range) {
  int checked = 0;
  for (long a = 1; a <= range; ++a)
    for (long b = 1; b <= range; ++b) {
      if (a == b) continue;
      EulerParams ab{a, b};
      auto quad = biquadrate::euler_quadruple(ab);
      CurveEn E(quad.n);
      auto input = descent::euler_witness_input(ab);
      auto phi = descent::phi_image(E, quad, &input);
      auto psi = descent::psi_image(curve::dual_curve(E), quad);
      descent::verify_image(phi);
      descent::verify_image(psi);
      int lower = descent::rank_lower_bound(phi, psi);
      std::string at = " at a=" + std::to_string(a) + ", b=" + std::to_string(b);
      if (phi.size() < 8) fail("|phi| = " + std::to_string(phi.size()) + at);
      if (psi.size() < 4) fail("|psi| = " + std::to_string(psi.size()) + at);
      if (lower != 3) fail("descent bound " + std::to_string(lower) + at);
      if (mpz_odd_p(quad.n.get_mpz_t())) {
        auto omega = parity::root_number_by_divisor_law(quad.n);
        if (parity::parity_adjusted_bound(lower, omega).value != 4)
          fail("parity-adjusted bound is not 4" + at);
      }
      ++checked;
    }
  return std::to_string(checked) + " quadruples: |phi| >= 8, |psi| >= 4, "
         "bound 3, parity-adjusted 4 for odd n";
}

std::string divisor_law(std::uint64_t max_base, const ReferenceOptions& options) {
  biquadrate::SearchOptions search{max_base, 4, options.threads};
  auto hits = cached_search(search, options.cache);
  std::size_t primes = 0;
  for (const auto& hit : hits) {
    auto quad = hit.quadruple();
    auto f = cached_factor(hit.n, options.effort, options.cache);
    for (const auto& pp : f.primes) {
      if (pp.prime == 2) continue;
      ++primes;
      if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 8) != 1)
        fail("prime " + to_decimal(pp.prime) + " of " + to_decimal(hit.n) +
             " is not 1 mod 8");
    }
    if (quad.primitive) parity::prime_divisor_law(hit.n, f, quad);
  }
  return std::to_string(hits.size()) + " hits, " + std::to_string(primes) +
         " odd prime divisors, all 1 mod 8";
}

std::string search_claim(const json& entry, const ReferenceOptions& options) {
  auto hits = cached_search({entry.at("max_base").get<std::uint64_t>(), 1,
                             options.threads},
                            options.cache);
  std::vector<std::string> got;
  for (const auto& hit : hits) got.push_back(to_decimal(hit.n));
  if (got != entry.at("expected").get<std::vector<std::string>>())
    fail("search returned " + std::to_string(got.size()) + " hits");
  auto empty = cached_search({entry.at("empty_max_base").get<std::uint64_t>(), 1,
                              options.threads},
                             options.cache);
  if (!empty.empty()) fail("smaller search is not empty");
  return "max_base " + to_decimal(entry.at("max_base").get<std::uint64_t>()) +
         " gives exactly " + got.front() + "; max_base " +
         to_decimal(entry.at("empty_max_base").get<std::uint64_t>()) +
         " gives none";
}

std::string height_laws(const ReferenceOptions& options) {
  constexpr double kLawTol = 1e-5;
  auto quad = biquadrate::euler_quadruple({2, 1});
  CurveEn big(quad.n);
  CurveEn small(17);
  struct Sample {
    const CurveEn* E;
    RationalPoint P, Q;
  };
  auto pts = curve::constructed_points(quad);
  std::vector<Sample> samples = {
      {&small, RationalPoint(ExactRat(-4), ExactRat(2)),
       RationalPoint(ExactRat(-1), ExactRat(4))},
      {&big, pts[0], pts[1]},
      {&big, pts[2], pts[3]},
  };
  double worst = 0;
  auto h = [&](const RationalPoint& P, const CurveEn& E) {
    return heights::canonical_height(P, E, options.precision).value;
  };
  for (const auto& s : samples) {
    const CurveEn& E = *s.E;
    double hp = h(s.P, E), hq = h(s.Q, E);
    double doubled = h(curve::add(s.P, s.P, E), E);
    double lhs = h(curve::add(s.P, s.Q, E), E) + h(curve::subtract(s.P, s.Q, E), E);
    worst = std::max({worst, std::fabs(doubled - 4 * hp),
                      std::fabs(lhs - 2 * hp - 2 * hq)});
    if (h(RationalPoint(), E) != 0.0) fail("height of O is nonzero");
    if (h(RationalPoint(ExactRat(0), ExactRat(0)), E) != 0.0)
      fail("height of (0,0) is nonzero");
  }
  std::ostringstream detail;
  detail << "largest deviation " << worst;
  if (worst > kLawTol) fail(detail.str());
  return detail.str();
}

// x^3 + c x is a rational square for x = (value)^2 when the flag is set.
std::optional<ExactRat> curve_y(const ExactInt& coefficient, ExactRat x) {
  ExactRat rhs = x * x * x + ExactRat(coefficient) * x;
  if (!is_square(rhs)) return std::nullopt;
  ExactRat y(isqrt(rhs.get_num()), isqrt(rhs.get_den()));
  y.canonicalize();
  return y;
}

std::string large_point(const json& entry) {
  ExactInt coefficient = int_from_json(entry.at("coefficient"));
  const bool squared = entry.value("x_is_square_of", false);
  auto x_of = [&](const std::string& text) {
    ExactRat v = parse_rat(text);
    return squared ? ExactRat(v * v) : v;
  };
  ExactRat printed = x_of(entry.at("x").get<std::string>());
  std::string detail;
  std::optional<ExactRat> y = curve_y(coefficient, printed);
  ExactRat x = printed;
  if (!y && entry.contains("corrected_x")) {
    x = x_of(entry.at("corrected_x").get<std::string>());
    y = curve_y(coefficient, x);
    if (y)
      detail = "printed value is not a point (erratum); corrected value " +
               entry.at("corrected_x").get<std::string>() + " is. ";
  }
  if (!y) fail("x^3 + " + to_decimal(coefficient) + " x is not a square");
  curve::require_on_curve(RationalPoint(x, *y), CurveEn(-coefficient));
  return detail + "x^3 + " + to_decimal(coefficient) +
         " x is the square of a rational with " +
         std::to_string(mpz_sizeinbase(y->get_num_mpz_t(), 10)) +
         "-digit numerator";
}

std::string consistency(const json& entry, const ReferenceOptions& options) {
  ExactInt n = int_from_json(entry.at("n"));
  auto reps = biquadrate::representations_of(n);
  if (!reps || reps->size() < 2) fail("no double representation");
  auto quad = biquadrate::validate_double_representation(
      (*reps)[0].first, (*reps)[0].second, (*reps)[1].first, (*reps)[1].second);
  auto euler = biquadrate::find_euler_params(quad);
  CurveEn E(n);
  std::optional<descent::EulerWitnessInput> input;
  if (euler) input = descent::euler_witness_input(*euler);
  auto phi = descent::phi_image(E, quad, input ? &*input : nullptr);
  auto psi = descent::psi_image(curve::dual_curve(E), quad);
  int lower = descent::rank_lower_bound(phi, psi);
  auto f = cached_factor(n, options.effort, options.cache);
  int upper = descent::yoshida_upper_bound(
      n, arith::multiply(f, arith::factor(ExactInt(2))));
  if (lower != entry.at("lower").get<int>() || upper != entry.at("upper").get<int>() ||
      lower > upper)
    fail("bounds " + std::to_string(lower) + " and " + std::to_string(upper));
  return std::to_string(lower) + " <= " + std::to_string(upper);
}

std::string square_factor(const json& entry, const ReferenceOptions& options) {
  const auto& c = entry.at("pqrs");
  auto quad = biquadrate::validate_double_representation(
      int_from_json(c.at(0)), int_from_json(c.at(1)), int_from_json(c.at(2)),
      int_from_json(c.at(3)));
  ExactInt prime = int_from_json(entry.at("prime"));
  if (quad.n % (prime * prime) != 0) fail(to_decimal(prime) + "^2 does not divide n");
  if (mpz_fdiv_ui(prime.get_mpz_t(), 8) != 1) fail("prime is not 1 mod 8");
  std::string detail = to_decimal(prime) + "^2 | " + to_decimal(quad.n);
  try {
    auto f = cached_factor(quad.n, options.effort, options.cache);
    if (quad.primitive) parity::prime_divisor_law(quad.n, f, quad);
    auto omega = parity::root_number(arith::fourth_power_free_part(f).core,
                                     core_of(f));
    if (omega.square_part_product != 1) fail("square part product is not +1");
    detail += ", square part product +1 from the factorization";
  } catch (const arith::EffortExceeded&) {
    detail += ", factoring stalled; square part product +1 by the divisor law";
  }
  return detail;
}

}  // namespace

std::vector<ClaimResult> run_reference_claims(const json& fixtures,
                                              const ReferenceOptions& options) {
  std::vector<ClaimResult> out;
  const long euler_range = fixtures.at("euler_range").get<long>();
  out.push_back(run("euler identity, 1 <= a,b <= " + std::to_string(euler_range),
                    [&] { return euler_identity(euler_range); }));
  out.push_back(run("A*B*C*D = n(a,b), 1 <= a,b <= " + std::to_string(euler_range),
                    [&] { return product_identity(euler_range); }));
  out.push_back(run("K identity and printed-form erratum", [&] {
    return k_identity(euler_range, fixtures.at("k_erratum"));
  }));
  for (const auto& row : fixtures.at("table_rows"))
    out.push_back(run("table row n = " + row.at("n").get<std::string>(),
                      [&] { return table_row(row, options); }));
  for (const auto& entry : fixtures.at("regulators"))
    out.push_back(run("height determinant, n = " + entry.at("n").get<std::string>(),
                      [&] { return regulator(entry, options); }));
  const long descent = fixtures.at("descent_range").get<long>();
  out.push_back(run("descent bound 3, 1 <= a,b <= " + std::to_string(descent) +
                        ", a != b",
                    [&] { return descent_range(descent); }));
  const auto law_base = fixtures.at("divisor_law_max_base").get<std::uint64_t>();
  out.push_back(run("odd prime divisors are 1 mod 8, max_base " +
                        std::to_string(law_base),
                    [&] { return divisor_law(law_base, options); }));
  out.push_back(run("search results", [&] {
    return search_claim(fixtures.at("search"), options);
  }));
  out.push_back(run("height laws", [&] { return height_laws(options); }));
  out.push_back(run("large generator for coefficient " +
                        fixtures.at("large_point").at("coefficient").get<std::string>(),
                    [&] { return large_point(fixtures.at("large_point")); }));
  out.push_back(run("descent bound <= heuristic upper bound", [&] {
    return consistency(fixtures.at("consistency"), options);
  }));
  for (const auto& example : fixtures.at("square_factor_examples"))
    out.push_back(run("square factor " + example.at("prime").get<std::string>() +
                          "^2, p = " + example.at("pqrs").at(0).get<std::string>(),
                      [&] { return square_factor(example, options); }));
  return out;
}

}  // namespace bqrank::reference
