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

#include "bqrank/certificate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "bqrank/serialize.hpp"

namespace bqrank::certificate {

using nlohmann::json;
using curve::CurveEn;
using curve::RationalPoint;

AnalysisInput AnalysisInput::from_n(ExactInt n) {
  AnalysisInput in;
  in.kind = Kind::N;
  in.n = std::move(n);
  return in;
}

AnalysisInput AnalysisInput::from_pqrs(ExactInt p, ExactInt q, ExactInt r,
                                       ExactInt s) {
  AnalysisInput in;
  in.kind = Kind::Pqrs;
  in.p = std::move(p);
  in.q = std::move(q);
  in.r = std::move(r);
  in.s = std::move(s);
  return in;
}

AnalysisInput AnalysisInput::from_ab(ExactInt a, ExactInt b) {
  AnalysisInput in;
  in.kind = Kind::Ab;
  in.ab = {std::move(a), std::move(b)};
  return in;
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json-lines" || name == "json") return Format::JsonLines;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + name + "'");
}

const char* to_string(LawStatus status) noexcept {
  switch (status) {
    case LawStatus::Verified: return "verified";
    case LawStatus::NotApplicable: return "not_applicable";
    case LawStatus::Unchecked: return "unchecked";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::pair<ExactInt, ExactInt> abs_sorted(const ExactInt& a, const ExactInt& b) {
  ExactInt x = abs(a), y = abs(b);
  if (x > y) std::swap(x, y);
  return {x, y};
}

biquadrate::BiquadQuadruple reduce(biquadrate::BiquadQuadruple quad) {
  const ExactInt parts[] = {quad.p, quad.q, quad.r, quad.s};
  ExactInt g = arith::gcd_many(parts);
  if (g <= 1) return quad;
  auto reduced = biquadrate::validate_double_representation(
      quad.p / g, quad.q / g, quad.r / g, quad.s / g);
  reduced.scale = quad.scale * g;
  return reduced;
}

biquadrate::BiquadQuadruple single(const ExactInt& p, const ExactInt& q) {
  return biquadrate::validate_double_representation(p, q, p, q);
}

void resolve(const AnalysisInput& input, const AnalysisOptions& options,
             RankCertificate& cert) {
  using Kind = AnalysisInput::Kind;
  switch (input.kind) {
    case Kind::Ab: {
      cert.input_description = "--ab " + to_decimal(input.ab.a) + " " +
                               to_decimal(input.ab.b);
      cert.quadruple = biquadrate::euler_quadruple(input.ab);
      cert.euler = input.ab;
      break;
    }
    case Kind::Pqrs: {
      cert.input_description = "--pqrs " + to_decimal(input.p) + " " +
                               to_decimal(input.q) + " " + to_decimal(input.r) +
                               " " + to_decimal(input.s);
      cert.quadruple = reduce(biquadrate::validate_double_representation(
          input.p, input.q, input.r, input.s));
      break;
    }
    case Kind::N: {
      cert.input_description = "--n " + to_decimal(input.n);
      if (input.n <= 0)
        throw Error(ErrorCode::InvalidArgument, "--n must be positive");
      auto reps = biquadrate::representations_of(
          input.n, options.representation_scan_limit);
      if (!reps)
        throw Error(ErrorCode::NoRepresentation,
                    "representation scan for " + to_decimal(input.n) +
                        " exceeds the scan limit");
      if (reps->empty())
        throw Error(ErrorCode::NoRepresentation,
                    to_decimal(input.n) + " is not a sum of two fourth powers");
      if (reps->size() == 1) {
        cert.quadruple = reduce(single(reps->front().first, reps->front().second));
        break;
      }
      std::optional<biquadrate::BiquadQuadruple> chosen;
      for (std::size_t i = 0; i < reps->size() && !chosen; ++i)
        for (std::size_t j = i + 1; j < reps->size(); ++j) {
          auto quad = biquadrate::validate_double_representation(
              (*reps)[i].first, (*reps)[i].second, (*reps)[j].first,
              (*reps)[j].second);
          if (quad.primitive) {
            chosen = quad;
            break;
          }
        }
      if (!chosen)
        chosen = reduce(biquadrate::validate_double_representation(
            (*reps)[0].first, (*reps)[0].second, (*reps)[1].first,
            (*reps)[1].second));
      cert.quadruple = *chosen;
      break;
    }
  }
  const auto& quad = cert.quadruple;
  cert.n = quad.n;
  cert.double_representation = !quad.degenerate;
  cert.representations.push_back(abs_sorted(quad.p, quad.q));
  if (!quad.degenerate) cert.representations.push_back(abs_sorted(quad.r, quad.s));
  std::sort(cert.representations.begin(), cert.representations.end());
  if (!cert.euler && cert.double_representation)
    cert.euler = biquadrate::find_euler_params(quad, options.euler_search_bound);
}

arith::Factorization core_factorization(const arith::Factorization& f) {
  arith::Factorization out;
  out.sign = f.sign;
  out.certified = f.certified;
  for (const auto& pp : f.primes)
    if (pp.exponent % 4) out.primes.push_back({pp.prime, pp.exponent % 4});
  out.value = out.sign * out.product();
  return out;
}

const char* kPointLabels[] = {"Q(p,q)", "Q(q,p)", "Q(r,s)", "Q(s,r)"};

}  // namespace

RankCertificate analyze(const AnalysisInput& input,
                        const AnalysisOptions& options) {
  const auto start = Clock::now();
  RankCertificate cert;
  cert.tool_version = kToolVersion;
  cert.seed = options.effort.seed;
  cert.precision = options.precision;
  cert.tol = options.tol;
  Timings timings;

  resolve(input, options, cert);
  const auto& quad = cert.quadruple;
  CurveEn E(cert.n);
  CurveEn dual = curve::dual_curve(E);

  auto t = Clock::now();
  try {
    cert.factorization = cached_factor(cert.n, options.effort, options.cache);
  } catch (const arith::EffortExceeded& e) {
    cert.factorization = e.partial();
    cert.factorization_complete = false;
    cert.unfactored_residual = e.residual();
  }
  timings.factor_ms = ms_since(t);

  if (cert.factorization_complete) {
    auto ffp = arith::fourth_power_free_part(cert.factorization);
    cert.core_n = ffp.core;
    cert.twist_root = ffp.root;
    cert.torsion = curve::torsion_shape(-cert.core_n, options.effort);
  } else {
    cert.core_n = cert.n;
    cert.twist_root = 1;
  }

  t = Clock::now();
  auto points = curve::constructed_points(quad);
  for (std::size_t i = 0; i < points.size(); ++i)
    cert.points.push_back({kPointLabels[i], points[i],
                           heights::canonical_height(points[i], E,
                                                     options.precision)});
  cert.gram = heights::gram_determinant(points, E, options.precision);
  try {
    cert.independence_rank = heights::independence_rank(cert.gram, options.tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconclusive) throw;
    cert.independence_inconclusive = true;
    cert.independence_rank = 0;
  }
  timings.heights_ms = ms_since(t);

  t = Clock::now();
  std::optional<descent::EulerWitnessInput> euler_input;
  if (cert.euler) euler_input = descent::euler_witness_input(*cert.euler);
  cert.phi = descent::phi_image(E, quad, euler_input ? &*euler_input : nullptr);
  cert.psi = descent::psi_image(dual, quad);
  cert.descent_lower = descent::rank_lower_bound(cert.phi, cert.psi);
  timings.descent_ms = ms_since(t);

  try {
    if (cert.factorization_complete)
      cert.root_number = parity::root_number(
          cert.core_n, core_factorization(cert.factorization));
    else if (cert.double_representation && quad.primitive)
      cert.root_number = parity::root_number_by_divisor_law(cert.core_n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OutOfDomain) throw;
    cert.root_number.reset();
  }

  if (!quad.primitive) {
    cert.prime_divisor_law = LawStatus::NotApplicable;
  } else if (cert.factorization_complete && cert.factorization.certified) {
    parity::prime_divisor_law(cert.n, cert.factorization, quad);
    cert.prime_divisor_law = LawStatus::Verified;
  }

  if (cert.factorization_complete && cert.factorization.certified) {
    auto two_n = arith::multiply(cert.factorization, arith::factor(ExactInt(2)));
    cert.heuristic_upper = descent::yoshida_upper_bound(cert.n, two_n);
  }

  cert.unconditional_lower = std::max(cert.descent_lower, cert.independence_rank);
  cert.conditional_lower =
      cert.root_number
          ? parity::parity_adjusted_bound(cert.unconditional_lower,
                                          *cert.root_number)
                .value
          : cert.unconditional_lower;

  if (cert.heuristic_upper && cert.conditional_lower > *cert.heuristic_upper)
    throw Error(ErrorCode::InvariantViolation,
                "conditional lower bound " +
                    std::to_string(cert.conditional_lower) +
                    " exceeds heuristic upper bound " +
                    std::to_string(*cert.heuristic_upper) + " for n = " +
                    to_decimal(cert.n));
  if (cert.unconditional_lower > cert.conditional_lower)
    throw Error(ErrorCode::InvariantViolation,
                "unconditional bound above conditional bound");

  timings.total_ms = ms_since(start);
  if (options.include_timings) cert.timings = timings;
  return cert;
}

namespace {

json witness_json(const descent::ImageEntry& entry) {
  const auto& w = entry.witness;
  json out{{"class", to_decimal(entry.cls.representative())},
           {"canonical", entry.cls.canonical()},
           {"kind", descent::to_string(w.kind)},
           {"origin", w.origin},
           {"point", bqrank::to_json(w.point)}};
  if (w.kind == descent::Witness::Kind::HomogeneousSpace) {
    out["d"] = to_decimal(w.d);
    out["M"] = to_decimal(w.M);
    out["e"] = to_decimal(w.e);
    out["N"] = to_decimal(w.N);
  }
  return out;
}

json image_json(const descent::DescentImage& image) {
  json classes = json::array();
  for (const auto& entry : image.entries) classes.push_back(witness_json(entry));
  return {{"side", descent::to_string(image.side)},
          {"curve_n", to_decimal(image.curve_n)},
          {"size", image.size()},
          {"classes", classes}};
}

}  // namespace

json to_json(const RankCertificate& cert) {
  json reps = json::array();
  for (const auto& [a, b] : cert.representations)
    reps.push_back(json::array({to_decimal(a), to_decimal(b)}));
  json points = json::array();
  for (const auto& rec : cert.points)
    points.push_back({{"label", rec.label},
                      {"point", bqrank::to_json(rec.point)},
                      {"height", rec.height.value},
                      {"height_error", rec.height.error_bound}});
  json out{
      {"record", "certificate"},
      {"tool_version", cert.tool_version},
      {"input", cert.input_description},
      {"n", to_decimal(cert.n)},
      {"curve", CurveEn(cert.n).equation()},
      {"fourth_power_free", {{"core", to_decimal(cert.core_n)},
                             {"root", to_decimal(cert.twist_root)}}},
      {"representations", reps},
      {"double_representation", cert.double_representation},
      {"quadruple", bqrank::to_json(cert.quadruple)},
      {"euler", cert.euler ? json{{"a", to_decimal(cert.euler->a)},
                                  {"b", to_decimal(cert.euler->b)}}
                           : json(nullptr)},
      {"factorization", bqrank::to_json(cert.factorization)},
      {"factorization_complete", cert.factorization_complete},
      {"unfactored_residual", to_decimal(cert.unfactored_residual)},
      {"torsion", cert.torsion ? json(curve::to_string(*cert.torsion))
                               : json(nullptr)},
      {"points", points},
      {"gram", {{"entries", cert.gram.entries},
                {"determinant", cert.gram.determinant},
                {"determinant_error", cert.gram.determinant_error},
                {"entry_error", cert.gram.entry_error}}},
      {"independence_rank", cert.independence_rank},
      {"independence_inconclusive", cert.independence_inconclusive},
      {"phi", image_json(cert.phi)},
      {"psi", image_json(cert.psi)},
      {"descent_lower", cert.descent_lower},
      {"prime_divisor_law", to_string(cert.prime_divisor_law)},
      {"seed", cert.seed},
      {"precision", cert.precision},
      {"tol", cert.tol},
  };
  if (cert.root_number) {
    const auto& r = *cert.root_number;
    out["root_number"] = {{"omega", r.omega},
                          {"sign", r.sign},
                          {"epsilon", r.epsilon},
                          {"square_part_product", r.square_part_product},
                          {"residue_mod_16", r.residue},
                          {"path", parity::to_string(r.path)},
                          {"conditional", r.conditional}};
  } else {
    out["root_number"] = nullptr;
  }
  out["bounds"] = {
      {"unconditional_lower", cert.unconditional_lower},
      {"conditional_lower", cert.conditional_lower},
      {"conditional_on", "parity conjecture"},
      {"heuristic_upper",
       cert.heuristic_upper ? json(*cert.heuristic_upper) : json(nullptr)}};
  if (cert.timings)
    out["timings_ms"] = {{"factor", cert.timings->factor_ms},
                         {"heights", cert.timings->heights_ms},
                         {"descent", cert.timings->descent_ms},
                         {"total", cert.timings->total_ms}};
  return out;
}

std::string csv_header() {
  return "p,q,n,unconditional_lower,conditional_lower,omega";
}

std::string csv_row(const RankCertificate& cert) {
  std::ostringstream out;
  out << to_decimal(abs(cert.quadruple.p)) << ','
      << to_decimal(abs(cert.quadruple.q)) << ',' << to_decimal(cert.n) << ','
      << cert.unconditional_lower << ',' << cert.conditional_lower << ',';
  if (cert.root_number)
    out << (cert.root_number->omega > 0 ? "+1" : "-1");
  return out.str();
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string class_list(const descent::DescentImage& image) {
  std::string out;
  for (const auto& entry : image.entries) {
    if (!out.empty()) out += ", ";
    out += to_decimal(entry.cls.representative());
  }
  return "{" + out + "}";
}

std::string render_table(const RankCertificate& cert) {
  std::ostringstream out;
  out << "curve            " << CurveEn(cert.n).equation() << "\n";
  out << "n                " << to_decimal(cert.n) << "\n";
  out << "input            " << cert.input_description << "\n";
  out << "representations  ";
  for (std::size_t i = 0; i < cert.representations.size(); ++i)
    out << (i ? ", " : "") << to_decimal(cert.representations[i].first)
        << "^4 + " << to_decimal(cert.representations[i].second) << "^4";
  out << "\n";
  if (cert.euler)
    out << "euler params     a = " << to_decimal(cert.euler->a)
        << ", b = " << to_decimal(cert.euler->b) << "\n";
  out << "factorization    ";
  for (std::size_t i = 0; i < cert.factorization.primes.size(); ++i) {
    const auto& pp = cert.factorization.primes[i];
    out << (i ? " * " : "") << to_decimal(pp.prime);
    if (pp.exponent > 1) out << "^" << pp.exponent;
  }
  if (!cert.factorization_complete)
    out << " * [unfactored " << to_decimal(cert.unfactored_residual) << "]";
  out << "\n";
  out << "torsion          "
      << (cert.torsion ? curve::to_string(*cert.torsion) : "unknown") << "\n";
  out << "points\n";
  for (const auto& rec : cert.points)
    out << "  " << rec.label << " = " << rec.point.to_string()
        << "  h = " << fixed(rec.height.value, 10) << "\n";
  out << "gram determinant " << fixed(cert.gram.determinant, 6) << " (+/- "
      << cert.gram.determinant_error << ")\n";
  out << "independent pts  " << cert.independence_rank
      << (cert.independence_inconclusive ? " (inconclusive)" : "") << "\n";
  out << "phi image        " << cert.phi.size() << " classes "
      << class_list(cert.phi) << "\n";
  out << "psi image        " << cert.psi.size() << " classes "
      << class_list(cert.psi) << "\n";
  out << "descent bound    rank >= " << cert.descent_lower << "\n";
  if (cert.root_number) {
    const auto& r = *cert.root_number;
    out << "root number      " << (r.omega > 0 ? "+1" : "-1") << " = sgn(-n) "
        << r.sign << " * eps " << r.epsilon << " * square part "
        << r.square_part_product << "  (n = " << r.residue << " mod 16, via "
        << parity::to_string(r.path) << ")\n";
  } else {
    out << "root number      unavailable\n";
  }
  out << "prime law        " << to_string(cert.prime_divisor_law) << "\n";
  out << "rank >= " << cert.unconditional_lower << " unconditionally\n";
  out << "rank >= " << cert.conditional_lower
      << " assuming the parity conjecture\n";
  out << "rank <= "
      << (cert.heuristic_upper ? std::to_string(*cert.heuristic_upper) : "?")
      << " (heuristic 2#{l | 2n} - 1)\n";
  return out.str();
}

}  // namespace

std::string render(const RankCertificate& cert, Format format) {
  switch (format) {
    case Format::JsonLines: return to_json(cert).dump() + "\n";
    case Format::Csv: return csv_header() + "\n" + csv_row(cert) + "\n";
    case Format::Table: return render_table(cert);
  }
  return {};
}

namespace {

descent::Witness::Kind witness_kind(const std::string& name) {
  using K = descent::Witness::Kind;
  for (K k : {K::Identity, K::TwoTorsion, K::HomogeneousSpace, K::Product})
    if (name == descent::to_string(k)) return k;
  throw Error(ErrorCode::WitnessInvalid, "unknown witness kind " + name);
}

descent::DescentImage image_from_json(const json& j) {
  descent::DescentImage image;
  image.side = j.at("side").get<std::string>() == "phi" ? descent::Side::Phi
                                                        : descent::Side::Psi;
  image.curve_n = int_from_json(j.at("curve_n"));
  for (const auto& c : j.at("classes")) {
    descent::Witness w;
    w.kind = witness_kind(c.at("kind").get<std::string>());
    w.point = point_from_json(c.at("point"));
    w.origin = c.value("origin", "");
    if (w.kind == descent::Witness::Kind::HomogeneousSpace) {
      w.d = int_from_json(c.at("d"));
      w.M = int_from_json(c.at("M"));
      w.e = int_from_json(c.at("e"));
      w.N = int_from_json(c.at("N"));
    }
    image.entries.push_back(
        {descent::SquareClass::of(int_from_json(c.at("class"))), std::move(w)});
  }
  if (image.size() != j.at("size").get<std::size_t>())
    throw Error(ErrorCode::WitnessInvalid, "recorded image size mismatch");
  return image;
}

}  // namespace

VerificationReport verify_certificate(const json& cert, double precision) {
  VerificationReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  auto guarded = [&](const std::string& step, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(step + ": " + e.what());
    }
  };

  ExactInt n;
  biquadrate::BiquadQuadruple quad;
  bool have_curve = false;
  guarded("quadruple", [&] {
    n = int_from_json(cert.at("n"));
    quad = quadruple_from_json(cert.at("quadruple"));
    if (quad.n != n) fail("quadruple n differs from certificate n");
    for (const auto& pair : cert.at("representations")) {
      ExactInt a = int_from_json(pair.at(0)), b = int_from_json(pair.at(1));
      if (pow(a, 4) + pow(b, 4) != n)
        fail("representation " + to_decimal(a) + ", " + to_decimal(b) +
             " does not sum to n");
    }
    have_curve = n != 0;
  });
  if (!have_curve) return report;
  CurveEn E(n);

  arith::Factorization f;
  bool f_complete = false;
  guarded("factorization", [&] {
    f_complete = cert.at("factorization_complete").get<bool>();
    f = factorization_from_json(cert.at("factorization"), f_complete);
    ExactInt residual = f_complete ? ExactInt(1) : int_from_json(cert.at("unfactored_residual"));
    if (f.product() * residual != abs(n)) fail("factorization does not multiply to n");
    for (const auto& pp : f.primes)
      if (!arith::is_probable_prime(pp.prime))
        fail("factor " + to_decimal(pp.prime) + " is composite");
  });

  int independence = 0;
  guarded("heights", [&] {
    std::vector<RationalPoint> points;
    for (const auto& rec : cert.at("points")) {
      auto P = point_from_json(rec.at("point"));
      if (!curve::on_curve(P, E)) fail("point " + P.to_string() + " off curve");
      points.push_back(P);
    }
    auto gram = heights::gram_determinant(points, E, precision);
    const auto& recorded = cert.at("gram").at("entries");
    double slack = 10 * std::max(gram.entry_error, precision);
    for (std::size_t i = 0; i < gram.size(); ++i)
      for (std::size_t j = 0; j < gram.size(); ++j)
        if (std::fabs(gram.entries[i][j] - recorded.at(i).at(j).get<double>()) >
            slack)
          fail("gram entry (" + std::to_string(i) + "," + std::to_string(j) +
               ") does not reproduce");
    try {
      independence = heights::independence_rank(gram, cert.at("tol").get<double>());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Inconclusive) throw;
    }
    if (independence != cert.at("independence_rank").get<int>())
      fail("independence rank does not reproduce");
  });

  guarded("descent", [&] {
    auto phi = image_from_json(cert.at("phi"));
    auto psi = image_from_json(cert.at("psi"));
    if (phi.curve_n != n) fail("phi image is on the wrong curve");
    if (psi.curve_n != -4 * n) fail("psi image is not on the dual curve");
    descent::verify_image(phi);
    descent::verify_image(psi);
    report.descent_lower = descent::rank_lower_bound(phi, psi);
    if (report.descent_lower != cert.at("descent_lower").get<int>())
      fail("descent bound does not reproduce");
  });

  guarded("root number", [&] {
    const auto& r = cert.at("root_number");
    if (r.is_null()) return;
    ExactInt core = int_from_json(cert.at("fourth_power_free").at("core"));
    parity::RootNumber recomputed =
        r.at("path").get<std::string>() == "factorization"
            ? parity::root_number(core, [&] {
                arith::Factorization cf;
                cf.certified = f.certified;
                for (const auto& pp : f.primes)
                  if (pp.exponent % 4)
                    cf.primes.push_back({pp.prime, pp.exponent % 4});
                cf.value = cf.product();
                return cf;
              }())
            : parity::root_number_by_divisor_law(core);
    if (recomputed.omega != r.at("omega").get<int>())
      fail("root number does not reproduce");
    report.omega = recomputed.omega;
  });

  guarded("bounds", [&] {
    const auto& b = cert.at("bounds");
    report.unconditional_lower = std::max(report.descent_lower, independence);
    report.conditional_lower =
        report.omega ? parity::parity_adjusted_bound(report.unconditional_lower,
                                                     *report.omega)
                           .value
                     : report.unconditional_lower;
    if (f_complete && f.certified)
      report.heuristic_upper = descent::yoshida_upper_bound(
          n, arith::multiply(f, arith::factor(ExactInt(2))));
    if (report.unconditional_lower != b.at("unconditional_lower").get<int>())
      fail("unconditional bound does not reproduce");
    if (report.conditional_lower != b.at("conditional_lower").get<int>())
      fail("conditional bound does not reproduce");
    const auto& upper = b.at("heuristic_upper");
    if (upper.is_null() != !report.heuristic_upper.has_value() ||
        (report.heuristic_upper && upper.get<int>() != *report.heuristic_upper))
      fail("heuristic upper bound does not reproduce");
    if (report.heuristic_upper &&
        report.conditional_lower > *report.heuristic_upper)
      fail("lower bound exceeds heuristic upper bound");
  });
  return report;
}

std::string render_search(const std::vector<biquadrate::SearchHit>& hits,
                          Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::JsonLines:
      for (const auto& hit : hits) {
        json record = bqrank::to_json(hit);
        record["record"] = "search_hit";
        out << record.dump() << "\n";
      }
      break;
    case Format::Csv:
      out << "n,p,q,r,s\n";
      for (const auto& hit : hits) {
        auto quad = hit.quadruple();
        out << to_decimal(hit.n) << ',' << to_decimal(quad.p) << ','
            << to_decimal(quad.q) << ',' << to_decimal(quad.r) << ','
            << to_decimal(quad.s) << "\n";
      }
      break;
    case Format::Table:
      for (const auto& hit : hits) {
        out << to_decimal(hit.n) << " =";
        for (std::size_t i = 0; i < hit.pairs.size(); ++i)
          out << (i ? " =" : "") << " " << hit.pairs[i].first << "^4 + "
              << hit.pairs[i].second << "^4";
        out << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace bqrank::certificate
