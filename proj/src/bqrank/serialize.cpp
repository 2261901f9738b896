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

#include "bqrank/serialize.hpp"

namespace bqrank {

using nlohmann::json;

ExactInt int_from_json(const json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return ExactInt(j.get<long>());
  throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + j.dump());
}

json to_json(const arith::Factorization& f) {
  json primes = json::array();
  for (const auto& pp : f.primes)
    primes.push_back(json::array({to_decimal(pp.prime), pp.exponent}));
  return {{"value", to_decimal(f.value)},
          {"primes", primes},
          {"certified", f.certified}};
}

arith::Factorization factorization_from_json(const json& j, bool complete) {
  arith::Factorization f;
  f.value = int_from_json(j.at("value"));
  f.sign = f.value < 0 ? -1 : 1;
  f.certified = j.at("certified").get<bool>();
  for (const auto& pp : j.at("primes"))
    f.primes.push_back({int_from_json(pp.at(0)), pp.at(1).get<unsigned>()});
  if (complete && f.product() != abs(f.value))
    throw Error(ErrorCode::InvalidArgument,
                "stored factorization does not multiply out to its value");
  return f;
}

json to_json(const biquadrate::SearchHit& hit) {
  json pairs = json::array();
  for (const auto& [p, q] : hit.pairs) pairs.push_back(json::array({p, q}));
  return {{"n", to_decimal(hit.n)}, {"pairs", pairs}};
}

biquadrate::SearchHit hit_from_json(const json& j) {
  biquadrate::SearchHit hit;
  hit.n = int_from_json(j.at("n"));
  for (const auto& pair : j.at("pairs"))
    hit.pairs.emplace_back(pair.at(0).get<std::uint64_t>(),
                           pair.at(1).get<std::uint64_t>());
  return hit;
}

json to_json(const biquadrate::BiquadQuadruple& quad) {
  return {{"p", to_decimal(quad.p)},         {"q", to_decimal(quad.q)},
          {"r", to_decimal(quad.r)},         {"s", to_decimal(quad.s)},
          {"n", to_decimal(quad.n)},         {"scale", to_decimal(quad.scale)},
          {"primitive", quad.primitive},     {"degenerate", quad.degenerate}};
}

biquadrate::BiquadQuadruple quadruple_from_json(const json& j) {
  auto quad = biquadrate::validate_double_representation(
      int_from_json(j.at("p")), int_from_json(j.at("q")),
      int_from_json(j.at("r")), int_from_json(j.at("s")));
  if (quad.n != int_from_json(j.at("n")))
    throw Error(ErrorCode::NotEqual, "recorded n does not match p^4 + q^4");
  quad.scale = int_from_json(j.value("scale", json("1")));
  return quad;
}

json to_json(const curve::RationalPoint& P) {
  if (P.is_infinity()) return "O";
  return {{"x", to_decimal(P.x())}, {"y", to_decimal(P.y())}};
}

curve::RationalPoint point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "O")
    return curve::RationalPoint::infinity();
  return {parse_rat(j.at("x").get<std::string>()),
          parse_rat(j.at("y").get<std::string>())};
}

}  // namespace bqrank
