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

#include "doctest.h"
#include "json.hpp"

#include "bqrank/biquadrate.hpp"
#include "bqrank/serialize.hpp"

using namespace bqrank;
using nlohmann::json;

TEST_CASE("factorization round trip keeps big integers as strings") {
  auto f = arith::factor(parse_int("-173329443404113736737"));
  json j = to_json(f);
  CHECK(j.at("value").is_string());
  CHECK(j.at("primes").at(0).at(0).is_string());
  auto back = factorization_from_json(json::parse(j.dump()));
  CHECK(back.value == f.value);
  CHECK(back.sign == -1);
  CHECK(back.primes == f.primes);

  j["value"] = "12";
  CHECK_THROWS_AS(factorization_from_json(j), Error);
}

TEST_CASE("points and quadruples round trip") {
  curve::RationalPoint P(parse_rat("-1/4"), parse_rat("33/8"));
  CHECK(point_from_json(to_json(P)) == P);
  CHECK(point_from_json(to_json(curve::RationalPoint())).is_infinity());
  auto quad = biquadrate::euler_quadruple({3, 2});
  auto back = quadruple_from_json(to_json(quad));
  CHECK(back.n == quad.n);
  CHECK(back.p == quad.p);
  CHECK(back.scale == quad.scale);
  json bad = to_json(quad);
  bad["n"] = "5";
  CHECK_THROWS_AS(quadruple_from_json(bad), Error);
}

TEST_CASE("search hits round trip") {
  auto hits = biquadrate::search_double_representations({300});
  for (const auto& hit : hits) {
    auto back = hit_from_json(json::parse(to_json(hit).dump()));
    CHECK(back.n == hit.n);
    CHECK(back.pairs == hit.pairs);
  }
}

TEST_CASE("integers from json") {
  CHECK(int_from_json(json("123456789012345678901234567890")) ==
        parse_int("123456789012345678901234567890"));
  CHECK(int_from_json(json(-7)) == -7);
  CHECK_THROWS_AS(int_from_json(json(1.5)), Error);
}
