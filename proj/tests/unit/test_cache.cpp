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

#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "doctest.h"

#include "bqrank/cache.hpp"

using namespace bqrank;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name)
      : path(fs::temp_directory_path() / (name + "." + std::to_string(::getpid()))) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

std::size_t line_count(const fs::path& path) {
  std::ifstream in(path);
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) count += !line.empty();
  return count;
}

}  // namespace

TEST_CASE("factorizations persist across cache instances") {
  TempFile file("bqrank_cache_factor");
  ExactInt n = parse_int("75948917104718865094177");
  {
    Cache cache(file.path);
    auto f = cached_factor(n, {}, &cache);
    CHECK(f.product() == n);
    CHECK(cache.factorization_count() == 1);
    cached_factor(n, {}, &cache);
    CHECK(line_count(file.path) == 1);
  }
  Cache reopened(file.path);
  auto hit = reopened.factorization(n);
  REQUIRE(hit);
  CHECK(hit->primes == arith::factor(n).primes);
}

TEST_CASE("search shards are cached and reused") {
  TempFile file("bqrank_cache_search");
  Cache cache(file.path);
  auto first = cached_search({400, 3, 1}, &cache);
  CHECK(cache.shard_count() == 3);
  Cache reopened(file.path);
  CHECK(reopened.shard_count() == 3);
  auto second = cached_search({400, 3, 1}, &reopened);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].n == second[i].n);
  CHECK(line_count(file.path) == 3);
}

TEST_CASE("other versions and torn lines are ignored") {
  TempFile file("bqrank_cache_versions");
  {
    std::ofstream out(file.path);
    out << R"({"version":"0.0.1","kind":"factorization","n":"6","factorization":{"value":"6","primes":[["2",1],["3",1]],"certified":true}})"
        << "\n";
    out << R"({"version":")" << kToolVersion
        << R"(","kind":"factorization","n":"10","factorization":{"value":"10","primes":[["2",1],["5",1]],"certified":true}})"
        << "\n";
    out << R"({"version":")" << kToolVersion << R"(","kind":"factoriz)";
  }
  Cache cache(file.path);
  CHECK(cache.factorization_count() == 1);
  CHECK_FALSE(cache.factorization(ExactInt(6)));
  CHECK(cache.factorization(ExactInt(10)));
}

TEST_CASE("unwritable cache paths raise Io") {
  Cache cache("/nonexistent-dir/for/bqrank/cache.jsonl");
  try {
    cached_factor(ExactInt(91), {}, &cache);
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("appending after a torn line starts a fresh line") {
  TempFile file("bqrank_cache_torn");
  { std::ofstream(file.path) << R"({"version":"x","kind":)"; }
  {
    Cache cache(file.path);
    cached_factor(ExactInt(15), {}, &cache);
  }
  Cache reopened(file.path);
  CHECK(reopened.factorization(ExactInt(15)));
}
