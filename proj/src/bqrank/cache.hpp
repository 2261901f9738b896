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

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bqrank/arith.hpp"
#include "bqrank/biquadrate.hpp"

namespace bqrank {

extern const char* const kToolVersion;

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "BQRANK_CACHE";

/// Append-only JSON-lines cache of factorizations and search shards. Records
/// written by another tool version are ignored on load.
class Cache {
 public:
  explicit Cache(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }

  std::optional<arith::Factorization> factorization(const ExactInt& n) const;
  void store(const arith::Factorization& f);

  std::optional<std::vector<biquadrate::SearchHit>> shard(
      std::uint64_t max_base, unsigned shards, unsigned shard) const;
  void store_shard(std::uint64_t max_base, unsigned shards, unsigned shard,
                   const std::vector<biquadrate::SearchHit>& hits);

  std::size_t factorization_count() const;
  std::size_t shard_count() const;

 private:
  void append(const std::string& line);

  std::filesystem::path path_;
  bool torn_tail_ = false;  // file ends without a newline
  mutable std::mutex mutex_;
  std::map<std::string, arith::Factorization> factorizations_;
  std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
           std::vector<biquadrate::SearchHit>>
      shards_;
};

/// Factor through the cache when one is given.
arith::Factorization cached_factor(const ExactInt& n,
                                   const arith::FactorEffort& effort,
                                   Cache* cache);

/// Sharded search that reuses and records shards in the cache.
std::vector<biquadrate::SearchHit> cached_search(
    const biquadrate::SearchOptions& options, Cache* cache);

}  // namespace bqrank
