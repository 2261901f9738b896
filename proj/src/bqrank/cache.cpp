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

#include "bqrank/cache.hpp"

#include <atomic>
#include <fstream>
#include <thread>

#include "json.hpp"

#include "bqrank/serialize.hpp"

namespace bqrank {

const char* const kToolVersion = "0.1.0";

using nlohmann::json;

Cache::Cache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // created on first store
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) continue;
    if (record.value("version", "") != kToolVersion) continue;
    const std::string kind = record.value("kind", "");
    try {
      if (kind == "factorization") {
        auto f = factorization_from_json(record.at("factorization"));
        factorizations_[to_decimal(f.value)] = std::move(f);
      } else if (kind == "search_shard") {
        std::vector<biquadrate::SearchHit> hits;
        for (const auto& h : record.at("hits")) hits.push_back(hit_from_json(h));
        shards_[{record.at("max_base").get<std::uint64_t>(),
                 record.at("shards").get<unsigned>(),
                 record.at("shard").get<unsigned>()}] = std::move(hits);
      }
    } catch (const std::exception&) {
      // A torn trailing line from an interrupted run; skip it.
    }
  }
  std::ifstream tail(path_, std::ios::binary | std::ios::ate);
  if (tail && tail.tellg() > 0) {
    tail.seekg(-1, std::ios::end);
    torn_tail_ = tail.get() != '\n';
  }
}

std::optional<arith::Factorization> Cache::factorization(
    const ExactInt& n) const {
  std::lock_guard lock(mutex_);
  auto it = factorizations_.find(to_decimal(n));
  if (it == factorizations_.end()) return std::nullopt;
  return it->second;
}

void Cache::store(const arith::Factorization& f) {
  json record{{"version", kToolVersion},
              {"kind", "factorization"},
              {"n", to_decimal(f.value)},
              {"factorization", to_json(f)}};
  std::lock_guard lock(mutex_);
  if (factorizations_.count(to_decimal(f.value))) return;
  factorizations_[to_decimal(f.value)] = f;
  append(record.dump());
}

std::optional<std::vector<biquadrate::SearchHit>> Cache::shard(
    std::uint64_t max_base, unsigned shards, unsigned shard) const {
  std::lock_guard lock(mutex_);
  auto it = shards_.find({max_base, shards, shard});
  if (it == shards_.end()) return std::nullopt;
  return it->second;
}

void Cache::store_shard(std::uint64_t max_base, unsigned shards, unsigned shard,
                        const std::vector<biquadrate::SearchHit>& hits) {
  json list = json::array();
  for (const auto& h : hits) list.push_back(to_json(h));
  json record{{"version", kToolVersion}, {"kind", "search_shard"},
              {"max_base", max_base},    {"shards", shards},
              {"shard", shard},          {"hits", list}};
  std::lock_guard lock(mutex_);
  shards_[{max_base, shards, shard}] = hits;
  append(record.dump());
}

std::size_t Cache::factorization_count() const {
  std::lock_guard lock(mutex_);
  return factorizations_.size();
}

std::size_t Cache::shard_count() const {
  std::lock_guard lock(mutex_);
  return shards_.size();
}

void Cache::append(const std::string& line) {
  std::ofstream out(path_, std::ios::app);
  if (!out)
    throw Error(ErrorCode::Io, "cannot append to cache " + path_.string());
  if (torn_tail_) out << '\n';
  out << line << '\n';
  torn_tail_ = false;
  if (!out) throw Error(ErrorCode::Io, "write to cache " + path_.string() + " failed");
}

arith::Factorization cached_factor(const ExactInt& n,
                                   const arith::FactorEffort& effort,
                                   Cache* cache) {
  if (cache != nullptr)
    if (auto hit = cache->factorization(n)) return *hit;
  auto f = arith::factor(n, effort);
  if (cache != nullptr) cache->store(f);
  return f;
}

std::vector<biquadrate::SearchHit> cached_search(
    const biquadrate::SearchOptions& options, Cache* cache) {
  if (cache == nullptr)
    return biquadrate::search_double_representations(options);
  require(options.max_base >= 2, "max_base must be at least 2");
  const unsigned shards = std::max(1u, options.shards);
  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, shards);
  std::vector<std::vector<biquadrate::SearchHit>> parts(shards);
  std::atomic<unsigned> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (unsigned s = next++; s < shards; s = next++) {
        if (auto hit = cache->shard(options.max_base, shards, s)) {
          parts[s] = std::move(*hit);
          continue;
        }
        parts[s] = biquadrate::search_shard(options.max_base, shards, s);
        cache->store_shard(options.max_base, shards, s, parts[s]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return biquadrate::merge_shards(std::move(parts));
}

}  // namespace bqrank
