// Copyright 2026 The rsscred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Measurement harness producing the five-row runtime/size table for the
// redactable signature: public key, private key, signature, derived
// signature and verification. Runtimes are wall-clock milliseconds from a
// monotonic clock around each operation; sizes are the lengths of the
// serialized artifacts.
//
//   public key           rss::keygen (secret sampling + all key powers)
//   private key          sampling (x, y) and serializing the secret key
//   signature            rss::sign on the full attribute vector
//   derived signature    rss::derive for the configured keep-set
//   verifying signature  rss::verify of the derived signature (size N/A)

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsscred/backend.hpp"

namespace rsscred::bench {

inline constexpr std::array<std::string_view, 5> kCategories = {
    "public key", "private key", "signature", "derived signature",
    "verifying signature"};

inline constexpr std::size_t kMinIterations = 30;

struct BenchConfig {
  std::vector<std::uint32_t> message_lengths{5};
  // Fraction of attributes kept, in (0, 1]. The kept count is
  // round(ratio * n) clamped to [1, n].
  std::vector<double> keep_ratios{0.4};
  std::size_t iterations = kMinIterations;
  std::size_t warmup = 3;
  std::uint64_t seed = 1;
  // Verification batches spread over all hardware threads; the row then
  // reports amortized per-verification time.
  bool parallel = false;

  // Throws ConfigError.
  void validate() const;
};

struct BenchRow {
  std::string category;
  double mean_ms = 0;
  double stddev_ms = 0;
  double median_ms = 0;
  std::optional<std::size_t> size_bytes;

  bool operator==(const BenchRow&) const = default;
};

struct BenchReport {
  std::string backend;
  std::uint32_t n = 0;
  std::uint32_t kept = 0;
  double keep_ratio = 0;
  std::size_t iterations = 0;
  std::size_t warmup = 0;
  bool parallel = false;
  std::string environment;
  std::vector<BenchRow> rows;

  // Throws std::out_of_range for an unknown category.
  const BenchRow& row(std::string_view category) const;

  bool operator==(const BenchReport&) const = default;
};

// One report per (n, keep ratio) pair, in config order.
template <PairingBackend B>
std::vector<BenchReport> run_bench(const BenchConfig& config);

enum class Format { kText, kCsv, kJson };

// Throws ConfigError for an unknown name.
Format parse_format(std::string_view name);

std::string emit_table(const BenchReport& report, Format format);
// Text and CSV tables are separated by a blank line; JSON is an array.
std::string emit_tables(std::span<const BenchReport> reports, Format format);

nlohmann::json to_json(const BenchReport& report);
BenchReport report_from_json(const nlohmann::json& j);
BenchReport report_from_csv(std::string_view csv);

// Compiler, OS, CPU count and build type of this binary.
std::string environment_descriptor();

// `value` rounded to `digits` significant figures, as text.
std::string significant(double value, int digits = 2);

}  // namespace rsscred::bench
