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

#include "rsscred/bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "rsscred/bls12_381.hpp"
#include "rsscred/credential.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/mock_backend.hpp"
#include "rsscred/rss.hpp"
#include "rsscred/rss_wire.hpp"

namespace rsscred::bench {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BenchRow summarize(std::string_view category, std::vector<double> samples,
                   std::optional<std::size_t> size) {
  BenchRow row;
  row.category = std::string(category);
  row.size_bytes = size;
  const double n = static_cast<double>(samples.size());
  row.mean_ms = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double sq = 0;
  for (double s : samples) sq += (s - row.mean_ms) * (s - row.mean_ms);
  row.stddev_ms = samples.size() > 1 ? std::sqrt(sq / (n - 1)) : 0.0;
  std::ranges::sort(samples);
  const std::size_t mid = samples.size() / 2;
  row.median_ms = samples.size() % 2 ? samples[mid]
                                     : (samples[mid - 1] + samples[mid]) / 2;
  return row;
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ConfigError("bad number '" + std::string(s) + "'");
  }
  return v;
}

template <class Int>
Int parse_int(std::string_view s) {
  Int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ConfigError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

credential::Credential synthetic_credential(std::uint32_t n, std::mt19937_64& gen) {
  credential::Credential c;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::ostringstream path;
    path << "claim" << std::setw(4) << std::setfill('0') << i;
    c.attributes.push_back({path.str(), "value-" + std::to_string(gen())});
  }
  return c;
}

template <PairingBackend B>
BenchReport run_one(const BenchConfig& config, std::uint32_t n, double ratio,
                    std::uint64_t stream) {
  SeededRandom rng(config.seed ^ (stream * 0x9e3779b97f4a7c15ULL));
  std::mt19937_64 gen(config.seed + stream);

  const auto kept = static_cast<std::uint32_t>(std::clamp<long>(
      std::lround(ratio * n), 1, static_cast<long>(n)));
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 1u);
  std::ranges::shuffle(order, gen);
  order.resize(kept);
  const auto retained = rss::IndexSet::of(order, n);

  const auto cred = synthetic_credential(n, gen);
  const auto messages = credential::encode_attributes<B>(cred);
  rss::Disclosure<B> disclosed;
  for (auto i : retained.indices()) disclosed.emplace(i, messages[i - 1]);

  std::array<std::vector<double>, 5> samples;
  std::array<std::optional<std::size_t>, 5> sizes;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  for (std::size_t it = 0; it < config.warmup + config.iterations; ++it) {
    const bool record = it >= config.warmup;
    std::array<double, 5> t{};

    auto start = Clock::now();
    const auto kp = rss::keygen<B>(n, rng);
    t[0] = elapsed_ms(start);

    start = Clock::now();
    rss::SecretKey<B> sk{random_scalar<B>(rng), random_nonzero_scalar<B>(rng), n};
    const auto sk_bytes = rss::encode(sk);
    t[1] = elapsed_ms(start);

    start = Clock::now();
    const auto sig = rss::sign<B>(kp.sk, messages, rng);
    t[2] = elapsed_ms(start);

    start = Clock::now();
    const auto derived = rss::derive<B>(kp.pk, sig, messages, retained, rng);
    t[3] = elapsed_ms(start);

    if (!config.parallel) {
      start = Clock::now();
      const bool ok = rss::verify<B>(kp.pk, derived, disclosed);
      t[4] = elapsed_ms(start);
      if (!ok) throw InternalError("benchmark: derived signature did not verify");
    } else {
      start = Clock::now();
      std::vector<std::future<bool>> jobs;
      for (unsigned k = 0; k < threads; ++k) {
        jobs.push_back(std::async(std::launch::async, [&] {
          return rss::verify<B>(kp.pk, derived, disclosed);
        }));
      }
      bool ok = true;
      for (auto& j : jobs) ok = j.get() && ok;
      t[4] = elapsed_ms(start) / threads;
      if (!ok) throw InternalError("benchmark: derived signature did not verify");
    }

    if (!record) continue;
    for (std::size_t k = 0; k < 5; ++k) samples[k].push_back(t[k]);
    sizes[0] = rss::encode(kp.pk).size();
    sizes[1] = sk_bytes.size();
    sizes[2] = rss::encode(sig).size();
    sizes[3] = rss::encode(derived).size();
  }

  BenchReport report;
  report.backend = B::descriptor().name;
  report.n = n;
  report.kept = kept;
  report.keep_ratio = ratio;
  report.iterations = config.iterations;
  report.warmup = config.warmup;
  report.parallel = config.parallel;
  report.environment = environment_descriptor();
  for (std::size_t k = 0; k < 5; ++k) {
    report.rows.push_back(summarize(kCategories[k], std::move(samples[k]), sizes[k]));
  }
  return report;
}

}  // namespace

void BenchConfig::validate() const {
  if (iterations == 0) throw ConfigError("iterations must be positive");
  if (iterations < kMinIterations) {
    throw ConfigError("iterations must be at least " +
                      std::to_string(kMinIterations));
  }
  if (message_lengths.empty()) throw ConfigError("no message lengths given");
  if (std::ranges::find(message_lengths, 0u) != message_lengths.end()) {
    throw ConfigError("message length must be >= 1");
  }
  if (keep_ratios.empty()) throw ConfigError("no keep ratios given");
  for (double r : keep_ratios) {
    if (!(r > 0.0 && r <= 1.0)) throw ConfigError("keep ratio must be in (0, 1]");
  }
}

template <PairingBackend B>
std::vector<BenchReport> run_bench(const BenchConfig& config) {
  config.validate();
  std::vector<BenchReport> out;
  std::uint64_t stream = 0;
  for (auto n : config.message_lengths) {
    for (double ratio : config.keep_ratios) {
      out.push_back(run_one<B>(config, n, ratio, stream++));
    }
  }
  return out;
}

template std::vector<BenchReport> run_bench<Bls12381>(const BenchConfig&);
template std::vector<BenchReport> run_bench<MockBackend>(const BenchConfig&);

const BenchRow& BenchReport::row(std::string_view category) const {
  for (const auto& r : rows) {
    if (r.category == category) return r;
  }
  throw std::out_of_range("no benchmark row '" + std::string(category) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ConfigError("unknown format '" + std::string(name) + "'");
}

std::string significant(double value, int digits) {
  if (value == 0 || !std::isfinite(value)) return shortest(value);
  const int exponent = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const double scale = std::pow(10.0, exponent - digits + 1);
  const double rounded = std::round(value / scale) * scale;
  const int decimals = std::max(0, digits - 1 - exponent);
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << rounded;
  return os.str();
}

std::string environment_descriptor() {
  std::ostringstream os;
#if defined(__clang__)
  os << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  os << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#else
  os << "unknown compiler";
#endif
  utsname u{};
  if (uname(&u) == 0) os << "; " << u.sysname << " " << u.release << " " << u.machine;
  os << "; " << std::thread::hardware_concurrency() << " hw threads";
#ifdef NDEBUG
  os << "; optimized build";
#else
  os << "; debug build";
#endif
  return os.str();
}

std::string emit_table(const BenchReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kText: {
      os << "backend: " << report.backend << "  n: " << report.n
         << "  kept: " << report.kept << "  iterations: " << report.iterations
         << "  warm-up: " << report.warmup << "  mode: "
         << (report.parallel ? "parallel verify" : "single-threaded") << "\n";
      os << "environment: " << report.environment << "\n";
      os << std::left << std::setw(22) << "Category" << std::setw(15)
         << "Runtime (ms)" << std::setw(15) << "Std dev (ms)" << "Size (bytes)\n";
      for (const auto& r : report.rows) {
        os << std::left << std::setw(22) << r.category << std::setw(15)
           << significant(r.mean_ms) << std::setw(15) << significant(r.stddev_ms)
           << (r.size_bytes ? std::to_string(*r.size_bytes) : "N/A") << "\n";
      }
      break;
    }
    case Format::kCsv: {
      os << "# backend=" << report.backend << "\n"
         << "# n=" << report.n << "\n"
         << "# kept=" << report.kept << "\n"
         << "# keep_ratio=" << shortest(report.keep_ratio) << "\n"
         << "# iterations=" << report.iterations << "\n"
         << "# warmup=" << report.warmup << "\n"
         << "# parallel=" << (report.parallel ? 1 : 0) << "\n"
         << "# environment=" << report.environment << "\n"
         << "# median_ms=";
      for (std::size_t k = 0; k < report.rows.size(); ++k) {
        os << (k ? ";" : "") << shortest(report.rows[k].median_ms);
      }
      os << "\ncategory,runtime_ms,stddev_ms,size_bytes\n";
      for (const auto& r : report.rows) {
        os << r.category << "," << shortest(r.mean_ms) << ","
           << shortest(r.stddev_ms) << ","
           << (r.size_bytes ? std::to_string(*r.size_bytes) : "") << "\n";
      }
      break;
    }
    case Format::kJson:
      os << to_json(report).dump(2) << "\n";
      break;
  }
  return os.str();
}

std::string emit_tables(std::span<const BenchReport> reports, Format format) {
  if (format == Format::kJson) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (k) out += "\n";
    out += emit_table(reports[k], format);
  }
  return out;
}

nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"category", r.category},
                    {"runtime_ms", r.mean_ms},
                    {"stddev_ms", r.stddev_ms},
                    {"median_ms", r.median_ms},
                    {"size_bytes", r.size_bytes ? nlohmann::json(*r.size_bytes)
                                                : nlohmann::json(nullptr)}});
  }
  return {{"backend", report.backend},       {"n", report.n},
          {"kept", report.kept},             {"keep_ratio", report.keep_ratio},
          {"iterations", report.iterations}, {"warmup", report.warmup},
          {"parallel", report.parallel},     {"environment", report.environment},
          {"rows", std::move(rows)}};
}

BenchReport report_from_json(const nlohmann::json& j) {
  BenchReport report;
  try {
    report.backend = j.at("backend").get<std::string>();
    report.n = j.at("n").get<std::uint32_t>();
    report.kept = j.at("kept").get<std::uint32_t>();
    report.keep_ratio = j.at("keep_ratio").get<double>();
    report.iterations = j.at("iterations").get<std::size_t>();
    report.warmup = j.at("warmup").get<std::size_t>();
    report.parallel = j.at("parallel").get<bool>();
    report.environment = j.at("environment").get<std::string>();
    for (const auto& r : j.at("rows")) {
      BenchRow row;
      row.category = r.at("category").get<std::string>();
      row.mean_ms = r.at("runtime_ms").get<double>();
      row.stddev_ms = r.at("stddev_ms").get<double>();
      row.median_ms = r.at("median_ms").get<double>();
      if (!r.at("size_bytes").is_null()) {
        row.size_bytes = r.at("size_bytes").get<std::size_t>();
      }
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed benchmark report: ") + e.what());
  }
  return report;
}

BenchReport report_from_csv(std::string_view csv) {
  BenchReport report;
  std::vector<double> medians;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    auto eol = csv.find('\n', pos);
    if (eol == std::string_view::npos) eol = csv.size();
    const auto line = csv.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.starts_with("# ")) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ConfigError("bad csv comment");
      const auto key = line.substr(2, eq - 2);
      const auto value = line.substr(eq + 1);
      if (key == "backend") report.backend = std::string(value);
      else if (key == "n") report.n = parse_int<std::uint32_t>(value);
      else if (key == "kept") report.kept = parse_int<std::uint32_t>(value);
      else if (key == "keep_ratio") report.keep_ratio = parse_double(value);
      else if (key == "iterations") report.iterations = parse_int<std::size_t>(value);
      else if (key == "warmup") report.warmup = parse_int<std::size_t>(value);
      else if (key == "parallel") report.parallel = value == "1";
      else if (key == "environment") report.environment = std::string(value);
      else if (key == "median_ms") {
        std::size_t start = 0;
        while (start <= value.size()) {
          auto semi = value.find(';', start);
          if (semi == std::string_view::npos) semi = value.size();
          medians.push_back(parse_double(value.substr(start, semi - start)));
          start = semi + 1;
        }
      }
      continue;
    }
    if (!header_seen) {
      if (line != "category,runtime_ms,stddev_ms,size_bytes") {
        throw ConfigError("unexpected csv header");
      }
      header_seen = true;
      continue;
    }
    std::array<std::string_view, 4> cols;
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      auto comma = k < 3 ? line.find(',', start) : line.size();
      if (comma == std::string_view::npos) throw ConfigError("short csv row");
      cols[k] = line.substr(start, comma - start);
      start = comma + 1;
    }
    BenchRow row;
    row.category = std::string(cols[0]);
    row.mean_ms = parse_double(cols[1]);
    row.stddev_ms = parse_double(cols[2]);
    if (!cols[3].empty()) row.size_bytes = parse_int<std::size_t>(cols[3]);
    report.rows.push_back(std::move(row));
  }
  if (medians.size() != report.rows.size()) {
    throw ConfigError("csv median count does not match row count");
  }
  for (std::size_t k = 0; k < medians.size(); ++k) report.rows[k].median_ms = medians[k];
  return report;
}

}  // namespace rsscred::bench
