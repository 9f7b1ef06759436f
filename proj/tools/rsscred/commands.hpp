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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rsscred::cli {

struct GlobalOptions {
  bool json = false;
  // Only settable in builds with RSSCRED_TEST_FEATURES.
  std::optional<std::uint64_t> seed;
};

struct KeygenOptions {
  std::uint32_t attributes = 0;
  std::optional<std::filesystem::path> out;
  std::string backend = "bls12-381";
};

struct IssueOptions {
  std::optional<std::filesystem::path> key;
  std::filesystem::path credential;
  std::filesystem::path out;
};

struct RedactOptions {
  std::filesystem::path pub;
  std::filesystem::path credential;
  std::filesystem::path sig;
  std::vector<std::string> keep;
  std::filesystem::path out;
};

struct VerifyOptions {
  std::filesystem::path pub;
  std::filesystem::path redacted;
};

struct BenchOptions {
  std::vector<std::uint32_t> n{5};
  std::vector<double> keep_ratio{0.4};
  std::size_t iterations = 30;
  std::size_t warmup = 3;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool parallel = false;
  std::string backend = "bls12-381";
};

// Each returns the process exit code. Failures are reported on stderr, or
// as a single JSON object on stdout in --json mode.
int run_keygen(const GlobalOptions& g, const KeygenOptions& o);
int run_issue(const GlobalOptions& g, const IssueOptions& o);
int run_redact(const GlobalOptions& g, const RedactOptions& o);
int run_verify(const GlobalOptions& g, const VerifyOptions& o);
int run_bench(const GlobalOptions& g, const BenchOptions& o);

}  // namespace rsscred::cli
