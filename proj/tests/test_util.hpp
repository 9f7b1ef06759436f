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

// Shared helpers for the test binaries.

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "rsscred/bls12_381.hpp"
#include "rsscred/mock_backend.hpp"

namespace rsscred::testing {

using Backends = ::testing::Types<MockBackend, Bls12381>;

struct BackendNames {
  template <class B>
  static std::string GetName(int) {
    return B::descriptor().name == "bls12-381" ? "Bls12381" : "Mock";
  }
};

// All non-empty subsets of [1, n] as sorted index lists.
inline std::vector<std::vector<std::uint32_t>> all_subsets(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Uniform non-empty subset of [1, n].
inline std::vector<std::uint32_t> random_subset(std::uint32_t n, std::mt19937_64& gen) {
  for (;;) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (gen() & 1) s.push_back(i);
    }
    if (!s.empty()) return s;
  }
}

}  // namespace rsscred::testing
