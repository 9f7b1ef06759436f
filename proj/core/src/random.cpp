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

#include "rsscred/random.hpp"

#include <sodium.h>

#include <algorithm>

#include "rsscred/errors.hpp"
#include "sodium_init.hpp"

namespace rsscred {

OsRandom::OsRandom() { detail::ensure_sodium(); }

void OsRandom::fill(std::span<std::uint8_t> out) {
  randombytes_buf(out.data(), out.size());
}

SeededRandom::SeededRandom(std::uint64_t seed) {
  detail::ensure_sodium();
  std::array<std::uint8_t, 8> seed_bytes{};
  for (int i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
  }
  static constexpr char kLabel[] = "rsscred seeded rng";
  crypto_generichash(key_.data(), key_.size(), seed_bytes.data(),
                     seed_bytes.size(),
                     reinterpret_cast<const unsigned char*>(kLabel),
                     sizeof(kLabel) - 1);
}

void SeededRandom::refill() {
  static constexpr std::array<std::uint8_t, 64> kZero{};
  static constexpr std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES>
      kNonce{};
  if (counter_ == UINT32_MAX) {
    throw InternalError("seeded rng keystream exhausted");
  }
  crypto_stream_chacha20_ietf_xor_ic(block_.data(), kZero.data(), kZero.size(),
                                     kNonce.data(), counter_++, key_.data());
  used_ = 0;
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  std::size_t written = 0;
  while (written < out.size()) {
    if (used_ == block_.size()) refill();
    const std::size_t n = std::min(out.size() - written, block_.size() - used_);
    std::copy_n(block_.begin() + used_, n, out.begin() + written);
    used_ += n;
    written += n;
  }
}

}  // namespace rsscred
