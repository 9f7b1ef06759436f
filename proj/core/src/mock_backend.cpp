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

#include "rsscred/mock_backend.hpp"

namespace rsscred::mock {
namespace detail {

std::array<std::uint8_t, 8> encode_u64(std::uint64_t v) {
  std::array<std::uint8_t, 8> out{};
  for (int i = 0; i < 8; ++i) {
    out[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
  }
  return out;
}

std::uint64_t decode_reduced_u64(ByteSpan bytes, const char* what) {
  if (bytes.size() != 8) {
    throw DecodeError(std::string("mock ") + what + ": expected 8 bytes");
  }
  std::uint64_t v = 0;
  for (auto b : bytes) v = (v << 8) | b;
  if (v >= kOrder) {
    throw DecodeError(std::string("mock ") + what + ": value not below p");
  }
  return v;
}

}  // namespace detail

Scalar Scalar::from_wide_bytes(ByteSpan bytes) {
  std::uint64_t acc = 0;
  for (auto b : bytes) {
    acc = static_cast<std::uint64_t>(
        ((static_cast<detail::u128>(acc) << 8) | b) % kOrder);
  }
  return Scalar(acc);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidParameter("inverse of zero scalar");
  // Fermat: v^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = v_;
  for (std::uint64_t e = kOrder - 2; e != 0; e >>= 1) {
    if (e & 1) result = detail::mul_mod(result, base);
    base = detail::mul_mod(base, base);
  }
  return Scalar(result);
}

const BackendDescriptor& Backend::descriptor() {
  static const BackendDescriptor d{"mock-exp-p61",
                                   from_hex("1fffffffffffffff"), 8, 8, 8};
  return d;
}

}  // namespace rsscred::mock
