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

// Helpers shared by the key and signature byte formats. Every artifact
// starts with an 8-byte ASCII magic followed by the encoded
// BackendDescriptor of the backend that produced it.

#include <algorithm>
#include <string_view>

#include "rsscred/backend.hpp"

namespace rsscred::wire {

inline constexpr std::size_t kMagicSize = 8;

template <PairingBackend B>
void write_header(ByteWriter& w, std::string_view magic) {
  w.raw(magic.substr(0, kMagicSize));
  B::descriptor().encode(w);
}

// Throws DecodeError on a wrong magic and CompatibilityError when the
// artifact was produced by another backend.
template <PairingBackend B>
void read_header(ByteReader& r, std::string_view magic) {
  const auto got = r.take(kMagicSize);
  if (!std::ranges::equal(got, as_bytes(magic.substr(0, kMagicSize)))) {
    throw DecodeError("bad magic: expected '" + std::string(magic) + "'");
  }
  require_backend(B::descriptor(), BackendDescriptor::decode(r));
}

// Reads just the header and returns the descriptor, for dispatching on the
// backend of a file before decoding it.
inline BackendDescriptor peek_backend(ByteSpan bytes, std::string_view magic) {
  ByteReader r(bytes);
  const auto got = r.take(kMagicSize);
  if (!std::ranges::equal(got, as_bytes(magic.substr(0, kMagicSize)))) {
    throw DecodeError("bad magic: expected '" + std::string(magic) + "'");
  }
  return BackendDescriptor::decode(r);
}

template <class E>
void put(ByteWriter& w, const E& e) {
  w.raw(e.to_bytes());
}

template <class E>
E get(ByteReader& r) {
  return E::from_bytes(r.take(E::kEncodedSize));
}

// Element count field that must be at least one and small enough that
// `count * elem_size` bytes can actually follow.
inline std::uint32_t read_count(ByteReader& r, std::size_t elem_size) {
  const std::uint32_t count = r.u32();
  if (count == 0) throw DecodeError("element count is zero");
  if (elem_size != 0 && count > r.remaining() / elem_size) {
    throw DecodeError("element count exceeds input size");
  }
  return count;
}

}  // namespace rsscred::wire
