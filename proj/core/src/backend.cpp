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

#include "rsscred/backend.hpp"

#include <sodium.h>

#include "sodium_init.hpp"

namespace rsscred {

void BackendDescriptor::encode(ByteWriter& w) const {
  w.u8(static_cast<std::uint8_t>(name.size()));
  w.raw(name);
  w.u8(static_cast<std::uint8_t>(group_order.size()));
  w.raw(group_order);
  w.u16(g1_encoded_len);
  w.u16(g2_encoded_len);
  w.u16(scalar_encoded_len);
}

BackendDescriptor BackendDescriptor::decode(ByteReader& r) {
  BackendDescriptor d;
  auto name = r.take(r.u8());
  d.name.assign(name.begin(), name.end());
  auto order = r.take(r.u8());
  d.group_order.assign(order.begin(), order.end());
  d.g1_encoded_len = r.u16();
  d.g2_encoded_len = r.u16();
  d.scalar_encoded_len = r.u16();
  return d;
}

void require_backend(const BackendDescriptor& expected,
                     const BackendDescriptor& found) {
  if (!(expected == found)) {
    throw CompatibilityError("backend mismatch: expected '" + expected.name +
                             "', found '" + found.name + "'");
  }
}

namespace detail {

std::array<std::uint8_t, 64> tagged_digest(std::string_view tag,
                                           std::uint32_t counter,
                                           ByteSpan payload) {
  ensure_sodium();
  ByteWriter prefix;
  prefix.u32(static_cast<std::uint32_t>(tag.size()));
  prefix.raw(tag);
  prefix.u32(counter);

  crypto_hash_sha512_state st;
  crypto_hash_sha512_init(&st);
  crypto_hash_sha512_update(&st, prefix.bytes().data(), prefix.bytes().size());
  crypto_hash_sha512_update(&st, payload.data(), payload.size());
  std::array<std::uint8_t, 64> out{};
  crypto_hash_sha512_final(&st, out.data());
  return out;
}

}  // namespace detail
}  // namespace rsscred
