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

// Byte formats for redactable-signature keys and signatures. All integers
// are big-endian; `header` is the backend descriptor from wire.hpp.
//
//   public key  "RSS-PUB1" | header | u32 n | u8 len | hash_id |
//               g1 | g2 | Y_1..Y_n | Y_{n+2}..Y_{2n} | X' | Y'_1..Y'_n
//   secret key  "RSS-SEC1" | header | u32 n | x | y
//   signature   "RSS-SIG1" | header | u32 n | s1 | s2 | s3 | s~
//
// Sizes, with h = header length and |G1|, |G2|, |Zp| the element lengths:
//   public key  8 + h + 4 + 1 + len(hash_id) + 2n|G1| + (n+2)|G2|
//   secret key  8 + h + 4 + 2|Zp|
//   signature   8 + h + 4 + 3|G1| + |G2|             (independent of n)

#include "rsscred/rss.hpp"
#include "rsscred/wire.hpp"

namespace rsscred::rss {

inline constexpr std::string_view kPublicKeyMagic = "RSS-PUB1";
inline constexpr std::string_view kSecretKeyMagic = "RSS-SEC1";
inline constexpr std::string_view kSignatureMagic = "RSS-SIG1";

template <PairingBackend B>
Bytes encode(const PublicKey<B>& pk) {
  if (pk.hash_id.size() > 255) throw InvalidParameter("hash_id longer than 255");
  ByteWriter w;
  wire::write_header<B>(w, kPublicKeyMagic);
  w.u32(pk.n);
  w.u8(static_cast<std::uint8_t>(pk.hash_id.size()));
  w.raw(pk.hash_id);
  wire::put(w, pk.g1);
  wire::put(w, pk.g2);
  for (const auto& e : pk.y_g1) wire::put(w, e);
  wire::put(w, pk.x_g2);
  for (const auto& e : pk.y_g2) wire::put(w, e);
  return std::move(w).take();
}

template <PairingBackend B>
Bytes encode(const SecretKey<B>& sk) {
  ByteWriter w;
  wire::write_header<B>(w, kSecretKeyMagic);
  w.u32(sk.n);
  wire::put(w, sk.x);
  wire::put(w, sk.y);
  return std::move(w).take();
}

template <PairingBackend B>
Bytes encode(const Signature<B>& sig) {
  ByteWriter w;
  wire::write_header<B>(w, kSignatureMagic);
  w.u32(sig.n);
  wire::put(w, sig.sigma1);
  wire::put(w, sig.sigma2);
  wire::put(w, sig.sigma3);
  wire::put(w, sig.sigma_tilde);
  return std::move(w).take();
}

template <PairingBackend B>
PublicKey<B> decode_public_key(ByteSpan bytes) {
  ByteReader r(bytes);
  wire::read_header<B>(r, kPublicKeyMagic);
  PublicKey<B> pk;
  pk.n = wire::read_count(r, 2 * B::G1::kEncodedSize + B::G2::kEncodedSize);
  const auto id = r.take(r.u8());
  pk.hash_id.assign(id.begin(), id.end());
  pk.g1 = wire::get<typename B::G1>(r);
  pk.g2 = wire::get<typename B::G2>(r);
  pk.y_g1.reserve(2 * pk.n - 1);
  for (std::uint32_t k = 0; k + 1 < 2 * pk.n; ++k) {
    pk.y_g1.push_back(wire::get<typename B::G1>(r));
  }
  pk.x_g2 = wire::get<typename B::G2>(r);
  pk.y_g2.reserve(pk.n);
  for (std::uint32_t k = 0; k < pk.n; ++k) {
    pk.y_g2.push_back(wire::get<typename B::G2>(r));
  }
  r.expect_end();
  if (pk.g1.is_identity() || pk.g2.is_identity()) {
    throw DecodeError("rss public key: identity base element");
  }
  return pk;
}

template <PairingBackend B>
SecretKey<B> decode_secret_key(ByteSpan bytes) {
  ByteReader r(bytes);
  wire::read_header<B>(r, kSecretKeyMagic);
  SecretKey<B> sk;
  sk.n = r.u32();
  if (sk.n == 0) throw DecodeError("rss secret key: n is zero");
  sk.x = wire::get<typename B::Scalar>(r);
  sk.y = wire::get<typename B::Scalar>(r);
  r.expect_end();
  if (sk.y.is_zero()) throw DecodeError("rss secret key: y is zero");
  return sk;
}

template <PairingBackend B>
Signature<B> decode_signature(ByteSpan bytes) {
  ByteReader r(bytes);
  wire::read_header<B>(r, kSignatureMagic);
  Signature<B> sig;
  sig.n = r.u32();
  if (sig.n == 0) throw DecodeError("rss signature: n is zero");
  sig.sigma1 = wire::get<typename B::G1>(r);
  sig.sigma2 = wire::get<typename B::G1>(r);
  sig.sigma3 = wire::get<typename B::G1>(r);
  sig.sigma_tilde = wire::get<typename B::G2>(r);
  r.expect_end();
  return sig;
}

template <PairingBackend B>
std::size_t signature_size(const Signature<B>& sig) {
  return encode(sig).size();
}

template <PairingBackend B>
std::size_t public_key_size(const PublicKey<B>& pk) {
  return encode(pk).size();
}

template <PairingBackend B>
std::size_t secret_key_size(const SecretKey<B>& sk) {
  return encode(sk).size();
}

}  // namespace rsscred::rss
