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

// Pointcheval-Sanders multi-message signatures over a Type-3 pairing.
//
//   keygen:  g2 <- G2, (x, y_1..y_r) <- Z_p
//            pk = (g2, g2*x, g2*y_1, ..., g2*y_r), sk = (x, y_1..y_r)
//   sign:    h <- G1 \ {0},  sigma = (h, h*(x + sum y_j*m_j))
//   verify:  sigma1 != 0 and e(sigma1, X + sum m_j*Y_j) == e(sigma2, g2)
//
// Byte formats (big-endian, see wire.hpp for the header):
//   public key   "PS-PUBK1" | header | u32 r | g2 | X | Y_1..Y_r
//   secret key   "PS-SECK1" | header | u32 r | x | y_1..y_r
//   signature    "PS-SIG01" | header | sigma1 | sigma2

#include <cstdint>
#include <span>
#include <vector>

#include "rsscred/backend.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/wire.hpp"

namespace rsscred::ps {

inline constexpr std::string_view kPublicKeyMagic = "PS-PUBK1";
inline constexpr std::string_view kSecretKeyMagic = "PS-SECK1";
inline constexpr std::string_view kSignatureMagic = "PS-SIG01";

template <PairingBackend B>
struct SecretKey {
  typename B::Scalar x;
  std::vector<typename B::Scalar> y;

  bool operator==(const SecretKey&) const = default;
};

template <PairingBackend B>
struct PublicKey {
  typename B::G2 g2;
  typename B::G2 x;
  std::vector<typename B::G2> y;

  std::size_t message_count() const { return y.size(); }
  bool operator==(const PublicKey&) const = default;
};

template <PairingBackend B>
struct Signature {
  typename B::G1 sigma1;
  typename B::G1 sigma2;

  bool operator==(const Signature&) const = default;
};

template <PairingBackend B>
struct KeyPair {
  SecretKey<B> sk;
  PublicKey<B> pk;
};

// Key pair for explicitly chosen secrets. `g2` must not be the identity.
template <PairingBackend B>
KeyPair<B> keygen_from(const typename B::Scalar& x,
                       std::vector<typename B::Scalar> y,
                       const typename B::G2& g2) {
  if (y.empty()) throw InvalidParameter("ps keygen: message count must be >= 1");
  if (g2.is_identity()) throw InvalidParameter("ps keygen: identity G2 base");
  KeyPair<B> kp;
  kp.pk.g2 = g2;
  kp.pk.x = g2 * x;
  kp.pk.y.reserve(y.size());
  for (const auto& yj : y) kp.pk.y.push_back(g2 * yj);
  kp.sk.x = x;
  kp.sk.y = std::move(y);
  return kp;
}

template <PairingBackend B>
KeyPair<B> keygen(std::size_t message_count, RandomSource& rng) {
  if (message_count == 0) {
    throw InvalidParameter("ps keygen: message count must be >= 1");
  }
  const auto g2 = B::G2::generator() * random_nonzero_scalar<B>(rng);
  const auto x = random_scalar<B>(rng);
  std::vector<typename B::Scalar> y;
  y.reserve(message_count);
  for (std::size_t j = 0; j < message_count; ++j) {
    y.push_back(random_scalar<B>(rng));
  }
  return keygen_from<B>(x, std::move(y), g2);
}

// Deterministic signing with a caller-chosen first component.
template <PairingBackend B>
Signature<B> sign_with_base(const SecretKey<B>& sk,
                            std::span<const typename B::Scalar> messages,
                            const typename B::G1& h) {
  if (messages.size() != sk.y.size()) {
    throw InvalidParameter("ps sign: expected " + std::to_string(sk.y.size()) +
                           " messages, got " + std::to_string(messages.size()));
  }
  auto exponent = sk.x;
  for (std::size_t j = 0; j < messages.size(); ++j) {
    exponent = exponent + sk.y[j] * messages[j];
  }
  return {h, h * exponent};
}

template <PairingBackend B>
Signature<B> sign(const SecretKey<B>& sk,
                  std::span<const typename B::Scalar> messages,
                  RandomSource& rng) {
  typename B::G1 h;
  do {
    h = B::G1::generator() * random_scalar<B>(rng);
  } while (h.is_identity());
  return sign_with_base<B>(sk, messages, h);
}

template <PairingBackend B>
bool verify(const PublicKey<B>& pk,
            std::span<const typename B::Scalar> messages,
            const Signature<B>& sig) {
  if (messages.size() != pk.y.size()) {
    throw InvalidParameter("ps verify: expected " + std::to_string(pk.y.size()) +
                           " messages, got " + std::to_string(messages.size()));
  }
  if (sig.sigma1.is_identity()) return false;
  auto aggregate = pk.x;
  for (std::size_t j = 0; j < messages.size(); ++j) {
    aggregate = aggregate + pk.y[j] * messages[j];
  }
  return B::pairing(sig.sigma1, aggregate) == B::pairing(sig.sigma2, pk.g2);
}

// Re-randomization: (sigma1*s, sigma2*s) is a fresh-looking signature on
// the same messages.
template <PairingBackend B>
Signature<B> rerandomize(const Signature<B>& sig, RandomSource& rng) {
  const auto s = random_nonzero_scalar<B>(rng);
  return {sig.sigma1 * s, sig.sigma2 * s};
}

// --- byte formats -----------------------------------------------------------

template <PairingBackend B>
Bytes encode(const PublicKey<B>& pk) {
  ByteWriter w;
  wire::write_header<B>(w, kPublicKeyMagic);
  w.u32(static_cast<std::uint32_t>(pk.y.size()));
  wire::put(w, pk.g2);
  wire::put(w, pk.x);
  for (const auto& yj : pk.y) wire::put(w, yj);
  return std::move(w).take();
}

template <PairingBackend B>
Bytes encode(const SecretKey<B>& sk) {
  ByteWriter w;
  wire::write_header<B>(w, kSecretKeyMagic);
  w.u32(static_cast<std::uint32_t>(sk.y.size()));
  wire::put(w, sk.x);
  for (const auto& yj : sk.y) wire::put(w, yj);
  return std::move(w).take();
}

template <PairingBackend B>
Bytes encode(const Signature<B>& sig) {
  ByteWriter w;
  wire::write_header<B>(w, kSignatureMagic);
  wire::put(w, sig.sigma1);
  wire::put(w, sig.sigma2);
  return std::move(w).take();
}

template <PairingBackend B>
PublicKey<B> decode_public_key(ByteSpan bytes) {
  ByteReader r(bytes);
  wire::read_header<B>(r, kPublicKeyMagic);
  const auto count = wire::read_count(r, B::G2::kEncodedSize);
  PublicKey<B> pk;
  pk.g2 = wire::get<typename B::G2>(r);
  pk.x = wire::get<typename B::G2>(r);
  pk.y.reserve(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    pk.y.push_back(wire::get<typename B::G2>(r));
  }
  r.expect_end();
  if (pk.g2.is_identity()) throw DecodeError("ps public key: identity G2 base");
  return pk;
}

template <PairingBackend B>
SecretKey<B> decode_secret_key(ByteSpan bytes) {
  ByteReader r(bytes);
  wire::read_header<B>(r, kSecretKeyMagic);
  const auto count = wire::read_count(r, B::Scalar::kEncodedSize);
  SecretKey<B> sk;
  sk.x = wire::get<typename B::Scalar>(r);
  sk.y.reserve(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    sk.y.push_back(wire::get<typename B::Scalar>(r));
  }
  r.expect_end();
  return sk;
}

template <PairingBackend B>
Signature<B> decode_signature(ByteSpan bytes) {
  ByteReader r(bytes);
  wire::read_header<B>(r, kSignatureMagic);
  Signature<B> sig;
  sig.sigma1 = wire::get<typename B::G1>(r);
  sig.sigma2 = wire::get<typename B::G1>(r);
  r.expect_end();
  return sig;
}

}  // namespace rsscred::ps
