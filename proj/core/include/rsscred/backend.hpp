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

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "rsscred/bytes.hpp"
#include "rsscred/random.hpp"

namespace rsscred {

// Identifies a group backend in every serialized artifact so that a key
// produced under one parameter set is never silently read under another.
//
// Wire form: u8 name_len | name | u8 order_len | order (big-endian) |
//            u16 g1_len | u16 g2_len | u16 scalar_len
struct BackendDescriptor {
  std::string name;
  Bytes group_order;
  std::uint16_t g1_encoded_len = 0;
  std::uint16_t g2_encoded_len = 0;
  std::uint16_t scalar_encoded_len = 0;

  bool operator==(const BackendDescriptor&) const = default;

  void encode(ByteWriter& w) const;
  static BackendDescriptor decode(ByteReader& r);
  std::size_t encoded_size() const { return 1 + name.size() + 1 + group_order.size() + 6; }
};

// Throws CompatibilityError unless `found` equals `expected`.
void require_backend(const BackendDescriptor& expected,
                     const BackendDescriptor& found);

template <class S>
concept FieldScalar = std::regular<S> && requires(const S& a, ByteSpan bytes,
                                                  std::uint64_t v) {
  { S::kEncodedSize } -> std::convertible_to<std::size_t>;
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { S::from_u64(v) } -> std::same_as<S>;
  { S::from_wide_bytes(bytes) } -> std::same_as<S>;
  { S::from_bytes(bytes) } -> std::same_as<S>;
  { a + a } -> std::same_as<S>;
  { a - a } -> std::same_as<S>;
  { a * a } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a.inverse() } -> std::same_as<S>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_bytes() };
};

// Additively written prime-order group with scalar multiplication.
template <class E, class S>
concept CurveGroup = std::regular<E> && requires(const E& a, const S& s,
                                                 ByteSpan bytes) {
  { E::kEncodedSize } -> std::convertible_to<std::size_t>;
  { E::identity() } -> std::same_as<E>;
  { E::generator() } -> std::same_as<E>;
  { E::from_bytes(bytes) } -> std::same_as<E>;
  { a + a } -> std::same_as<E>;
  { a - a } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { a * s } -> std::same_as<E>;
  { a.is_identity() } -> std::same_as<bool>;
  { a.to_bytes() };
};

// Multiplicatively written target group.
template <class T, class S>
concept TargetGroup = std::regular<T> && requires(const T& a, const S& s,
                                                  ByteSpan bytes) {
  { T::kEncodedSize } -> std::convertible_to<std::size_t>;
  { T::one() } -> std::same_as<T>;
  { T::from_bytes(bytes) } -> std::same_as<T>;
  { a * a } -> std::same_as<T>;
  { a.pow(s) } -> std::same_as<T>;
  { a.inverse() } -> std::same_as<T>;
  { a.is_one() } -> std::same_as<bool>;
  { a.to_bytes() };
};

// A Type-3 bilinear group: G1, G2, GT of prime order p, scalars in Z_p and
// a non-degenerate bilinear pairing e: G1 x G2 -> GT.
template <class B>
concept PairingBackend =
    FieldScalar<typename B::Scalar> &&
    CurveGroup<typename B::G1, typename B::Scalar> &&
    CurveGroup<typename B::G2, typename B::Scalar> &&
    TargetGroup<typename B::Gt, typename B::Scalar> &&
    requires(const typename B::G1& a, const typename B::G2& b) {
      { B::descriptor() } -> std::same_as<const BackendDescriptor&>;
      { B::pairing(a, b) } -> std::same_as<typename B::Gt>;
    };

namespace detail {
// SHA-512(u32 len(tag) | tag | u32 counter | payload)
std::array<std::uint8_t, 64> tagged_digest(std::string_view tag,
                                           std::uint32_t counter,
                                           ByteSpan payload);
}  // namespace detail

// Extract-and-reduce hash into Z_p^*. The 512-bit digest is reduced mod p;
// a zero result is re-hashed with the next counter value.
template <PairingBackend B>
typename B::Scalar hash_to_scalar(std::string_view domain_tag,
                                  ByteSpan payload) {
  for (std::uint32_t counter = 0;; ++counter) {
    const auto digest = detail::tagged_digest(domain_tag, counter, payload);
    auto s = B::Scalar::from_wide_bytes(digest);
    if (!s.is_zero()) return s;
  }
}

// Uniform over Z_p (64 random bytes reduced mod p; bias < 2^-256 for the
// curve backend).
template <PairingBackend B>
typename B::Scalar random_scalar(RandomSource& rng) {
  std::array<std::uint8_t, 64> wide{};
  rng.fill(wide);
  return B::Scalar::from_wide_bytes(wide);
}

template <PairingBackend B>
typename B::Scalar random_nonzero_scalar(RandomSource& rng) {
  for (;;) {
    auto s = random_scalar<B>(rng);
    if (!s.is_zero()) return s;
  }
}

template <class B>
std::size_t g1_len() {
  return B::descriptor().g1_encoded_len;
}
template <class B>
std::size_t g2_len() {
  return B::descriptor().g2_encoded_len;
}
template <class B>
std::size_t scalar_len() {
  return B::descriptor().scalar_encoded_len;
}

}  // namespace rsscred
