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

// Exponent-tracking mock backend.
//
// Every group element is represented by its discrete logarithm with respect
// to a fixed generator, over the prime p = 2^61 - 1. The group law adds
// logarithms, scalar multiplication multiplies them and the pairing
// multiplies the logarithms of its two arguments. This makes every protocol
// equation checkable with plain integer arithmetic. It offers no security.
//
// Encodings: every scalar and element is its value as 8 big-endian bytes,
// strictly less than p.

#include <array>
#include <cstdint>

#include "rsscred/backend.hpp"

namespace rsscred::mock {

inline constexpr std::uint64_t kOrder = (std::uint64_t{1} << 61) - 1;

namespace detail {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;  // < 2^62, no overflow
  return s >= kOrder ? s - kOrder : s;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % kOrder);
}

inline std::uint64_t neg_mod(std::uint64_t a) { return a == 0 ? 0 : kOrder - a; }

std::array<std::uint8_t, 8> encode_u64(std::uint64_t v);
std::uint64_t decode_reduced_u64(ByteSpan bytes, const char* what);

}  // namespace detail

class Scalar {
 public:
  static constexpr std::size_t kEncodedSize = 8;

  constexpr Scalar() = default;

  static Scalar zero() { return {}; }
  static Scalar one() { return from_u64(1); }
  static Scalar from_u64(std::uint64_t v) { return Scalar(v % kOrder); }
  static Scalar from_wide_bytes(ByteSpan bytes);
  static Scalar from_bytes(ByteSpan bytes) {
    return Scalar(detail::decode_reduced_u64(bytes, "scalar"));
  }

  std::array<std::uint8_t, kEncodedSize> to_bytes() const {
    return detail::encode_u64(v_);
  }

  Scalar operator+(const Scalar& o) const { return Scalar(detail::add_mod(v_, o.v_)); }
  Scalar operator-(const Scalar& o) const {
    return Scalar(detail::add_mod(v_, detail::neg_mod(o.v_)));
  }
  Scalar operator*(const Scalar& o) const { return Scalar(detail::mul_mod(v_, o.v_)); }
  Scalar operator-() const { return Scalar(detail::neg_mod(v_)); }
  Scalar inverse() const;
  bool is_zero() const { return v_ == 0; }

  bool operator==(const Scalar&) const = default;

  std::uint64_t value() const { return v_; }

 private:
  explicit constexpr Scalar(std::uint64_t v) : v_(v) {}
  std::uint64_t v_ = 0;
};

// G1 and G2 share a representation but are distinct types.
template <int Tag>
class Element {
 public:
  static constexpr std::size_t kEncodedSize = 8;

  constexpr Element() = default;

  static Element identity() { return {}; }
  static Element generator() { return Element(1); }
  static Element from_log(std::uint64_t log) { return Element(log % kOrder); }
  static Element from_bytes(ByteSpan bytes) {
    return Element(detail::decode_reduced_u64(bytes, "group element"));
  }

  std::array<std::uint8_t, kEncodedSize> to_bytes() const {
    return detail::encode_u64(log_);
  }

  Element operator+(const Element& o) const {
    return Element(detail::add_mod(log_, o.log_));
  }
  Element operator-(const Element& o) const {
    return Element(detail::add_mod(log_, detail::neg_mod(o.log_)));
  }
  Element operator-() const { return Element(detail::neg_mod(log_)); }
  Element operator*(const Scalar& s) const {
    return Element(detail::mul_mod(log_, s.value()));
  }
  bool is_identity() const { return log_ == 0; }

  bool operator==(const Element&) const = default;

  // Discrete logarithm to the generator.
  std::uint64_t log() const { return log_; }

 private:
  explicit constexpr Element(std::uint64_t log) : log_(log) {}
  std::uint64_t log_ = 0;
};

using G1 = Element<1>;
using G2 = Element<2>;

class Gt {
 public:
  static constexpr std::size_t kEncodedSize = 8;

  constexpr Gt() = default;

  static Gt one() { return {}; }
  static Gt from_log(std::uint64_t log) { return Gt(log % kOrder); }
  static Gt from_bytes(ByteSpan bytes) {
    return Gt(detail::decode_reduced_u64(bytes, "GT element"));
  }

  std::array<std::uint8_t, kEncodedSize> to_bytes() const {
    return detail::encode_u64(log_);
  }

  Gt operator*(const Gt& o) const { return Gt(detail::add_mod(log_, o.log_)); }
  Gt pow(const Scalar& s) const { return Gt(detail::mul_mod(log_, s.value())); }
  Gt inverse() const { return Gt(detail::neg_mod(log_)); }
  bool is_one() const { return log_ == 0; }

  bool operator==(const Gt&) const = default;

  // Discrete logarithm to e(g1, g2) for the fixed generators.
  std::uint64_t log() const { return log_; }

 private:
  explicit constexpr Gt(std::uint64_t log) : log_(log) {}
  std::uint64_t log_ = 0;
};

struct Backend {
  using Scalar = mock::Scalar;
  using G1 = mock::G1;
  using G2 = mock::G2;
  using Gt = mock::Gt;

  static const BackendDescriptor& descriptor();
  static Gt pairing(const G1& a, const G2& b) {
    return Gt::from_log(detail::mul_mod(a.log(), b.log()));
  }
};

}  // namespace rsscred::mock

namespace rsscred {
using MockBackend = mock::Backend;
static_assert(PairingBackend<MockBackend>);
}  // namespace rsscred
