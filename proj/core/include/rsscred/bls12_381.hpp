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

// BLS12-381 backend on top of blst.
//
// Encodings (all big-endian):
//   Scalar  32 bytes, canonical (< r)
//   G1      48 bytes, ZCash compressed form (flag bits in the top byte)
//   G2      96 bytes, ZCash compressed form
//   GT     576 bytes, the twelve Fp coefficients in blst's order
// Decoding rejects non-canonical encodings and points outside the
// prime-order subgroups.

#include <blst.h>

#include <array>
#include <cstdint>

#include "rsscred/backend.hpp"

namespace rsscred::bls12_381 {

class Scalar {
 public:
  static constexpr std::size_t kEncodedSize = 32;

  Scalar() : v_{} {}

  static Scalar zero() { return {}; }
  static Scalar one() { return from_u64(1); }
  static Scalar from_u64(std::uint64_t v);
  // Any-length big-endian integer reduced mod r.
  static Scalar from_wide_bytes(ByteSpan bytes);
  static Scalar from_bytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> to_bytes() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool is_zero() const;

  bool operator==(const Scalar& o) const;

  const blst_fr& raw() const { return v_; }

 private:
  blst_fr v_;
};

class G1 {
 public:
  static constexpr std::size_t kEncodedSize = 48;

  G1() : p_{} {}

  static G1 identity() { return {}; }
  static G1 generator();
  static G1 from_bytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> to_bytes() const;

  G1 operator+(const G1& o) const;
  G1 operator-(const G1& o) const;
  G1 operator-() const;
  G1 operator*(const Scalar& s) const;
  bool is_identity() const;

  bool operator==(const G1& o) const;

  const blst_p1& raw() const { return p_; }

 private:
  blst_p1 p_;
};

class G2 {
 public:
  static constexpr std::size_t kEncodedSize = 96;

  G2() : p_{} {}

  static G2 identity() { return {}; }
  static G2 generator();
  static G2 from_bytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> to_bytes() const;

  G2 operator+(const G2& o) const;
  G2 operator-(const G2& o) const;
  G2 operator-() const;
  G2 operator*(const Scalar& s) const;
  bool is_identity() const;

  bool operator==(const G2& o) const;

  const blst_p2& raw() const { return p_; }

 private:
  blst_p2 p_;
};

class Gt {
 public:
  static constexpr std::size_t kEncodedSize = 576;

  Gt();

  static Gt one() { return {}; }
  static Gt from_bytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> to_bytes() const;

  Gt operator*(const Gt& o) const;
  Gt pow(const Scalar& s) const;
  Gt inverse() const;
  bool is_one() const;

  bool operator==(const Gt& o) const;

 private:
  friend struct Backend;
  blst_fp12 f_;
};

struct Backend {
  using Scalar = bls12_381::Scalar;
  using G1 = bls12_381::G1;
  using G2 = bls12_381::G2;
  using Gt = bls12_381::Gt;

  static const BackendDescriptor& descriptor();
  static Gt pairing(const G1& a, const G2& b);
};

}  // namespace rsscred::bls12_381

namespace rsscred {
using Bls12381 = bls12_381::Backend;
static_assert(PairingBackend<Bls12381>);
}  // namespace rsscred
