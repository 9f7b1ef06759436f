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

#include "rsscred/bls12_381.hpp"

#include <algorithm>

namespace rsscred::bls12_381 {
namespace {

constexpr std::size_t kScalarBits = 255;

blst_scalar to_blst_scalar(const blst_fr& v) {
  blst_scalar s;
  blst_scalar_from_fr(&s, &v);
  return s;
}

void require_size(ByteSpan bytes, std::size_t want, const char* what) {
  if (bytes.size() != want) {
    throw DecodeError(std::string(what) + ": expected " + std::to_string(want) +
                      " bytes, got " + std::to_string(bytes.size()));
  }
}

}  // namespace

// --- Scalar ---------------------------------------------------------------

Scalar Scalar::from_u64(std::uint64_t v) {
  const std::uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar out;
  blst_fr_from_uint64(&out.v_, limbs);
  return out;
}

Scalar Scalar::from_wide_bytes(ByteSpan bytes) {
  blst_scalar s;
  blst_scalar_from_be_bytes(&s, bytes.data(), bytes.size());
  Scalar out;
  blst_fr_from_scalar(&out.v_, &s);
  return out;
}

Scalar Scalar::from_bytes(ByteSpan bytes) {
  require_size(bytes, kEncodedSize, "scalar");
  blst_scalar s;
  blst_scalar_from_bendian(&s, bytes.data());
  if (!blst_scalar_fr_check(&s)) {
    throw DecodeError("scalar: not reduced mod r");
  }
  Scalar out;
  blst_fr_from_scalar(&out.v_, &s);
  return out;
}

std::array<std::uint8_t, Scalar::kEncodedSize> Scalar::to_bytes() const {
  std::array<std::uint8_t, kEncodedSize> out{};
  const auto s = to_blst_scalar(v_);
  blst_bendian_from_scalar(out.data(), &s);
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar out;
  blst_fr_add(&out.v_, &v_, &o.v_);
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar out;
  blst_fr_sub(&out.v_, &v_, &o.v_);
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar out;
  blst_fr_mul(&out.v_, &v_, &o.v_);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  blst_fr_cneg(&out.v_, &v_, true);
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidParameter("inverse of zero scalar");
  Scalar out;
  blst_fr_eucl_inverse(&out.v_, &v_);
  return out;
}

bool Scalar::is_zero() const { return *this == Scalar{}; }

bool Scalar::operator==(const Scalar& o) const {
  return to_bytes() == o.to_bytes();
}

// --- G1 -------------------------------------------------------------------

G1 G1::generator() {
  G1 out;
  out.p_ = *blst_p1_generator();
  return out;
}

G1 G1::from_bytes(ByteSpan bytes) {
  require_size(bytes, kEncodedSize, "G1");
  blst_p1_affine aff;
  if (blst_p1_uncompress(&aff, bytes.data()) != BLST_SUCCESS) {
    throw DecodeError("G1: invalid point encoding");
  }
  if (!blst_p1_affine_in_g1(&aff)) {
    throw DecodeError("G1: point not in prime-order subgroup");
  }
  G1 out;
  blst_p1_from_affine(&out.p_, &aff);
  return out;
}

std::array<std::uint8_t, G1::kEncodedSize> G1::to_bytes() const {
  std::array<std::uint8_t, kEncodedSize> out{};
  blst_p1_compress(out.data(), &p_);
  return out;
}

G1 G1::operator+(const G1& o) const {
  G1 out;
  blst_p1_add_or_double(&out.p_, &p_, &o.p_);
  return out;
}

G1 G1::operator-() const {
  G1 out = *this;
  blst_p1_cneg(&out.p_, true);
  return out;
}

G1 G1::operator-(const G1& o) const { return *this + (-o); }

G1 G1::operator*(const Scalar& s) const {
  const auto k = to_blst_scalar(s.raw());
  G1 out;
  blst_p1_mult(&out.p_, &p_, k.b, kScalarBits);
  return out;
}

bool G1::is_identity() const { return blst_p1_is_inf(&p_); }

bool G1::operator==(const G1& o) const { return blst_p1_is_equal(&p_, &o.p_); }

// --- G2 -------------------------------------------------------------------

G2 G2::generator() {
  G2 out;
  out.p_ = *blst_p2_generator();
  return out;
}

G2 G2::from_bytes(ByteSpan bytes) {
  require_size(bytes, kEncodedSize, "G2");
  blst_p2_affine aff;
  if (blst_p2_uncompress(&aff, bytes.data()) != BLST_SUCCESS) {
    throw DecodeError("G2: invalid point encoding");
  }
  if (!blst_p2_affine_in_g2(&aff)) {
    throw DecodeError("G2: point not in prime-order subgroup");
  }
  G2 out;
  blst_p2_from_affine(&out.p_, &aff);
  return out;
}

std::array<std::uint8_t, G2::kEncodedSize> G2::to_bytes() const {
  std::array<std::uint8_t, kEncodedSize> out{};
  blst_p2_compress(out.data(), &p_);
  return out;
}

G2 G2::operator+(const G2& o) const {
  G2 out;
  blst_p2_add_or_double(&out.p_, &p_, &o.p_);
  return out;
}

G2 G2::operator-() const {
  G2 out = *this;
  blst_p2_cneg(&out.p_, true);
  return out;
}

G2 G2::operator-(const G2& o) const { return *this + (-o); }

G2 G2::operator*(const Scalar& s) const {
  const auto k = to_blst_scalar(s.raw());
  G2 out;
  blst_p2_mult(&out.p_, &p_, k.b, kScalarBits);
  return out;
}

bool G2::is_identity() const { return blst_p2_is_inf(&p_); }

bool G2::operator==(const G2& o) const { return blst_p2_is_equal(&p_, &o.p_); }

// --- GT -------------------------------------------------------------------

Gt::Gt() : f_(*blst_fp12_one()) {}

Gt Gt::from_bytes(ByteSpan bytes) {
  require_size(bytes, kEncodedSize, "GT");
  Gt out;
  const std::uint8_t* p = bytes.data();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      blst_fp_from_bendian(&out.f_.fp6[j].fp2[i].fp[0], p);
      p += 48;
      blst_fp_from_bendian(&out.f_.fp6[j].fp2[i].fp[1], p);
      p += 48;
    }
  }
  if (!std::ranges::equal(out.to_bytes(), bytes)) {
    throw DecodeError("GT: non-canonical field element");
  }
  if (!blst_fp12_in_group(&out.f_)) {
    throw DecodeError("GT: element not in the order-r subgroup");
  }
  return out;
}

std::array<std::uint8_t, Gt::kEncodedSize> Gt::to_bytes() const {
  std::array<std::uint8_t, kEncodedSize> out{};
  blst_bendian_from_fp12(out.data(), &f_);
  return out;
}

Gt Gt::operator*(const Gt& o) const {
  Gt out;
  blst_fp12_mul(&out.f_, &f_, &o.f_);
  return out;
}

Gt Gt::pow(const Scalar& s) const {
  const auto k = to_blst_scalar(s.raw());
  Gt acc;
  for (int bit = static_cast<int>(kScalarBits) - 1; bit >= 0; --bit) {
    blst_fp12_sqr(&acc.f_, &acc.f_);
    if ((k.b[bit / 8] >> (bit % 8)) & 1) {
      blst_fp12_mul(&acc.f_, &acc.f_, &f_);
    }
  }
  return acc;
}

Gt Gt::inverse() const {
  Gt out;
  blst_fp12_inverse(&out.f_, &f_);
  return out;
}

bool Gt::is_one() const { return blst_fp12_is_one(&f_); }

bool Gt::operator==(const Gt& o) const {
  return blst_fp12_is_equal(&f_, &o.f_);
}

// --- Backend --------------------------------------------------------------

const BackendDescriptor& Backend::descriptor() {
  static const BackendDescriptor d{
      "bls12-381",
      from_hex("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001"),
      G1::kEncodedSize, G2::kEncodedSize, Scalar::kEncodedSize};
  return d;
}

Gt Backend::pairing(const G1& a, const G2& b) {
  if (a.is_identity() || b.is_identity()) return Gt::one();
  blst_p1_affine pa;
  blst_p2_affine pb;
  blst_p1_to_affine(&pa, &a.raw());
  blst_p2_to_affine(&pb, &b.raw());
  Gt out;
  blst_fp12 loop;
  blst_miller_loop(&loop, &pb, &pa);
  blst_final_exp(&out.f_, &loop);
  return out;
}

}  // namespace rsscred::bls12_381
