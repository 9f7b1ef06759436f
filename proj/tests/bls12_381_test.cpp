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

#include <gtest/gtest.h>

#include "rsscred/errors.hpp"

namespace rsscred {
namespace {

using bls12_381::G1;
using bls12_381::G2;
using bls12_381::Gt;
using bls12_381::Scalar;

// Standard compressed generator encodings (ZCash serialization).
constexpr char kG1Generator[] =
    "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac58"
    "6c55e83ff97a1aeffb3af00adb22c6bb";
constexpr char kG2Generator[] =
    "93e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049"
    "334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051"
    "c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8";

TEST(Bls12381Test, GeneratorEncodingsMatchStandard) {
  EXPECT_EQ(to_hex(G1::generator().to_bytes()), kG1Generator);
  EXPECT_EQ(to_hex(G2::generator().to_bytes()), kG2Generator);
}

TEST(Bls12381Test, IdentityEncodingsSetInfinityFlag) {
  const auto g1 = to_hex(G1::identity().to_bytes());
  const auto g2 = to_hex(G2::identity().to_bytes());
  EXPECT_EQ(g1, "c0" + std::string(94, '0'));
  EXPECT_EQ(g2, "c0" + std::string(190, '0'));
}

TEST(Bls12381Test, ScalarEncodingIsBigEndianCanonical) {
  EXPECT_EQ(to_hex(Scalar::from_u64(0x0102).to_bytes()),
            std::string(60, '0') + "0102");
  // r itself is not canonical.
  const Bytes r = from_hex(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  EXPECT_THROW(Scalar::from_bytes(r), DecodeError);
  const Bytes r_minus_one = from_hex(
      "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000000");
  EXPECT_EQ(Scalar::from_bytes(r_minus_one) + Scalar::one(), Scalar::zero());
}

TEST(Bls12381Test, RejectsPointsOffTheCurve) {
  auto bytes = G1::generator().to_bytes();
  bytes[47] ^= 0x01;
  EXPECT_THROW(G1::from_bytes(bytes), DecodeError);
  auto b2 = G2::generator().to_bytes();
  b2[95] ^= 0x01;
  EXPECT_THROW(G2::from_bytes(b2), DecodeError);
}

TEST(Bls12381Test, RejectsUncompressedFlag) {
  auto bytes = G1::generator().to_bytes();
  bytes[0] &= 0x7f;
  EXPECT_THROW(G1::from_bytes(bytes), DecodeError);
}

TEST(Bls12381Test, GtRejectsNonGroupElements) {
  const auto e = Bls12381::pairing(G1::generator(), G2::generator());
  auto bytes = e.to_bytes();
  EXPECT_EQ(bytes.size(), 576u);
  bytes[575] ^= 0x01;
  EXPECT_THROW(Gt::from_bytes(bytes), DecodeError);
}

TEST(Bls12381Test, PairingOfGeneratorsHasOrderR) {
  const auto e = Bls12381::pairing(G1::generator(), G2::generator());
  const auto r_minus_one = Scalar::zero() - Scalar::one();
  EXPECT_EQ(e.pow(r_minus_one) * e, Gt::one());
}

TEST(Bls12381Test, DescriptorIsPinned) {
  const auto& d = Bls12381::descriptor();
  EXPECT_EQ(d.name, "bls12-381");
  EXPECT_EQ(to_hex(d.group_order),
            "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  EXPECT_EQ(d.g1_encoded_len, 48);
  EXPECT_EQ(d.g2_encoded_len, 96);
  EXPECT_EQ(d.scalar_encoded_len, 32);
}

}  // namespace
}  // namespace rsscred
