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

#include <gtest/gtest.h>

#include "oracle/exponent_oracle.hpp"
#include "rsscred/errors.hpp"

namespace rsscred {
namespace {

using mock::G1;
using mock::G2;
using mock::Gt;
using mock::Scalar;
namespace orc = oracle;

TEST(MockBackendTest, PairingMultipliesLogs) {
  EXPECT_EQ(MockBackend::pairing(G1::from_log(2), G2::from_log(3)).log(), 6u);
  EXPECT_EQ(MockBackend::pairing(G1::generator(), G2::generator()).log(), 1u);
}

TEST(MockBackendTest, ArithmeticMatchesBigIntegerOracle) {
  SeededRandom rng(3);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_scalar<MockBackend>(rng);
    const auto b = random_scalar<MockBackend>(rng);
    const orc::Int A = a.value(), B = b.value();
    ASSERT_EQ((a + b).value(), orc::u64(A + B));
    ASSERT_EQ((a - b).value(), orc::u64(A - B));
    ASSERT_EQ((a * b).value(), orc::u64(A * B));
    ASSERT_EQ((G1::from_log(a.value()) * b).log(), orc::u64(A * B));
    ASSERT_EQ(Gt::from_log(a.value()).pow(b).log(), orc::u64(A * B));
    if (!a.is_zero()) {
      ASSERT_EQ(orc::u64(orc::Int(a.inverse().value()) * A), 1u);
    }
  }
}

TEST(MockBackendTest, WideReductionMatchesOracle) {
  std::array<std::uint8_t, 64> wide{};
  for (std::size_t i = 0; i < wide.size(); ++i) {
    wide[i] = static_cast<std::uint8_t>(0xff - 3 * i);
  }
  orc::Int v = 0;
  for (auto b : wide) v = v * 256 + b;
  EXPECT_EQ(Scalar::from_wide_bytes(wide).value(), orc::u64(v));
}

TEST(MockBackendTest, FromU64Reduces) {
  EXPECT_EQ(Scalar::from_u64(mock::kOrder).value(), 0u);
  EXPECT_EQ(Scalar::from_u64(mock::kOrder + 5).value(), 5u);
}

TEST(MockBackendTest, EncodingIsEightBytesBigEndian) {
  EXPECT_EQ(to_hex(G1::from_log(0x0102).to_bytes()), "0000000000000102");
  EXPECT_EQ(to_hex(Scalar::from_u64(mock::kOrder - 1).to_bytes()),
            "1ffffffffffffffe");
}

TEST(MockBackendTest, RejectsUnreducedEncodings) {
  const Bytes p = from_hex("1fffffffffffffff");
  EXPECT_THROW(Scalar::from_bytes(p), DecodeError);
  EXPECT_THROW(G1::from_bytes(p), DecodeError);
  EXPECT_THROW(G2::from_bytes(from_hex("ffffffffffffffff")), DecodeError);
  EXPECT_THROW(Gt::from_bytes(p), DecodeError);
}

TEST(MockBackendTest, DescriptorIsPinned) {
  const auto& d = MockBackend::descriptor();
  EXPECT_EQ(d.name, "mock-exp-p61");
  EXPECT_EQ(to_hex(d.group_order), "1fffffffffffffff");
  EXPECT_EQ(d.g1_encoded_len, 8);
  EXPECT_EQ(d.g2_encoded_len, 8);
  EXPECT_EQ(d.scalar_encoded_len, 8);
}

}  // namespace
}  // namespace rsscred
