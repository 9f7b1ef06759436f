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


// Group-law, pairing and encoding properties shared by every backend.

#include "rsscred/backend.hpp"

#include <gtest/gtest.h>

#include <set>

#include "rsscred/errors.hpp"
#include "test_util.hpp"

namespace rsscred {
namespace {

template <class B>
class BackendTest : public ::testing::Test {
 protected:
  using Scalar = typename B::Scalar;
  using G1 = typename B::G1;
  using G2 = typename B::G2;
  using Gt = typename B::Gt;

  SeededRandom rng_{0xb4c};

  Scalar scalar() { return random_scalar<B>(rng_); }
  G1 g1() { return G1::generator() * scalar(); }
  G2 g2() { return G2::generator() * scalar(); }
};

TYPED_TEST_SUITE(BackendTest, testing::Backends, testing::BackendNames);

TYPED_TEST(BackendTest, ScalarFieldLaws) {
  using S = typename TypeParam::Scalar;
  for (int k = 0; k < 50; ++k) {
    const S a = this->scalar(), b = this->scalar(), c = this->scalar();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, S::zero());
    EXPECT_EQ(a + (-a), S::zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), S::one());
    }
  }
  EXPECT_EQ(S::from_u64(2) * S::from_u64(3), S::from_u64(6));
}

TYPED_TEST(BackendTest, BilinearityHoldsOnRandomInputs) {
  using B = TypeParam;
  const int trials = B::descriptor().name == "bls12-381" ? 20 : 100;
  for (int k = 0; k < trials; ++k) {
    const auto a = this->scalar();
    const auto b = this->scalar();
    const auto p = this->g1();
    const auto q = this->g2();
    const auto lhs = B::pairing(p * a, q * b);
    EXPECT_EQ(lhs, B::pairing(p, q).pow(a * b));
    EXPECT_EQ(lhs, B::pairing(p * (a * b), q));
  }
}

TYPED_TEST(BackendTest, PairingIsAdditiveInEachArgument) {
  using B = TypeParam;
  const auto p1 = this->g1(), p2 = this->g1();
  const auto q1 = this->g2(), q2 = this->g2();
  EXPECT_EQ(B::pairing(p1 + p2, q1), B::pairing(p1, q1) * B::pairing(p2, q1));
  EXPECT_EQ(B::pairing(p1, q1 + q2), B::pairing(p1, q1) * B::pairing(p1, q2));
  EXPECT_EQ(B::pairing(-p1, q1), B::pairing(p1, q1).inverse());
}

TYPED_TEST(BackendTest, PairingIsNonDegenerate) {
  using B = TypeParam;
  EXPECT_FALSE(
      B::pairing(TestFixture::G1::generator(), TestFixture::G2::generator()).is_one());
}

TYPED_TEST(BackendTest, IdentityBehaviour) {
  using B = TypeParam;
  using G1 = typename TestFixture::G1;
  using G2 = typename TestFixture::G2;
  using S = typename TestFixture::Scalar;
  const auto p = this->g1();
  const auto q = this->g2();
  EXPECT_EQ(p + G1::identity(), p);
  EXPECT_EQ(q + G2::identity(), q);
  EXPECT_TRUE((p - p).is_identity());
  EXPECT_TRUE((q * S::zero()).is_identity());
  EXPECT_TRUE(B::pairing(G1::identity(), q).is_one());
  EXPECT_TRUE(B::pairing(p, G2::identity()).is_one());
  EXPECT_TRUE(B::pairing(p, q).pow(S::zero()).is_one());
}

TYPED_TEST(BackendTest, EncodingsRoundTrip) {
  using B = TypeParam;
  using S = typename TestFixture::Scalar;
  using G1 = typename TestFixture::G1;
  using G2 = typename TestFixture::G2;
  using Gt = typename TestFixture::Gt;
  const int trials = B::descriptor().name == "bls12-381" ? 25 : 100;
  for (int k = 0; k < trials; ++k) {
    const auto s = this->scalar();
    const auto p = this->g1();
    const auto q = this->g2();
    const auto t = B::pairing(p, q);

    const auto sb = s.to_bytes();
    const auto pb = p.to_bytes();
    const auto qb = q.to_bytes();
    const auto tb = t.to_bytes();
    ASSERT_EQ(sb.size(), scalar_len<B>());
    ASSERT_EQ(pb.size(), g1_len<B>());
    ASSERT_EQ(qb.size(), g2_len<B>());
    ASSERT_EQ(tb.size(), Gt::kEncodedSize);

    EXPECT_EQ(S::from_bytes(sb), s);
    EXPECT_EQ(G1::from_bytes(pb), p);
    EXPECT_EQ(G2::from_bytes(qb), q);
    EXPECT_EQ(Gt::from_bytes(tb), t);
  }
  EXPECT_EQ(G1::from_bytes(G1::identity().to_bytes()), G1::identity());
  EXPECT_EQ(G2::from_bytes(G2::identity().to_bytes()), G2::identity());
  EXPECT_EQ(Gt::from_bytes(Gt::one().to_bytes()), Gt::one());
}

TYPED_TEST(BackendTest, DecodingRejectsWrongLength) {
  using S = typename TestFixture::Scalar;
  using G1 = typename TestFixture::G1;
  using G2 = typename TestFixture::G2;
  using Gt = typename TestFixture::Gt;
  const Bytes short_input(3, 0);
  EXPECT_THROW(S::from_bytes(short_input), DecodeError);
  EXPECT_THROW(G1::from_bytes(short_input), DecodeError);
  EXPECT_THROW(G2::from_bytes(short_input), DecodeError);
  EXPECT_THROW(Gt::from_bytes(short_input), DecodeError);
}

TYPED_TEST(BackendTest, HashToScalarIsDeterministicAndDomainSeparated) {
  using B = TypeParam;
  const auto a = hash_to_scalar<B>("rss-c", as_bytes("msg"));
  EXPECT_EQ(a, hash_to_scalar<B>("rss-c", as_bytes("msg")));
  EXPECT_NE(a, hash_to_scalar<B>("rss-d", as_bytes("msg")));
  EXPECT_NE(a, hash_to_scalar<B>("rss-c", as_bytes("msh")));
  // Length-prefixing the tag keeps tag/payload boundaries unambiguous.
  EXPECT_NE(hash_to_scalar<B>("ab", as_bytes("c")),
            hash_to_scalar<B>("a", as_bytes("bc")));
}

TYPED_TEST(BackendTest, HashToScalarNeverReturnsZero) {
  using B = TypeParam;
  const int trials = B::descriptor().name == "bls12-381" ? 2000 : 10000;
  for (int k = 0; k < trials; ++k) {
    ByteWriter w;
    w.u32(static_cast<std::uint32_t>(k));
    ASSERT_FALSE(hash_to_scalar<B>("nz", w.bytes()).is_zero()) << k;
  }
}

TYPED_TEST(BackendTest, RandomScalarsAreSpread) {
  std::set<Bytes> seen;
  for (int k = 0; k < 1000; ++k) {
    const auto b = this->scalar().to_bytes();
    seen.emplace(b.begin(), b.end());
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TYPED_TEST(BackendTest, DescriptorRoundTripsAndMismatchIsDetected) {
  using B = TypeParam;
  ByteWriter w;
  B::descriptor().encode(w);
  EXPECT_EQ(w.bytes().size(), B::descriptor().encoded_size());
  ByteReader r(w.bytes());
  EXPECT_EQ(BackendDescriptor::decode(r), B::descriptor());
  EXPECT_NO_THROW(require_backend(B::descriptor(), B::descriptor()));
  EXPECT_THROW(require_backend(MockBackend::descriptor(), Bls12381::descriptor()),
               CompatibilityError);
}

// --- randomness -------------------------------------------------------------

TEST(SeededRandomTest, SameSeedSameStream) {
  SeededRandom a(99), b(99), c(100);
  std::array<std::uint8_t, 200> x{}, y{}, z{};
  a.fill(x);
  b.fill(y);
  c.fill(z);
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
}

TEST(SeededRandomTest, ChunkingDoesNotChangeTheStream) {
  SeededRandom a(5), b(5);
  std::array<std::uint8_t, 150> whole{};
  a.fill(whole);
  std::array<std::uint8_t, 150> parts{};
  b.fill(std::span(parts).subspan(0, 1));
  b.fill(std::span(parts).subspan(1, 70));
  b.fill(std::span(parts).subspan(71));
  EXPECT_EQ(whole, parts);
}

// Frozen from tests/oracle/derive_vectors.py (BLAKE2b key derivation and
// ChaCha20 keystream computed with Python's hashlib and cryptography).
TEST(SeededRandomTest, MatchesIndependentKeystream) {
  SeededRandom rng(7);
  std::array<std::uint8_t, 16> out{};
  rng.fill(out);
  EXPECT_EQ(to_hex(out), "9c24a8f3511eb28b56f937605c1ca2c4");
}

TEST(SeededRandomTest, MockScalarsMatchIndependentReduction) {
  SeededRandom rng(7);
  EXPECT_EQ(random_scalar<MockBackend>(rng).value(), 0x8a7f4d003415892u);
  EXPECT_EQ(random_scalar<MockBackend>(rng).value(), 0x1e4d14621078af77u);
  EXPECT_EQ(random_scalar<MockBackend>(rng).value(), 0x16b2872268342c5bu);
}

TEST(OsRandomTest, ProducesDistinctOutput) {
  OsRandom rng;
  std::array<std::uint8_t, 32> a{}, b{};
  rng.fill(a);
  rng.fill(b);
  EXPECT_NE(a, b);
}

// --- hash regression vectors -----------------------------------------------

// SHA-512 and reduction recomputed in tests/oracle/derive_vectors.py.
TEST(HashToScalarTest, MatchesIndependentOracle) {
  const auto payload = as_bytes(std::string_view("name\0Alice Example", 18));
  EXPECT_EQ(hash_to_scalar<MockBackend>("attr", payload).value(),
            0x14d7af59bdaee80eu);
  EXPECT_EQ(to_hex(hash_to_scalar<Bls12381>("attr", payload).to_bytes()),
            "1ed161f87a14c79ce4590ee19e491a9d1b420e98783844d94b320a35ce789c4f");
  EXPECT_EQ(hash_to_scalar<MockBackend>("", {}).value(), 0x6044ef18754a1e6u);
}

}  // namespace
}  // namespace rsscred
