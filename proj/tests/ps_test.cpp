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


#include "rsscred/ps.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle/exponent_oracle.hpp"
#include "rsscred/errors.hpp"
#include "test_util.hpp"

namespace rsscred::ps {
namespace {

template <class B>
class PsTest : public ::testing::Test {
 protected:
  using Scalar = typename B::Scalar;

  std::vector<Scalar> messages(std::size_t r) {
    std::vector<Scalar> m;
    for (std::size_t j = 0; j < r; ++j) m.push_back(random_scalar<B>(rng_));
    return m;
  }

  int trials() const { return B::descriptor().name == "bls12-381" ? 16 : 100; }

  SeededRandom rng_{11};
};

TYPED_TEST_SUITE(PsTest, testing::Backends, testing::BackendNames);

TYPED_TEST(PsTest, SignThenVerifyAcceptsForEveryMessageCount) {
  for (int k = 0; k < this->trials(); ++k) {
    const std::size_t r = 1 + k % 8;
    const auto kp = keygen<TypeParam>(r, this->rng_);
    ASSERT_EQ(kp.pk.message_count(), r);
    const auto m = this->messages(r);
    const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
    ASSERT_TRUE(verify<TypeParam>(kp.pk, m, sig)) << "r=" << r;
  }
}

TYPED_TEST(PsTest, SinglePerturbationRejects) {
  using G1 = typename TypeParam::G1;
  using S = typename TypeParam::Scalar;
  for (int k = 0; k < this->trials(); ++k) {
    const std::size_t r = 1 + k % 4;
    const auto kp = keygen<TypeParam>(r, this->rng_);
    auto m = this->messages(r);
    const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);

    auto bad_m = m;
    bad_m[k % r] = bad_m[k % r] + S::one();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, bad_m, sig));

    auto bad1 = sig;
    bad1.sigma1 = bad1.sigma1 + G1::generator();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, m, bad1));

    auto bad2 = sig;
    bad2.sigma2 = bad2.sigma2 + G1::generator();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, m, bad2));
  }
}

TYPED_TEST(PsTest, IdentityFirstComponentIsRejected) {
  using G1 = typename TypeParam::G1;
  const auto kp = keygen<TypeParam>(2, this->rng_);
  const auto m = this->messages(2);
  // (1, 1) satisfies the pairing equation trivially.
  EXPECT_FALSE(verify<TypeParam>(kp.pk, m, Signature<TypeParam>{G1::identity(),
                                                                 G1::identity()}));
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  EXPECT_FALSE(
      verify<TypeParam>(kp.pk, m, Signature<TypeParam>{G1::identity(), sig.sigma2}));
}

TYPED_TEST(PsTest, RerandomizedSignatureVerifies) {
  for (int k = 0; k < this->trials(); ++k) {
    const auto kp = keygen<TypeParam>(3, this->rng_);
    const auto m = this->messages(3);
    const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
    const auto re = rerandomize<TypeParam>(sig, this->rng_);
    EXPECT_NE(re.sigma1, sig.sigma1);
    EXPECT_TRUE(verify<TypeParam>(kp.pk, m, re));
  }
}

TYPED_TEST(PsTest, TwoSeedsGiveDistinctFirstComponentsThatBothVerify) {
  SeededRandom key_rng(1);
  const auto kp = keygen<TypeParam>(2, key_rng);
  const auto m = this->messages(2);
  SeededRandom a(100), b(200);
  const auto sa = sign<TypeParam>(kp.sk, m, a);
  const auto sb = sign<TypeParam>(kp.sk, m, b);
  EXPECT_NE(sa.sigma1, sb.sigma1);
  EXPECT_TRUE(verify<TypeParam>(kp.pk, m, sa));
  EXPECT_TRUE(verify<TypeParam>(kp.pk, m, sb));
}

TYPED_TEST(PsTest, DifferentSeedsGiveDifferentKeys) {
  SeededRandom a(1), b(2);
  EXPECT_NE(keygen<TypeParam>(1, a).pk.x, keygen<TypeParam>(1, b).pk.x);
}

TYPED_TEST(PsTest, ContractViolations) {
  EXPECT_THROW(keygen<TypeParam>(0, this->rng_), InvalidParameter);
  const auto kp = keygen<TypeParam>(2, this->rng_);
  EXPECT_EQ(kp.sk.y.size(), 2u);
  const auto m3 = this->messages(3);
  EXPECT_THROW(sign<TypeParam>(kp.sk, m3, this->rng_), InvalidParameter);
  const auto m2 = this->messages(2);
  const auto sig = sign<TypeParam>(kp.sk, m2, this->rng_);
  EXPECT_THROW(verify<TypeParam>(kp.pk, m3, sig), InvalidParameter);
}

TYPED_TEST(PsTest, WireFormatRoundTrips) {
  const auto kp = keygen<TypeParam>(4, this->rng_);
  const auto m = this->messages(4);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  EXPECT_EQ(decode_public_key<TypeParam>(encode(kp.pk)), kp.pk);
  EXPECT_EQ(decode_secret_key<TypeParam>(encode(kp.sk)), kp.sk);
  EXPECT_EQ(decode_signature<TypeParam>(encode(sig)), sig);

  auto truncated = encode(sig);
  truncated.pop_back();
  EXPECT_THROW(decode_signature<TypeParam>(truncated), DecodeError);
}

TEST(PsWireTest, ForeignBackendIsACompatibilityError) {
  SeededRandom rng(4);
  const auto kp = keygen<MockBackend>(2, rng);
  EXPECT_THROW(decode_public_key<Bls12381>(encode(kp.pk)), CompatibilityError);
}

// --- exponent oracle --------------------------------------------------------

using S = MockBackend::Scalar;

TEST(PsMockTest, KeyElementsCarryTheSecretExponents) {
  SeededRandom rng(21);
  const auto kp = keygen<MockBackend>(2, rng);
  const oracle::Int g2 = kp.pk.g2.log();
  EXPECT_EQ(kp.pk.x.log(), oracle::u64(g2 * kp.sk.x.value()));
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_EQ(kp.pk.y[j].log(), oracle::u64(g2 * kp.sk.y[j].value()));
  }
}

TEST(PsMockTest, SmallExampleMatchesHandComputation) {
  const auto kp = keygen_from<MockBackend>(
      S::from_u64(3), {S::from_u64(2), S::from_u64(5)}, MockBackend::G2::generator());
  const std::vector<S> m = {S::from_u64(7), S::from_u64(4)};
  const auto sig = sign_with_base<MockBackend>(kp.sk, m, MockBackend::G1::generator());
  EXPECT_EQ(sig.sigma1.log(), 1u);
  EXPECT_EQ(sig.sigma2.log(), 37u);  // 3 + 2*7 + 5*4
  EXPECT_TRUE(verify<MockBackend>(kp.pk, m, sig));
}

TEST(PsMockTest, SignatureExponentMatchesOracleOnRandomInstances) {
  SeededRandom rng(22);
  std::mt19937_64 gen(22);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + gen() % 8;
    const auto kp = keygen<MockBackend>(r, rng);
    std::vector<S> m;
    for (std::size_t j = 0; j < r; ++j) m.push_back(random_scalar<MockBackend>(rng));
    const auto sig = sign<MockBackend>(kp.sk, m, rng);
    oracle::Int e = kp.sk.x.value();
    for (std::size_t j = 0; j < r; ++j) {
      e += oracle::Int(kp.sk.y[j].value()) * m[j].value();
    }
    ASSERT_EQ(sig.sigma2.log(), oracle::u64(oracle::Int(sig.sigma1.log()) * e));
  }
}

}  // namespace
}  // namespace rsscred::ps
