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


#include "rsscred/rss.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle/exponent_oracle.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/rss_wire.hpp"
#include "test_util.hpp"

namespace rsscred::rss {
namespace {

using testing::all_subsets;
using testing::random_subset;

// --- index sets ---------------------------------------------------------------

TEST(IndexSetTest, SortsAndComputesComplement) {
  const auto s = IndexSet::of({5, 1, 3}, 6);
  EXPECT_EQ(std::vector<std::uint32_t>(s.indices().begin(), s.indices().end()),
            (std::vector<std::uint32_t>{1, 3, 5}));
  EXPECT_EQ(s.complement(), (std::vector<std::uint32_t>{2, 4, 6}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(IndexSet::all(3).complement().size(), 0u);
}

TEST(IndexSetTest, RejectsInvalidSets) {
  EXPECT_THROW(IndexSet::of({}, 3), InvalidParameter);
  EXPECT_THROW(IndexSet::of({1, 1}, 3), InvalidParameter);
  EXPECT_THROW(IndexSet::of({0}, 3), InvalidParameter);
  EXPECT_THROW(IndexSet::of({4}, 3), InvalidParameter);
  EXPECT_THROW(IndexSet::all(0), InvalidParameter);
}

// --- typed properties --------------------------------------------------------

template <class B>
class RssTest : public ::testing::Test {
 protected:
  using Scalar = typename B::Scalar;

  std::vector<Scalar> messages(std::uint32_t n) {
    std::vector<Scalar> m;
    for (std::uint32_t j = 0; j < n; ++j) m.push_back(random_scalar<B>(rng_));
    return m;
  }

  static Disclosure<B> disclose(const std::vector<Scalar>& m, const IndexSet& s) {
    Disclosure<B> d;
    for (auto i : s.indices()) d.emplace(i, m[i - 1]);
    return d;
  }

  static bool is_bls() { return B::descriptor().name == "bls12-381"; }

  SeededRandom rng_{31};
  std::mt19937_64 gen_{31};
};

TYPED_TEST_SUITE(RssTest, testing::Backends, testing::BackendNames);

TYPED_TEST(RssTest, KeyVectorSkipsIndexNPlusOne) {
  const auto kp = keygen<TypeParam>(2, this->rng_);
  EXPECT_EQ(kp.pk.y_g1.size(), 3u);
  EXPECT_EQ(kp.pk.y_g2.size(), 2u);
  EXPECT_NO_THROW(kp.pk.y1(1));
  EXPECT_NO_THROW(kp.pk.y1(2));
  EXPECT_NO_THROW(kp.pk.y1(4));
  EXPECT_THROW(kp.pk.y1(3), InternalError);
  EXPECT_THROW(kp.pk.y1(5), InternalError);
  EXPECT_THROW(kp.pk.y2(3), InternalError);
  EXPECT_THROW(keygen<TypeParam>(0, this->rng_), InvalidParameter);
}

TYPED_TEST(RssTest, FreshSignatureVerifiesOnFullMessage) {
  const auto kp = keygen<TypeParam>(4, this->rng_);
  const auto m = this->messages(4);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  EXPECT_TRUE(sig.is_fresh());
  EXPECT_TRUE(verify<TypeParam>(kp.pk, sig, this->disclose(m, IndexSet::all(4))));
}

TYPED_TEST(RssTest, FreshSignatureWithJunkThirdComponentIsRejected) {
  const auto kp = keygen<TypeParam>(3, this->rng_);
  const auto m = this->messages(3);
  auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  sig.sigma3 = TypeParam::G1::generator();
  EXPECT_FALSE(verify<TypeParam>(kp.pk, sig, this->disclose(m, IndexSet::all(3))));
}

TYPED_TEST(RssTest, SignaturesUnderDifferentSeedsDifferAndVerify) {
  const auto kp = keygen<TypeParam>(3, this->rng_);
  const auto m = this->messages(3);
  SeededRandom a(1), b(2);
  const auto sa = sign<TypeParam>(kp.sk, m, a);
  const auto sb = sign<TypeParam>(kp.sk, m, b);
  EXPECT_NE(sa.sigma1, sb.sigma1);
  const auto d = this->disclose(m, IndexSet::all(3));
  EXPECT_TRUE(verify<TypeParam>(kp.pk, sa, d));
  EXPECT_TRUE(verify<TypeParam>(kp.pk, sb, d));
}

TYPED_TEST(RssTest, DerivedSignaturesVerify) {
  // Mock: every non-empty I for n in [1, 8], 50 messages each. The curve
  // backend runs a sampled subset of the same space.
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto kp = keygen<TypeParam>(n, this->rng_);
    const int message_count = this->is_bls() ? 2 : 50;
    for (int k = 0; k < message_count; ++k) {
      const auto m = this->messages(n);
      const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
      auto subsets = all_subsets(n);
      if (this->is_bls()) subsets = {random_subset(n, this->gen_)};
      for (const auto& s : subsets) {
        const auto I = IndexSet::of(s, n);
        const auto d = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
        ASSERT_TRUE(verify<TypeParam>(kp.pk, d, this->disclose(m, I)))
            << "n=" << n << " |I|=" << s.size();
      }
    }
  }
}

TYPED_TEST(RssTest, KeepAllDerivationVerifies) {
  const auto kp = keygen<TypeParam>(5, this->rng_);
  const auto m = this->messages(5);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  const auto d = derive<TypeParam>(kp.pk, sig, m, IndexSet::all(5), this->rng_);
  EXPECT_FALSE(d.is_fresh());
  EXPECT_TRUE(verify<TypeParam>(kp.pk, d, this->disclose(m, IndexSet::all(5))));
}

TYPED_TEST(RssTest, PaperScenarioIndicesOneAndFiveOfSix) {
  const auto kp = keygen<TypeParam>(6, this->rng_);
  const auto m = this->messages(6);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  const auto I = IndexSet::of({1, 5}, 6);
  const auto d = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
  EXPECT_TRUE(verify<TypeParam>(kp.pk, d, this->disclose(m, I)));
}

TYPED_TEST(RssTest, TamperingIsRejected) {
  using G1 = typename TypeParam::G1;
  using G2 = typename TypeParam::G2;
  using S = typename TypeParam::Scalar;
  const int trials = this->is_bls() ? 5 : 100;
  for (int k = 0; k < trials; ++k) {
    const std::uint32_t n = 2 + this->gen_() % 5;
    const auto kp = keygen<TypeParam>(n, this->rng_);
    const auto m = this->messages(n);
    const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
    auto kept = random_subset(n, this->gen_);
    if (kept.size() == n) kept.pop_back();  // leave something redacted
    const auto I = IndexSet::of(kept, n);
    const auto d = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
    const auto good = this->disclose(m, I);
    ASSERT_TRUE(verify<TypeParam>(kp.pk, d, good));

    auto bad_value = good;
    bad_value.begin()->second = bad_value.begin()->second + S::one();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, d, bad_value));

    // Claim one more position than was retained.
    auto wider = good;
    const auto extra = I.complement().front();
    wider.emplace(extra, m[extra - 1]);
    EXPECT_FALSE(verify<TypeParam>(kp.pk, d, wider));

    auto t1 = d;
    t1.sigma1 = t1.sigma1 + G1::generator();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, t1, good));
    auto t2 = d;
    t2.sigma2 = t2.sigma2 + G1::generator();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, t2, good));
    auto t3 = d;
    t3.sigma3 = t3.sigma3 + G1::generator();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, t3, good));
    auto t4 = d;
    t4.sigma_tilde = t4.sigma_tilde + G2::generator();
    EXPECT_FALSE(verify<TypeParam>(kp.pk, t4, good));
  }
}

TYPED_TEST(RssTest, ClaimingADifferentIndexSetIsRejected) {
  // Same derived signature presented with a narrower claimed I: the
  // commitments bind the set, so even a subset fails.
  const auto kp = keygen<TypeParam>(4, this->rng_);
  const auto m = this->messages(4);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  const auto I = IndexSet::of({1, 3}, 4);
  const auto d = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
  EXPECT_FALSE(verify<TypeParam>(kp.pk, d, this->disclose(m, IndexSet::of({1}, 4))));
  EXPECT_FALSE(verify<TypeParam>(kp.pk, d, this->disclose(m, IndexSet::of({2, 4}, 4))));
}

TYPED_TEST(RssTest, DerivationsAreUnlinkableCoordinateWise) {
  const int trials = this->is_bls() ? 5 : 100;
  const auto kp = keygen<TypeParam>(4, this->rng_);
  for (int k = 0; k < trials; ++k) {
    const auto m = this->messages(4);
    const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
    const auto I = IndexSet::of(random_subset(4, this->gen_), 4);
    const auto a = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
    const auto b = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
    EXPECT_NE(a.sigma1, b.sigma1);
    EXPECT_NE(a.sigma2, b.sigma2);
    EXPECT_NE(a.sigma3, b.sigma3);
    EXPECT_NE(a.sigma_tilde, b.sigma_tilde);
    EXPECT_NE(encode(a), encode(b));
    EXPECT_TRUE(verify<TypeParam>(kp.pk, a, this->disclose(m, I)));
    EXPECT_TRUE(verify<TypeParam>(kp.pk, b, this->disclose(m, I)));
  }
}

TYPED_TEST(RssTest, DeriveContract) {
  using S = typename TypeParam::Scalar;
  const auto kp = keygen<TypeParam>(3, this->rng_);
  const auto m = this->messages(3);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  const auto I = IndexSet::of({2}, 3);
  const auto d = derive<TypeParam>(kp.pk, sig, m, I, this->rng_);
  // Re-deriving from a derived signature is not supported.
  EXPECT_THROW(derive<TypeParam>(kp.pk, d, m, I, this->rng_), InvalidParameter);
  EXPECT_THROW(derive<TypeParam>(kp.pk, sig, this->messages(2), I, this->rng_),
               InvalidParameter);
  EXPECT_THROW(derive<TypeParam>(kp.pk, sig, m, IndexSet::of({2}, 4), this->rng_),
               InvalidParameter);
  EXPECT_THROW(derive_with<TypeParam>(kp.pk, sig, m, I, S::zero(), S::one()),
               InvalidParameter);
  EXPECT_THROW(sign<TypeParam>(kp.sk, this->messages(4), this->rng_),
               InvalidParameter);
}

TYPED_TEST(RssTest, VerifyRejectsMalformedDisclosures) {
  const auto kp = keygen<TypeParam>(3, this->rng_);
  const auto m = this->messages(3);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  Disclosure<TypeParam> out_of_range = {{4, m[0]}};
  EXPECT_THROW(verify<TypeParam>(kp.pk, sig, out_of_range), InvalidParameter);
  EXPECT_THROW(verify<TypeParam>(kp.pk, sig, {}), InvalidParameter);
  auto identity = sig;
  identity.sigma1 = TypeParam::G1::identity();
  identity.sigma2 = TypeParam::G1::identity();
  EXPECT_FALSE(verify<TypeParam>(kp.pk, identity, this->disclose(m, IndexSet::all(3))));
}

TYPED_TEST(RssTest, SignatureSizeIsConstant) {
  std::set<std::size_t> sizes;
  for (std::uint32_t n : {2u, 6u, 10u}) {
    const auto kp = keygen<TypeParam>(n, this->rng_);
    const auto m = this->messages(n);
    const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
    sizes.insert(signature_size(sig));
    for (std::uint32_t keep : {1u, (n + 1) / 2, n}) {
      std::vector<std::uint32_t> idx;
      for (std::uint32_t i = 1; i <= keep; ++i) idx.push_back(i);
      sizes.insert(signature_size(
          derive<TypeParam>(kp.pk, sig, m, IndexSet::of(idx, n), this->rng_)));
    }
  }
  ASSERT_EQ(sizes.size(), 1u);
  const std::size_t header = 8 + TypeParam::descriptor().encoded_size() + 4;
  EXPECT_EQ(*sizes.begin(), header + 3 * g1_len<TypeParam>() + g2_len<TypeParam>());
}

TYPED_TEST(RssTest, PublicKeySizeIsAffineInN) {
  // Documented layout: 2n G1 elements (g1 and the 2n-1 powers) and n+2 G2
  // elements (g2, X', n powers) after a fixed header.
  const std::size_t fixed = 8 + TypeParam::descriptor().encoded_size() + 4 + 1 +
                            kDefaultHashId.size() + 2 * g2_len<TypeParam>();
  const std::size_t slope = 2 * g1_len<TypeParam>() + g2_len<TypeParam>();
  for (std::uint32_t n : {1u, 2u, 4u, 8u, 16u}) {
    const auto kp = keygen<TypeParam>(n, this->rng_);
    EXPECT_EQ(public_key_size(kp.pk), fixed + slope * n) << "n=" << n;
  }
  const auto sk = keygen<TypeParam>(3, this->rng_).sk;
  EXPECT_EQ(secret_key_size(sk), 8 + TypeParam::descriptor().encoded_size() + 4 +
                                     2 * scalar_len<TypeParam>());
}

TYPED_TEST(RssTest, WireFormatRoundTrips) {
  const auto kp = keygen<TypeParam>(3, this->rng_);
  const auto m = this->messages(3);
  const auto sig = sign<TypeParam>(kp.sk, m, this->rng_);
  const auto d = derive<TypeParam>(kp.pk, sig, m, IndexSet::of({1}, 3), this->rng_);
  EXPECT_EQ(decode_public_key<TypeParam>(encode(kp.pk)), kp.pk);
  EXPECT_EQ(decode_secret_key<TypeParam>(encode(kp.sk)), kp.sk);
  EXPECT_EQ(decode_signature<TypeParam>(encode(sig)), sig);
  EXPECT_EQ(decode_signature<TypeParam>(encode(d)), d);

  auto bytes = encode(d);
  bytes.pop_back();
  EXPECT_THROW(decode_signature<TypeParam>(bytes), DecodeError);
  bytes = encode(d);
  bytes.push_back(0);
  EXPECT_THROW(decode_signature<TypeParam>(bytes), DecodeError);
  bytes = encode(d);
  bytes[0] ^= 0xff;
  EXPECT_THROW(decode_signature<TypeParam>(bytes), DecodeError);
  // A signature is not a public key.
  EXPECT_THROW(decode_public_key<TypeParam>(encode(d)), DecodeError);
}

TEST(RssWireTest, ForeignBackendIsACompatibilityError) {
  SeededRandom rng(8);
  const auto kp = keygen<MockBackend>(2, rng);
  EXPECT_THROW(decode_public_key<Bls12381>(encode(kp.pk)), CompatibilityError);
  EXPECT_THROW(decode_secret_key<Bls12381>(encode(kp.sk)), CompatibilityError);
}

// --- mock backend against the integer oracle ---------------------------------

using M = MockBackend;
using S = M::Scalar;
namespace orc = oracle;

std::vector<S> scalars(std::initializer_list<std::uint64_t> v) {
  std::vector<S> out;
  for (auto x : v) out.push_back(S::from_u64(x));
  return out;
}

orc::KeyLogs logs_of(const KeyPair<M>& kp) {
  return {kp.sk.x.value(), kp.sk.y.value(), kp.pk.g1.log(), kp.pk.g2.log(),
          kp.pk.n};
}

orc::SigLogs logs_of(const Signature<M>& s) {
  return {s.sigma1.log(), s.sigma2.log(), s.sigma3.log(), s.sigma_tilde.log()};
}

KeyPair<M> small_key(std::uint32_t n) {
  return keygen_from<M>(S::from_u64(3), S::from_u64(5), M::G1::generator(),
                        M::G2::generator(), n);
}

TEST(RssMockTest, KeyExponentsArePowersOfY) {
  const auto kp = small_key(2);
  EXPECT_EQ(kp.pk.y1(1).log(), 5u);
  EXPECT_EQ(kp.pk.y1(2).log(), 25u);
  EXPECT_EQ(kp.pk.y1(4).log(), 625u);
  EXPECT_EQ(kp.pk.y2(2).log(), 25u);
  EXPECT_EQ(kp.pk.x_g2.log(), 3u);
}

// Frozen from tests/oracle/derive_vectors.py, which replays the seeded
// keystream and the sampling order g1, g2, x, y.
TEST(RssMockTest, SeededKeygenMatchesIndependentReplay) {
  SeededRandom rng(42);
  const auto kp = keygen<M>(3, rng);
  EXPECT_EQ(kp.pk.g1.log(), 0x1d5dd69ca3b62edbu);
  EXPECT_EQ(kp.pk.g2.log(), 0x16a950fca3b4d248u);
  EXPECT_EQ(kp.sk.x.value(), 0xb56ca71a7662245u);
  EXPECT_EQ(kp.sk.y.value(), 0xcefe4a28b9ed2a8u);
  const std::vector<std::uint64_t> expected = {
      0xa8b54b619bf5445, 0x1e1ad2dc96edd287, 0xadfd09900c0746f,
      0x11ba2003b36afbce, 0xb8f5f807289487d};
  ASSERT_EQ(kp.pk.y_g1.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(kp.pk.y_g1[k].log(), expected[k]) << k;
  }
  EXPECT_EQ(kp.pk.x_g2.log(), 0xcddd14af4513cbu);
}

TEST(RssMockTest, SignExampleMatchesHandComputation) {
  const auto kp = small_key(2);
  const auto sig = sign_with_base<M>(kp.sk, scalars({7, 4}), M::G1::generator());
  EXPECT_EQ(sig.sigma2.log(), 138u);  // 3 + 5*7 + 25*4
  EXPECT_TRUE(sig.is_fresh());
}

TEST(RssMockTest, DeriveExampleBalancesSymbolically) {
  const auto kp = small_key(2);
  const auto m = scalars({7, 4});
  const auto sig = sign_with_base<M>(kp.sk, m, M::G1::generator());
  const auto I = IndexSet::of({1}, 2);
  const auto d = derive_with<M>(kp.pk, sig, m, I, S::one(), S::zero());

  const auto c = index_commitments<M>(kp.pk, d.sigma1, d.sigma2, d.sigma_tilde, I);
  ASSERT_EQ(c.size(), 1u);
  const orc::Int c1 = c[0].value();

  EXPECT_EQ(d.sigma1.log(), 1u);
  EXPECT_EQ(d.sigma2.log(), 138u);
  EXPECT_EQ(d.sigma_tilde.log(), 100u);  // 25 * 4
  EXPECT_EQ(d.sigma3.log(), orc::u64(2500 * c1));  // 5^4 * 4 * c1
  // e(s3, g2) against e(Y_2^c1, s~): 2500 c1 == 25 c1 * 100.
  EXPECT_EQ(orc::u64(2500 * c1), orc::u64(25 * c1 * 100));
  EXPECT_TRUE(verify<M>(kp.pk, d, {{1, m[0]}}));
}

TEST(RssMockTest, DerivedExponentsMatchOracleAndBothEquationsHold) {
  SeededRandom rng(77);
  std::mt19937_64 gen(77);
  for (int k = 0; k < 200; ++k) {
    const std::uint32_t n = 1 + gen() % 5;
    const auto kp = keygen<M>(n, rng);
    std::vector<S> m;
    std::vector<orc::Int> mi;
    for (std::uint32_t j = 0; j < n; ++j) {
      m.push_back(random_scalar<M>(rng));
      mi.emplace_back(m.back().value());
    }
    const auto sig = sign<M>(kp.sk, m, rng);
    const auto kept = random_subset(n, gen);
    const auto I = IndexSet::of(kept, n);
    const auto r = random_nonzero_scalar<M>(rng);
    const auto t = random_nonzero_scalar<M>(rng);
    const auto d = derive_with<M>(kp.pk, sig, m, I, r, t);

    const auto key = logs_of(kp);
    const auto fresh = orc::sign(key, sig.sigma1.log(), mi);
    ASSERT_EQ(fresh.s2, orc::Int(sig.sigma2.log()));

    std::vector<orc::Int> c;
    for (const auto& ci :
         index_commitments<M>(kp.pk, d.sigma1, d.sigma2, d.sigma_tilde, I)) {
      c.emplace_back(ci.value());
    }
    const auto want = orc::derive(key, fresh, mi,
                                  std::vector<unsigned>(kept.begin(), kept.end()),
                                  r.value(), t.value(), c);
    const auto got = logs_of(d);
    ASSERT_EQ(got.s1, want.s1);
    ASSERT_EQ(got.s2, want.s2);
    ASSERT_EQ(got.s3, want.s3);
    ASSERT_EQ(got.st, want.st);

    std::map<unsigned, orc::Int> disclosed;
    for (auto i : kept) disclosed.emplace(i, mi[i - 1]);
    const std::vector<unsigned> ks(kept.begin(), kept.end());
    ASSERT_TRUE(orc::equation1(key, got, disclosed));
    ASSERT_TRUE(orc::equation2(key, got, ks, c));

    // Perturbing any exponent by one breaks at least one equation.
    for (int which = 0; which < 4; ++which) {
      auto bad = got;
      orc::Int* field[] = {&bad.s1, &bad.s2, &bad.s3, &bad.st};
      *field[which] = orc::mod(*field[which] + 1);
      ASSERT_FALSE(orc::equation1(key, bad, disclosed) &&
                   orc::equation2(key, bad, ks, c))
          << "component " << which;
    }
  }
}

// Serialized layout pinned byte-for-byte, spelled out independently of the
// writer: magic | descriptor | n | elements.
TEST(RssMockTest, GoldenSignatureBytes) {
  const auto kp = small_key(2);
  const auto sig = sign_with_base<M>(kp.sk, scalars({7, 4}), M::G1::generator());
  const std::string descriptor =
      "0c" + to_hex(as_bytes("mock-exp-p61")) + "08" + "1fffffffffffffff" +
      "0008" "0008" "0008";
  const std::string expected = to_hex(as_bytes("RSS-SIG1")) + descriptor +
                               "00000002" + "0000000000000001" +
                               "000000000000008a" + "0000000000000000" +
                               "0000000000000000";
  EXPECT_EQ(to_hex(encode(sig)), expected);
}

TEST(RssMockTest, GoldenPublicKeyBytes) {
  const auto kp = small_key(2);
  const std::string descriptor =
      "0c" + to_hex(as_bytes("mock-exp-p61")) + "08" + "1fffffffffffffff" +
      "0008" "0008" "0008";
  const std::string expected =
      to_hex(as_bytes("RSS-PUB1")) + descriptor + "00000002" + "10" +
      to_hex(as_bytes("rsscred/rss/c/v1")) +
      "0000000000000001" +                                        // g1
      "0000000000000001" +                                        // g2
      "0000000000000005" "0000000000000019" "0000000000000271" +  // Y1 Y2 Y4
      "0000000000000003" +                                        // X'
      "0000000000000005" "0000000000000019";                      // Y'1 Y'2
  EXPECT_EQ(to_hex(encode(kp.pk)), expected);
}

}  // namespace
}  // namespace rsscred::rss
