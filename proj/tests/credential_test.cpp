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


#include "rsscred/credential.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "rsscred/errors.hpp"
#include "test_util.hpp"

namespace rsscred::credential {
namespace {

std::string sample_text() {
  std::ifstream in(std::string(RSSCRED_TEST_DATA) + "/sample_credential.json");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> paths_of(const Credential& c) {
  std::vector<std::string> out;
  for (const auto& a : c.attributes) out.push_back(a.path);
  return out;
}

TEST(CanonicalizeTest, SampleFlattensToFiveSortedPaths) {
  const auto c = parse_credential(sample_text());
  EXPECT_TRUE(c.wrapped);
  EXPECT_EQ(paths_of(c),
            (std::vector<std::string>{"address.country", "address.postcode",
                                      "address.street", "birthDate", "name"}));
  EXPECT_EQ(c.index_of("name"), 5u);
  EXPECT_EQ(c.index_of("address.country"), 1u);
  EXPECT_FALSE(c.index_of("address").has_value());
  EXPECT_FALSE(c.metadata.contains("credentialSubject"));
  EXPECT_TRUE(c.metadata.contains("issuer"));
}

TEST(CanonicalizeTest, KeyOrderDoesNotMatter) {
  const auto a = parse_credential(
      R"({"credentialSubject": {"b": "2", "a": {"y": "1", "x": "0"}}, "id": "u"})");
  const auto b = parse_credential(
      R"({"id": "u", "credentialSubject": {"a": {"x": "0", "y": "1"}, "b": "2"}})");
  EXPECT_EQ(a, b);
}

TEST(CanonicalizeTest, UnwrappedDocumentIsTheClaimSet) {
  const auto c = parse_credential(R"({"name": "Bob", "age": 42, "ok": true})");
  EXPECT_FALSE(c.wrapped);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.attributes[0], (Attribute{"age", "42"}));
  EXPECT_EQ(c.attributes[1], (Attribute{"name", "Bob"}));
  EXPECT_EQ(c.attributes[2], (Attribute{"ok", "true"}));
}

TEST(CanonicalizeTest, DocumentRoundTripsAfterCanonicalization) {
  const auto c = parse_credential(sample_text());
  EXPECT_EQ(canonicalize(c.to_document()), c);
  EXPECT_EQ(c.to_document().dump(), canonicalize(c.to_document()).to_document().dump());
}

TEST(CanonicalizeTest, RejectsUnsupportedShapes) {
  EXPECT_THROW(parse_credential("{}"), CodecError);
  EXPECT_THROW(parse_credential(R"({"credentialSubject": {}})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"a": null})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"a": [1, 2]})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"a": {}})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"a.b": "x"})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"": "x"})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"a": "1", "a": "2"})"), CodecError);
  EXPECT_THROW(parse_credential(R"({"credentialSubject": "x"})"), CodecError);
  EXPECT_THROW(parse_credential("[1]"), CodecError);
  EXPECT_THROW(parse_credential("{not json"), CodecError);
}

// --- attribute encoding ---------------------------------------------------------

TEST(EncodeAttributeTest, DeterministicAndPathBound) {
  const Attribute a{"name", "Alice"};
  EXPECT_EQ(encode_attribute<MockBackend>(a), encode_attribute<MockBackend>(a));
  EXPECT_NE(encode_attribute<MockBackend>(a),
            encode_attribute<MockBackend>({"nickname", "Alice"}));
  EXPECT_NE(encode_attribute<MockBackend>(a),
            encode_attribute<MockBackend>({"name", "Alicf"}));
  // The separator keeps (path, value) splits apart.
  EXPECT_NE(encode_attribute<MockBackend>({"ab", "c"}),
            encode_attribute<MockBackend>({"a", "bc"}));
}

// Recomputed with hashlib in tests/oracle/derive_vectors.py.
TEST(EncodeAttributeTest, RegressionVectors) {
  EXPECT_EQ(encode_attribute<MockBackend>({"name", "Alice Example"}).value(),
            0x14d7af59bdaee80eu);
  EXPECT_EQ(encode_attribute<MockBackend>({"address.country", "United Kingdom"}).value(),
            0xfee0b0ade8468a2u);
  EXPECT_EQ(to_hex(encode_attribute<Bls12381>({"name", "Alice Example"}).to_bytes()),
            "1ed161f87a14c79ce4590ee19e491a9d1b420e98783844d94b320a35ce789c4f");
}

// --- redaction ------------------------------------------------------------------

TEST(RedactionPolicyTest, ResolvesToSortedPathIndices) {
  const auto c = parse_credential(sample_text());
  const auto I = RedactionPolicy::keep({"name", "address.country"}).resolve(c);
  EXPECT_EQ(std::vector<std::uint32_t>(I.indices().begin(), I.indices().end()),
            (std::vector<std::uint32_t>{1, 5}));
  const auto J = RedactionPolicy::drop({"name", "birthDate"}).resolve(c);
  EXPECT_EQ(std::vector<std::uint32_t>(J.indices().begin(), J.indices().end()),
            (std::vector<std::uint32_t>{1, 2, 3}));
}

TEST(RedactionPolicyTest, RejectsUnknownAndEmpty) {
  const auto c = parse_credential(sample_text());
  EXPECT_THROW(RedactionPolicy::keep({"shoeSize"}).resolve(c), CodecError);
  EXPECT_THROW(RedactionPolicy::keep({}).resolve(c), CodecError);
  EXPECT_THROW(RedactionPolicy::drop(paths_of(c)).resolve(c), CodecError);
}

template <class B>
class RedactTest : public ::testing::Test {
 protected:
  void SetUp() override {
    cred_ = parse_credential(sample_text());
    kp_ = rss::keygen<B>(static_cast<std::uint32_t>(cred_.size()), rng_);
    sig_ = rss::sign<B>(kp_.sk, encode_attributes<B>(cred_), rng_);
  }

  SeededRandom rng_{51};
  Credential cred_;
  rss::KeyPair<B> kp_;
  rss::Signature<B> sig_;
};

TYPED_TEST_SUITE(RedactTest, testing::Backends, testing::BackendNames);

TYPED_TEST(RedactTest, NameAndCountryScenario) {
  const auto rc = redact<TypeParam>(this->cred_, this->sig_,
                                    RedactionPolicy::keep({"name", "address.country"}),
                                    this->kp_.pk, this->rng_);
  ASSERT_EQ(rc.disclosed.size(), 2u);
  EXPECT_EQ(rc.disclosed[0].first, 1u);
  EXPECT_EQ(rc.disclosed[0].second.value, "United Kingdom");
  EXPECT_EQ(rc.disclosed[1].first, 5u);
  EXPECT_EQ(rc.disclosed[1].second.value, "Alice Example");
  EXPECT_TRUE(verify_credential<TypeParam>(rc, this->kp_.pk));

  const auto doc = rc.to_document();
  EXPECT_EQ(doc["credentialSubject"]["address"].size(), 1u);
  EXPECT_FALSE(doc["credentialSubject"].contains("birthDate"));
  EXPECT_EQ(doc["issuer"], this->cred_.metadata["issuer"]);
}

TYPED_TEST(RedactTest, KeepAllMatchesOriginalContent) {
  std::vector<std::string> all = paths_of(this->cred_);
  const auto rc = redact<TypeParam>(this->cred_, this->sig_, RedactionPolicy::keep(all),
                                    this->kp_.pk, this->rng_);
  EXPECT_EQ(canonicalize(rc.to_document()), this->cred_);
  EXPECT_NE(rc.signature, this->sig_);
  EXPECT_TRUE(verify_credential<TypeParam>(rc, this->kp_.pk));
}

TYPED_TEST(RedactTest, JsonFormRoundTrips) {
  const auto rc = redact<TypeParam>(this->cred_, this->sig_,
                                    RedactionPolicy::keep({"birthDate"}), this->kp_.pk,
                                    this->rng_);
  const auto text = rc.to_json().dump();
  const auto back = RedactedCredential<TypeParam>::from_json(Json::parse(text));
  EXPECT_EQ(back.disclosed, rc.disclosed);
  EXPECT_EQ(back.n, rc.n);
  EXPECT_EQ(back.signature, rc.signature);
  EXPECT_EQ(back.metadata, rc.metadata);
  EXPECT_TRUE(verify_credential<TypeParam>(back, this->kp_.pk));
}

TYPED_TEST(RedactTest, AttacksAreRejected) {
  const auto rc = redact<TypeParam>(this->cred_, this->sig_,
                                    RedactionPolicy::keep({"name", "address.country"}),
                                    this->kp_.pk, this->rng_);
  auto swapped = rc;
  std::swap(swapped.disclosed[0].second.value, swapped.disclosed[1].second.value);
  EXPECT_FALSE(verify_credential<TypeParam>(swapped, this->kp_.pk));

  auto edited = rc;
  edited.disclosed[0].second.value = "France";
  EXPECT_FALSE(verify_credential<TypeParam>(edited, this->kp_.pk));

  auto wrong_n = rc;
  wrong_n.n = 6;
  const auto r = verify_credential<TypeParam>(wrong_n, this->kp_.pk);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.diagnostic.empty());

  auto bad_index = rc;
  bad_index.disclosed[1].first = 9;
  EXPECT_FALSE(verify_credential<TypeParam>(bad_index, this->kp_.pk));

  auto repeated = rc;
  repeated.disclosed[1].first = 1;
  EXPECT_FALSE(verify_credential<TypeParam>(repeated, this->kp_.pk));

  auto empty = rc;
  empty.disclosed.clear();
  EXPECT_FALSE(verify_credential<TypeParam>(empty, this->kp_.pk));
}

TYPED_TEST(RedactTest, RejectsWrongSignatureAndSizeMismatch) {
  auto other = this->cred_;
  other.attributes[3].value = "1991-01-01";
  EXPECT_THROW(redact<TypeParam>(other, this->sig_, RedactionPolicy::keep({"name"}),
                                 this->kp_.pk, this->rng_),
               SignatureError);
  auto fewer = this->cred_;
  fewer.attributes.pop_back();
  EXPECT_THROW(redact<TypeParam>(fewer, this->sig_, RedactionPolicy::keep({"name"}),
                                 this->kp_.pk, this->rng_),
               InvalidParameter);
  EXPECT_THROW(redact<TypeParam>(this->cred_, this->sig_, RedactionPolicy::keep({}),
                                 this->kp_.pk, this->rng_),
               CodecError);
}

TEST(RedactedJsonTest, StructuralErrors) {
  using RC = RedactedCredential<MockBackend>;
  EXPECT_THROW(RC::from_json(Json::array()), CodecError);
  EXPECT_THROW(RC::from_json(Json{{"n", 1}}), CodecError);
  EXPECT_THROW(RC::from_json(Json{{"n", -1},
                                  {"indices", Json::array()},
                                  {"document", Json::object()},
                                  {"signature", ""}}),
               CodecError);
}

// --- properties over random credentials ---------------------------------------

// Random claim set with `n` unique leaves, some nested one level deep.
Json random_claims(std::size_t n, std::mt19937_64& gen) {
  static const char* kValues[] = {"", "x", "Zoë", "12 Main St", "1990-01-01",
                                  "a\"quote", "日本"};
  Json claims = Json::object();
  for (std::size_t k = 0; k < n; ++k) {
    const std::string leaf = "f" + std::to_string(gen() % 1000) + "_" + std::to_string(k);
    const std::string value = kValues[gen() % 7] + std::to_string(gen() % 100);
    if (gen() % 3 == 0) {
      claims["grp" + std::to_string(gen() % 2)][leaf] = value;
    } else {
      claims[leaf] = value;
    }
  }
  return claims;
}

TEST(CredentialPropertyTest, RandomCredentialsRoundTripThroughKeepAll) {
  std::mt19937_64 gen(61);
  SeededRandom rng(61);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 8;
    const Json doc = {{"id", "urn:x:" + std::to_string(k)},
                      {"credentialSubject", random_claims(n, gen)}};
    const auto c = canonicalize(doc);
    ASSERT_EQ(c.size(), n);
    EXPECT_EQ(canonicalize(Json::parse(c.to_document().dump())), c);

    const auto kp = rss::keygen<MockBackend>(static_cast<std::uint32_t>(n), rng);
    const auto sig = rss::sign<MockBackend>(kp.sk, encode_attributes<MockBackend>(c), rng);
    const auto rc = redact<MockBackend>(c, sig, RedactionPolicy::keep(paths_of(c)), kp.pk,
                                        rng);
    ASSERT_TRUE(verify_credential<MockBackend>(rc, kp.pk)) << doc.dump();
  }
}

TEST(CredentialPropertyTest, DisclosedSetEqualsKeepSet) {
  std::mt19937_64 gen(62);
  SeededRandom rng(62);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 1 + k % 8;
    const auto c = canonicalize(random_claims(n, gen));
    const auto kp = rss::keygen<MockBackend>(static_cast<std::uint32_t>(n), rng);
    const auto sig = rss::sign<MockBackend>(kp.sk, encode_attributes<MockBackend>(c), rng);
    std::set<std::string> keep;
    for (auto i : testing::random_subset(static_cast<std::uint32_t>(n), gen)) {
      keep.insert(c.attributes[i - 1].path);
    }
    const auto rc = redact<MockBackend>(
        c, sig, RedactionPolicy::keep({keep.begin(), keep.end()}), kp.pk, rng);
    std::set<std::string> got;
    for (const auto& [i, a] : rc.disclosed) {
      got.insert(a.path);
      EXPECT_EQ(c.attributes[i - 1], a);
    }
    EXPECT_EQ(got, keep);
    EXPECT_TRUE(verify_credential<MockBackend>(rc, kp.pk));
  }
}

TEST(CredentialPropertyTest, InsertingAnAttributeShiftsOnlyLaterIndices) {
  std::mt19937_64 gen(63);
  for (int k = 0; k < 50; ++k) {
    Json claims = random_claims(1 + k % 7, gen);
    const auto before = canonicalize(claims);
    const std::string added = "f" + std::to_string(gen() % 1000) + "_new";
    claims[added] = "v";
    const auto after = canonicalize(claims);
    const auto pos = *after.index_of(added);
    for (std::uint32_t i = 1; i <= before.size(); ++i) {
      const auto& path = before.attributes[i - 1].path;
      EXPECT_EQ(*after.index_of(path), i < pos ? i : i + 1) << path;
    }
  }
}

}  // namespace
}  // namespace rsscred::credential
