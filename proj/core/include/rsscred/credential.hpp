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

// Mapping between credential documents and the ordered scalar vector the
// redactable signature signs.
//
// A credential document is a JSON object. When it has a "credentialSubject"
// member, that object holds the claims and every other top-level member is
// carried along as metadata (not signed). Otherwise the whole object is the
// claim set. Claims are flattened to dotted paths
// ({"address": {"country": "UK"}} -> "address.country") and sorted
// byte-wise by path; position i in that order is message index i + 1.
// Inserting a new attribute therefore shifts only the indices at or after
// its sorted position.
//
// Leaves must be strings, numbers or booleans; the latter two are signed
// as their JSON text. Arrays, nulls, empty objects, and keys that are empty
// or contain '.' or NUL are rejected.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsscred/backend.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/rss.hpp"
#include "rsscred/rss_wire.hpp"

namespace rsscred::credential {

using Json = nlohmann::json;

inline constexpr std::string_view kSubjectKey = "credentialSubject";
inline constexpr std::string_view kAttributeTag = "attr";

struct Attribute {
  std::string path;
  std::string value;

  auto operator<=>(const Attribute&) const = default;
};

struct Credential {
  // Top-level members other than the subject, verbatim.
  Json metadata = Json::object();
  // Whether claims live under "credentialSubject".
  bool wrapped = false;
  // Sorted by path, paths unique.
  std::vector<Attribute> attributes;

  std::size_t size() const { return attributes.size(); }
  // 1-based position of `path`, if present.
  std::optional<std::uint32_t> index_of(std::string_view path) const;
  // Issuer identifier from metadata ("issuer" string or "issuer.id").
  std::string issuer() const;

  Json to_document() const;

  bool operator==(const Credential&) const = default;
};

// Throws CodecError for non-object input, duplicate paths, bad leaves or
// an empty claim set.
Credential canonicalize(const Json& document);

// Parses JSON text (rejecting duplicate keys) and canonicalizes it.
// Throws CodecError on malformed JSON.
Credential parse_credential(std::string_view text);

// Sorted claim list of an object, with the same rules as canonicalize.
std::vector<Attribute> flatten_claims(const Json& claims);

// Inverse of flatten_claims.
Json unflatten_claims(std::span<const Attribute> attributes);

template <PairingBackend B>
typename B::Scalar encode_attribute(const Attribute& a) {
  Bytes payload;
  payload.reserve(a.path.size() + 1 + a.value.size());
  payload.insert(payload.end(), a.path.begin(), a.path.end());
  payload.push_back(0x00);
  payload.insert(payload.end(), a.value.begin(), a.value.end());
  return hash_to_scalar<B>(kAttributeTag, payload);
}

template <PairingBackend B>
std::vector<typename B::Scalar> encode_attributes(const Credential& c) {
  std::vector<typename B::Scalar> out;
  out.reserve(c.attributes.size());
  for (const auto& a : c.attributes) out.push_back(encode_attribute<B>(a));
  return out;
}

// Which attributes survive redaction, either as the paths to keep or as
// the paths to drop.
class RedactionPolicy {
 public:
  static RedactionPolicy keep(std::vector<std::string> paths) {
    return RedactionPolicy(true, std::move(paths));
  }
  static RedactionPolicy drop(std::vector<std::string> paths) {
    return RedactionPolicy(false, std::move(paths));
  }

  // Throws CodecError for a path not in `c` or when nothing is kept.
  rss::IndexSet resolve(const Credential& c) const;

  bool is_keep_list() const { return keep_; }
  const std::vector<std::string>& paths() const { return paths_; }

 private:
  RedactionPolicy(bool keep, std::vector<std::string> paths)
      : keep_(keep), paths_(std::move(paths)) {}

  bool keep_;
  std::vector<std::string> paths_;
};

template <PairingBackend B>
struct RedactedCredential {
  Json metadata = Json::object();
  bool wrapped = false;
  // (original 1-based index, attribute), ascending by index.
  std::vector<std::pair<std::uint32_t, Attribute>> disclosed;
  std::uint32_t n = 0;
  rss::Signature<B> signature;

  // The credential document restricted to the disclosed claims.
  Json to_document() const;

  // {"n": n, "indices": [...], "document": {...}, "signature": "<base64>"}.
  // The i-th index belongs to the i-th disclosed claim in sorted-path order.
  Json to_json() const;
  // Throws CodecError on structural problems and DecodeError /
  // CompatibilityError on a bad signature block.
  static RedactedCredential from_json(const Json& j);
};

template <PairingBackend B>
Json RedactedCredential<B>::to_document() const {
  std::vector<Attribute> attrs;
  attrs.reserve(disclosed.size());
  for (const auto& [i, a] : disclosed) attrs.push_back(a);
  auto claims = unflatten_claims(attrs);
  if (!wrapped) return claims;
  Json doc = metadata;
  doc[std::string(kSubjectKey)] = std::move(claims);
  return doc;
}

template <PairingBackend B>
Json RedactedCredential<B>::to_json() const {
  Json indices = Json::array();
  for (const auto& [i, a] : disclosed) indices.push_back(i);
  return Json{{"n", n},
              {"indices", std::move(indices)},
              {"document", to_document()},
              {"signature", to_base64(rss::encode(signature))}};
}

namespace detail {
// Splits a redacted-credential JSON object into its parts; shared by all
// backends.
struct RedactedParts {
  Json metadata;
  bool wrapped = false;
  std::vector<Attribute> claims;
  std::vector<std::uint32_t> indices;
  std::uint32_t n = 0;
  Bytes signature;
};
RedactedParts split_redacted(const Json& j);
}  // namespace detail

template <PairingBackend B>
RedactedCredential<B> RedactedCredential<B>::from_json(const Json& j) {
  auto parts = detail::split_redacted(j);
  RedactedCredential<B> rc;
  rc.metadata = std::move(parts.metadata);
  rc.wrapped = parts.wrapped;
  rc.n = parts.n;
  for (std::size_t k = 0; k < parts.claims.size(); ++k) {
    rc.disclosed.emplace_back(parts.indices[k], std::move(parts.claims[k]));
  }
  rc.signature = rss::decode_signature<B>(parts.signature);
  return rc;
}

// Derives a signature on the attributes `policy` keeps. Only the issuer's
// public key is needed. Throws CodecError for policy problems and
// SignatureError when `issuer_sig` is not a valid fresh signature on `c`.
template <PairingBackend B>
RedactedCredential<B> redact(const Credential& c,
                             const rss::Signature<B>& issuer_sig,
                             const RedactionPolicy& policy,
                             const rss::PublicKey<B>& pk, RandomSource& rng) {
  if (c.size() != pk.n) {
    throw InvalidParameter("credential has " + std::to_string(c.size()) +
                           " attributes, key expects " + std::to_string(pk.n));
  }
  const auto retained = policy.resolve(c);
  const auto messages = encode_attributes<B>(c);

  rss::Disclosure<B> everything;
  for (std::uint32_t i = 1; i <= pk.n; ++i) everything.emplace(i, messages[i - 1]);
  if (!issuer_sig.is_fresh() || !rss::verify<B>(pk, issuer_sig, everything)) {
    throw SignatureError("issuer signature does not verify for this credential");
  }

  RedactedCredential<B> rc;
  rc.metadata = c.metadata;
  rc.wrapped = c.wrapped;
  rc.n = pk.n;
  for (auto i : retained.indices()) rc.disclosed.emplace_back(i, c.attributes[i - 1]);
  rc.signature = rss::derive<B>(pk, issuer_sig, messages, retained, rng);
  return rc;
}

struct VerifyResult {
  bool accepted = false;
  std::string diagnostic;

  explicit operator bool() const { return accepted; }
};

template <PairingBackend B>
VerifyResult verify_credential(const RedactedCredential<B>& rc,
                               const rss::PublicKey<B>& pk) {
  if (rc.n != pk.n) {
    return {false, "credential claims n = " + std::to_string(rc.n) +
                       " but the key is for n = " + std::to_string(pk.n)};
  }
  rss::Disclosure<B> disclosed;
  for (const auto& [i, a] : rc.disclosed) {
    if (i == 0 || i > pk.n) {
      return {false, "disclosed index " + std::to_string(i) + " outside [1, " +
                         std::to_string(pk.n) + "]"};
    }
    if (!disclosed.emplace(i, encode_attribute<B>(a)).second) {
      return {false, "disclosed index " + std::to_string(i) + " repeated"};
    }
  }
  if (disclosed.empty()) return {false, "no attributes disclosed"};
  if (!rss::verify<B>(pk, rc.signature, disclosed)) {
    return {false, "signature does not verify for the disclosed attributes"};
  }
  return {true, {}};
}

}  // namespace rsscred::credential
