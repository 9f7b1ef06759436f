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

#include <algorithm>
#include <set>

namespace rsscred::credential {
namespace {

void check_key(const std::string& key, const std::string& prefix) {
  if (key.empty()) throw CodecError("empty key under '" + prefix + "'");
  if (key.find('.') != std::string::npos) {
    throw CodecError("key '" + key + "' contains '.'");
  }
  if (key.find('\0') != std::string::npos) {
    throw CodecError("key under '" + prefix + "' contains NUL");
  }
}

void flatten_into(const Json& obj, const std::string& prefix,
                  std::vector<Attribute>& out) {
  if (obj.empty()) {
    throw CodecError("empty object at '" + (prefix.empty() ? "<root>" : prefix) +
                     "'");
  }
  for (const auto& [key, value] : obj.items()) {
    check_key(key, prefix);
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    switch (value.type()) {
      case Json::value_t::object:
        flatten_into(value, path, out);
        break;
      case Json::value_t::string:
        out.push_back({path, value.get<std::string>()});
        break;
      case Json::value_t::number_integer:
      case Json::value_t::number_unsigned:
      case Json::value_t::number_float:
      case Json::value_t::boolean:
        out.push_back({path, value.dump()});
        break;
      default:
        throw CodecError("attribute '" + path + "' is not a string, number or "
                         "boolean");
    }
  }
}

}  // namespace

std::vector<Attribute> flatten_claims(const Json& claims) {
  if (!claims.is_object()) throw CodecError("claims must be a JSON object");
  std::vector<Attribute> out;
  flatten_into(claims, "", out);
  std::ranges::sort(out);
  const auto dup = std::ranges::adjacent_find(
      out, [](const auto& a, const auto& b) { return a.path == b.path; });
  if (dup != out.end()) throw CodecError("duplicate attribute path '" + dup->path + "'");
  return out;
}

Json unflatten_claims(std::span<const Attribute> attributes) {
  Json root = Json::object();
  for (const auto& a : attributes) {
    Json* node = &root;
    std::size_t start = 0;
    for (;;) {
      const auto dot = a.path.find('.', start);
      const auto key = a.path.substr(start, dot - start);
      if (dot == std::string::npos) {
        (*node)[key] = a.value;
        break;
      }
      node = &(*node)[key];
      start = dot + 1;
    }
  }
  return root;
}

std::optional<std::uint32_t> Credential::index_of(std::string_view path) const {
  const auto it = std::ranges::lower_bound(attributes, path, {}, &Attribute::path);
  if (it == attributes.end() || it->path != path) return std::nullopt;
  return static_cast<std::uint32_t>(it - attributes.begin() + 1);
}

std::string Credential::issuer() const {
  const auto it = metadata.find("issuer");
  if (it == metadata.end()) return {};
  if (it->is_string()) return it->get<std::string>();
  if (it->is_object() && it->contains("id") && (*it)["id"].is_string()) {
    return (*it)["id"].get<std::string>();
  }
  return {};
}

Json Credential::to_document() const {
  auto claims = unflatten_claims(attributes);
  if (!wrapped) return claims;
  Json doc = metadata;
  doc[std::string(kSubjectKey)] = std::move(claims);
  return doc;
}

Credential canonicalize(const Json& document) {
  if (!document.is_object()) throw CodecError("credential must be a JSON object");
  Credential c;
  const auto subject = document.find(std::string(kSubjectKey));
  if (subject != document.end()) {
    if (!subject->is_object()) {
      throw CodecError("credentialSubject must be a JSON object");
    }
    c.wrapped = true;
    c.metadata = document;
    c.metadata.erase(std::string(kSubjectKey));
    c.attributes = flatten_claims(*subject);
  } else {
    c.attributes = flatten_claims(document);
  }
  if (c.attributes.empty()) throw CodecError("credential has no attributes");
  return c;
}

Credential parse_credential(std::string_view text) {
  // Tracks the keys seen in each open object so duplicates can be rejected;
  // nlohmann keeps only the last value otherwise.
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        open.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        if (!open.empty()) open.pop_back();
        break;
      case Json::parse_event_t::key:
        if (!open.back().insert(parsed.get<std::string>()).second &&
            duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::parse_error& e) {
    throw CodecError(std::string("malformed JSON: ") + e.what());
  }
  if (!duplicate.empty()) throw CodecError("duplicate key '" + duplicate + "'");
  return canonicalize(doc);
}

rss::IndexSet RedactionPolicy::resolve(const Credential& c) const {
  std::set<std::uint32_t> named;
  for (const auto& p : paths_) {
    const auto idx = c.index_of(p);
    if (!idx) throw CodecError("unknown attribute path '" + p + "'");
    named.insert(*idx);
  }
  std::vector<std::uint32_t> kept;
  if (keep_) {
    kept.assign(named.begin(), named.end());
  } else {
    for (std::uint32_t i = 1; i <= c.size(); ++i) {
      if (!named.contains(i)) kept.push_back(i);
    }
  }
  if (kept.empty()) throw CodecError("redaction policy keeps no attributes");
  return rss::IndexSet::of(std::move(kept), static_cast<std::uint32_t>(c.size()));
}

namespace detail {

RedactedParts split_redacted(const Json& j) {
  if (!j.is_object()) throw CodecError("redacted credential must be an object");
  for (const char* key : {"n", "indices", "document", "signature"}) {
    if (!j.contains(key)) {
      throw CodecError(std::string("redacted credential lacks '") + key + "'");
    }
  }
  RedactedParts parts;
  if (!j["n"].is_number_unsigned()) throw CodecError("'n' must be an unsigned integer");
  const auto n = j["n"].get<std::uint64_t>();
  if (n > UINT32_MAX) throw CodecError("'n' out of range");
  parts.n = static_cast<std::uint32_t>(n);

  if (!j["indices"].is_array()) throw CodecError("'indices' must be an array");
  for (const auto& v : j["indices"]) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > UINT32_MAX) {
      throw CodecError("'indices' entries must be unsigned 32-bit integers");
    }
    parts.indices.push_back(v.get<std::uint32_t>());
  }

  const Json& doc = j["document"];
  if (!doc.is_object()) throw CodecError("'document' must be an object");
  const auto subject = doc.find(std::string(kSubjectKey));
  if (subject != doc.end()) {
    parts.wrapped = true;
    parts.metadata = doc;
    parts.metadata.erase(std::string(kSubjectKey));
    parts.claims = flatten_claims(*subject);
  } else {
    parts.metadata = Json::object();
    parts.claims = flatten_claims(doc);
  }
  if (parts.claims.size() != parts.indices.size()) {
    throw CodecError("document discloses " + std::to_string(parts.claims.size()) +
                     " attributes but " + std::to_string(parts.indices.size()) +
                     " indices are listed");
  }

  if (!j["signature"].is_string()) throw CodecError("'signature' must be a string");
  try {
    parts.signature = from_base64(j["signature"].get<std::string>());
  } catch (const DecodeError& e) {
    throw CodecError(std::string("signature block: ") + e.what());
  }
  return parts;
}

}  // namespace detail
}  // namespace rsscred::credential
