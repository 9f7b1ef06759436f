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

#include "commands.hpp"

#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>

#include "keystore.hpp"
#include "rsscred/bench.hpp"
#include "rsscred/bls12_381.hpp"
#include "rsscred/credential.hpp"
#include "rsscred/mock_backend.hpp"
#include "rsscred/rss.hpp"
#include "rsscred/rss_wire.hpp"

namespace rsscred::cli {
namespace {

using Json = nlohmann::json;
namespace fs = std::filesystem;

std::unique_ptr<RandomSource> make_rng(const GlobalOptions& g) {
  if (g.seed) return std::make_unique<SeededRandom>(*g.seed);
  return std::make_unique<OsRandom>();
}

// Calls f.template operator()<B>() for the backend called `name`.
template <class F>
decltype(auto) with_backend(std::string_view name, int unknown_code, F&& f) {
  if (name == Bls12381::descriptor().name) {
    return f.template operator()<Bls12381>();
  }
#ifdef RSSCRED_TEST_FEATURES
  if (name == MockBackend::descriptor().name) {
    return f.template operator()<MockBackend>();
  }
#endif
  throw Failure{unknown_code, "unsupported backend '" + std::string(name) + "'"};
}

std::string backend_of(ByteSpan bytes, std::string_view magic) {
  try {
    return wire::peek_backend(bytes, magic).name;
  } catch (const DecodeError& e) {
    throw Failure{kMalformedInput, e.what()};
  }
}

// Maps library exceptions that escape a command to exit codes.
template <class F>
int guarded(const GlobalOptions& g, F&& body) {
  int code = kOk;
  std::string message;
  try {
    return body();
  } catch (const Failure& f) {
    code = f.code;
    message = f.message;
  } catch (const InvalidParameter& e) {
    code = kInvalidArgument;
    message = e.what();
  } catch (const ConfigError& e) {
    code = kInvalidArgument;
    message = e.what();
  } catch (const SignatureError& e) {
    code = kBadSignature;
    message = e.what();
  } catch (const CodecError& e) {
    code = kMalformedInput;
    message = e.what();
  } catch (const DecodeError& e) {
    code = kMalformedInput;
    message = e.what();
  } catch (const CompatibilityError& e) {
    code = kMalformedInput;
    message = e.what();
  }
  if (g.json) {
    std::cout << Json{{"status", "error"}, {"exit_code", code}, {"message", message}}
                     .dump()
              << std::endl;
  } else {
    std::cerr << "rsscred: " << message << std::endl;
  }
  return code;
}

void emit(const GlobalOptions& g, const Json& j, const std::string& human) {
  if (g.json) {
    std::cout << j.dump() << std::endl;
  } else {
    std::cout << human;
  }
}

credential::Credential load_credential(const fs::path& path) {
  const auto text = read_text(path);
  try {
    return credential::parse_credential(text);
  } catch (const CodecError& e) {
    throw Failure{kMalformedInput, path.string() + ": " + e.what()};
  }
}

template <PairingBackend B>
rss::PublicKey<B> load_public_key(const fs::path& path, ByteSpan bytes) {
  try {
    return rss::decode_public_key<B>(bytes);
  } catch (const Error& e) {
    throw Failure{kMalformedInput, path.string() + ": " + e.what()};
  }
}

}  // namespace

int run_keygen(const GlobalOptions& g, const KeygenOptions& o) {
  return guarded(g, [&] {
    if (o.attributes == 0) {
      throw Failure{kInvalidArgument, "--attributes must be at least 1"};
    }
    const fs::path keyfile = o.out.value_or(keystore_home() / "issuer.key");
    fs::path pubfile = keyfile;
    pubfile += ".pub";

    return with_backend(o.backend, kInvalidArgument, [&]<class B>() {
      auto rng = make_rng(g);
      const auto kp = rss::keygen<B>(o.attributes, *rng);

      KeystoreEntry entry;
      entry.backend = B::descriptor().name;
      entry.n = o.attributes;
      entry.secret_key = rss::encode(kp.sk);
      entry.public_key = rss::encode(kp.pk);
      entry.key_id = key_id_for(entry.public_key);
      entry.created_at = utc_timestamp();
      write_keystore(keyfile, entry);
      write_file(pubfile, entry.public_key);

      const Json j = {{"status", "ok"},
                      {"command", "keygen"},
                      {"backend", entry.backend},
                      {"key_id", entry.key_id},
                      {"n", entry.n},
                      {"g1_key_elements", kp.pk.y_g1.size()},
                      {"keyfile", keyfile.string()},
                      {"public_key", pubfile.string()},
                      {"public_key_bytes", entry.public_key.size()},
                      {"secret_key_bytes", entry.secret_key.size()}};
      emit(g, j,
           "key id:      " + entry.key_id + "\nkeyfile:     " + keyfile.string() +
               "\npublic key:  " + pubfile.string() + " (" +
               std::to_string(entry.public_key.size()) + " bytes)\nsecret key:  " +
               std::to_string(entry.secret_key.size()) + " bytes, n = " +
               std::to_string(entry.n) + "\n");
      return static_cast<int>(kOk);
    });
  });
}

int run_issue(const GlobalOptions& g, const IssueOptions& o) {
  return guarded(g, [&] {
    const fs::path keyfile = o.key.value_or(keystore_home() / "issuer.key");
    const auto entry = read_keystore(keyfile);
    const auto cred = load_credential(o.credential);

    return with_backend(entry.backend, kMalformedInput, [&]<class B>() {
      rss::SecretKey<B> sk;
      try {
        sk = rss::decode_secret_key<B>(entry.secret_key);
      } catch (const Error& e) {
        throw Failure{kMalformedInput, keyfile.string() + ": " + e.what()};
      }
      if (cred.size() != sk.n) {
        throw Failure{kInvalidArgument,
                      "credential has " + std::to_string(cred.size()) +
                          " attributes but the key signs " + std::to_string(sk.n)};
      }
      auto rng = make_rng(g);
      const auto sig = rss::sign<B>(sk, credential::encode_attributes<B>(cred), *rng);
      const auto bytes = rss::encode(sig);
      write_file(o.out, bytes);

      Json paths = Json::array();
      for (const auto& a : cred.attributes) paths.push_back(a.path);
      emit(g,
           {{"status", "ok"},
            {"command", "issue"},
            {"signature", o.out.string()},
            {"signature_bytes", bytes.size()},
            {"attributes", paths}},
           "signed " + std::to_string(cred.size()) + " attributes -> " +
               o.out.string() + " (" + std::to_string(bytes.size()) + " bytes)\n");
      return static_cast<int>(kOk);
    });
  });
}

int run_redact(const GlobalOptions& g, const RedactOptions& o) {
  return guarded(g, [&] {
    std::vector<std::string> keep;
    for (const auto& p : o.keep) {
      if (!p.empty()) keep.push_back(p);
    }
    if (keep.empty()) throw Failure{kInvalidArgument, "--keep names no attributes"};

    const auto pub_bytes = read_file(o.pub);
    const auto backend = backend_of(pub_bytes, rss::kPublicKeyMagic);
    const auto cred = load_credential(o.credential);
    const auto sig_bytes = read_file(o.sig);

    return with_backend(backend, kMalformedInput, [&]<class B>() {
      const auto pk = load_public_key<B>(o.pub, pub_bytes);
      rss::Signature<B> sig;
      try {
        sig = rss::decode_signature<B>(sig_bytes);
      } catch (const Error& e) {
        throw Failure{kMalformedInput, o.sig.string() + ": " + e.what()};
      }
      const auto policy = credential::RedactionPolicy::keep(keep);
      try {
        policy.resolve(cred);
      } catch (const CodecError& e) {
        throw Failure{kInvalidArgument, e.what()};
      }
      if (cred.size() != pk.n) {
        throw Failure{kInvalidArgument,
                      "credential has " + std::to_string(cred.size()) +
                          " attributes but the key covers " + std::to_string(pk.n)};
      }
      auto rng = make_rng(g);
      const auto rc = credential::redact<B>(cred, sig, policy, pk, *rng);
      const auto text = rc.to_json().dump(2) + "\n";
      write_file(o.out, as_bytes(text));

      Json disclosed = Json::array();
      for (const auto& [i, a] : rc.disclosed) disclosed.push_back(a.path);
      emit(g,
           {{"status", "ok"},
            {"command", "redact"},
            {"redacted", o.out.string()},
            {"disclosed", disclosed},
            {"n", rc.n}},
           "disclosed " + std::to_string(rc.disclosed.size()) + " of " +
               std::to_string(rc.n) + " attributes -> " + o.out.string() + "\n");
      return static_cast<int>(kOk);
    });
  });
}

int run_verify(const GlobalOptions& g, const VerifyOptions& o) {
  return guarded(g, [&] {
    const auto pub_bytes = read_file(o.pub);
    const auto backend = backend_of(pub_bytes, rss::kPublicKeyMagic);
    const auto text = read_text(o.redacted);
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw Failure{kMalformedInput, o.redacted.string() + ": " + e.what()};
    }

    return with_backend(backend, kMalformedInput, [&]<class B>() {
      const auto pk = load_public_key<B>(o.pub, pub_bytes);
      credential::RedactedCredential<B> rc;
      try {
        rc = credential::RedactedCredential<B>::from_json(doc);
      } catch (const Error& e) {
        throw Failure{kMalformedInput, o.redacted.string() + ": " + e.what()};
      }
      const auto result = credential::verify_credential<B>(rc, pk);
      if (!result) {
        emit(g, {{"status", "rejected"}, {"command", "verify"}, {"reason", result.diagnostic}},
             "REJECTED: " + result.diagnostic + "\n");
        return static_cast<int>(kRejected);
      }
      Json disclosed = Json::object();
      std::string human = "ACCEPTED\n";
      for (const auto& [i, a] : rc.disclosed) {
        disclosed[a.path] = a.value;
        human += "  [" + std::to_string(i) + "] " + a.path + " = " + a.value + "\n";
      }
      emit(g, {{"status", "accepted"}, {"command", "verify"}, {"n", rc.n},
               {"disclosed", disclosed}},
           human);
      return static_cast<int>(kOk);
    });
  });
}

int run_bench(const GlobalOptions& g, const BenchOptions& o) {
  return guarded(g, [&] {
    bench::BenchConfig config;
    config.message_lengths = o.n;
    config.keep_ratios = o.keep_ratio;
    config.iterations = o.iterations;
    config.warmup = o.warmup;
    config.seed = o.seed;
    config.parallel = o.parallel;
    const auto format = bench::parse_format(o.format);
    config.validate();

    const auto reports = with_backend(o.backend, kInvalidArgument, [&]<class B>() {
      return bench::run_bench<B>(config);
    });
    // --json wraps the report array in one object; --format json prints it bare.
    if (g.json) {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(bench::to_json(r));
      std::cout << Json{{"status", "ok"}, {"command", "bench"}, {"reports", arr}}.dump()
                << std::endl;
    } else {
      std::cout << bench::emit_tables(reports, format);
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace rsscred::cli
