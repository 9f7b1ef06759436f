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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "rsscred/bytes.hpp"

namespace rsscred::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kRejected = 1,
  kInvalidArgument = 2,
  kIoFailure = 3,
  kMalformedInput = 4,
  kBadSignature = 5,
};

// Raised by command code; main() reports it and exits with `code`.
struct Failure {
  int code;
  std::string message;
};

// Issuer key material as stored on disk. The file is JSON:
//   {"role": "issuer", "key_id": hex, "created_at": RFC 3339 UTC,
//    "backend": name, "n": n, "secret_key": base64, "public_key": base64}
// and is created with mode 0600.
struct KeystoreEntry {
  std::string role = "issuer";
  std::string key_id;
  std::string created_at;
  std::string backend;
  std::uint32_t n = 0;
  Bytes secret_key;
  Bytes public_key;
};

// Directory named by RSS_CREDS_HOME, or the working directory.
std::filesystem::path keystore_home();

// First 8 bytes of SHA-512 over the public key, hex.
std::string key_id_for(ByteSpan public_key);
std::string utc_timestamp();

void write_keystore(const std::filesystem::path& path, const KeystoreEntry& e);
// Throws Failure(kIoFailure) when unreadable, Failure(kMalformedInput) when
// not a keystore file.
KeystoreEntry read_keystore(const std::filesystem::path& path);

// Whole-file helpers; I/O errors become Failure(kIoFailure).
Bytes read_file(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteSpan bytes,
                bool owner_only = false);

}  // namespace rsscred::cli
