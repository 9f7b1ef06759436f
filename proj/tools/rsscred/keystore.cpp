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

#include "keystore.hpp"

#include <fcntl.h>
#include <sodium.h>
#include <sys/stat.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>

namespace rsscred::cli {

std::filesystem::path keystore_home() {
  if (const char* home = std::getenv("RSS_CREDS_HOME"); home && *home) {
    return home;
  }
  return std::filesystem::current_path();
}

std::string key_id_for(ByteSpan public_key) {
  std::array<std::uint8_t, crypto_hash_sha512_BYTES> digest{};
  crypto_hash_sha512(digest.data(), public_key.data(), public_key.size());
  return to_hex(ByteSpan(digest).first(8));
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIoFailure, "cannot read " + path.string()};
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

std::string read_text(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

void write_file(const std::filesystem::path& path, ByteSpan bytes,
                bool owner_only) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC,
                        owner_only ? 0600 : 0644);
  if (fd < 0) throw Failure{kIoFailure, "cannot write " + path.string()};
  if (owner_only) ::fchmod(fd, 0600);
  std::size_t done = 0;
  while (done < bytes.size()) {
    const auto n = ::write(fd, bytes.data() + done, bytes.size() - done);
    if (n <= 0) {
      ::close(fd);
      throw Failure{kIoFailure, "short write to " + path.string()};
    }
    done += static_cast<std::size_t>(n);
  }
  if (::close(fd) != 0) throw Failure{kIoFailure, "cannot close " + path.string()};
}

void write_keystore(const std::filesystem::path& path, const KeystoreEntry& e) {
  const nlohmann::json j = {{"role", e.role},
                            {"key_id", e.key_id},
                            {"created_at", e.created_at},
                            {"backend", e.backend},
                            {"n", e.n},
                            {"secret_key", to_base64(e.secret_key)},
                            {"public_key", to_base64(e.public_key)}};
  const auto text = j.dump(2) + "\n";
  write_file(path, as_bytes(text), /*owner_only=*/true);
}

KeystoreEntry read_keystore(const std::filesystem::path& path) {
  const auto text = read_text(path);
  try {
    const auto j = nlohmann::json::parse(text);
    KeystoreEntry e;
    e.role = j.at("role").get<std::string>();
    e.key_id = j.at("key_id").get<std::string>();
    e.created_at = j.at("created_at").get<std::string>();
    e.backend = j.at("backend").get<std::string>();
    e.n = j.at("n").get<std::uint32_t>();
    e.secret_key = from_base64(j.at("secret_key").get<std::string>());
    e.public_key = from_base64(j.at("public_key").get<std::string>());
    if (e.role != "issuer") {
      throw Failure{kMalformedInput, path.string() + ": not an issuer key"};
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Failure{kMalformedInput, path.string() + ": " + ex.what()};
  } catch (const DecodeError& ex) {
    throw Failure{kMalformedInput, path.string() + ": " + ex.what()};
  }
}

}  // namespace rsscred::cli
