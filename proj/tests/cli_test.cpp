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


// Runs the rsscred binary as a subprocess and checks files, exit codes and
// output.

#include <gtest/gtest.h>
#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "rsscred/bls12_381.hpp"
#include "rsscred/bytes.hpp"
#include "rsscred/errors.hpp"
#include "rsscred/rss_wire.hpp"

namespace rsscred {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("rsscred_cli_") + info->name() + "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    sample_ = fs::path(RSSCRED_TEST_DATA) / "sample_credential.json";
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs `rsscred <args>` with RSS_CREDS_HOME set to the scratch directory.
  Result run(const std::string& args) const {
    const std::string cmd = "RSS_CREDS_HOME='" + dir_.string() + "' '" RSSCRED_CLI "' " +
                            args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string p(const std::string& name) const { return (dir_ / name).string(); }

  // keygen + issue for the sample credential.
  void issue_sample(const std::string& backend = "bls12-381") {
    ASSERT_EQ(run("keygen --attributes 5 --backend " + backend + " --out " + p("k")).code, 0);
    ASSERT_EQ(run("issue --key " + p("k") + " --credential " + sample_.string() +
                  " --out " + p("cred.sig"))
                  .code,
              0);
  }

  Result redact(const std::string& keep, const std::string& out = "red.json") const {
    return run("redact --pub " + p("k.pub") + " --credential " + sample_.string() +
               " --sig " + p("cred.sig") + " --keep '" + keep + "' --out " + p(out));
  }

  fs::path dir_;
  fs::path sample_;
};

TEST_F(CliTest, KeygenReportsKeyShapeAndProtectsTheKeyfile) {
  const auto r = run("--json keygen --attributes 5 --out " + p("k"));
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["g1_key_elements"], 9);
  EXPECT_EQ(j["n"], 5);
  EXPECT_TRUE(fs::exists(p("k.pub")));
  struct stat st {};
  ASSERT_EQ(::stat(p("k").c_str(), &st), 0);
  EXPECT_EQ(st.st_mode & 0777, 0600);
  // Secret material never reaches stdout.
  const auto entry = Json::parse(slurp(p("k")));
  EXPECT_EQ(r.out.find(entry["secret_key"].get<std::string>()), std::string::npos);
}

TEST_F(CliTest, KeygenRejectsZeroAttributes) {
  EXPECT_EQ(run("keygen --attributes 0 --out " + p("k")).code, 2);
}

TEST_F(CliTest, KeygenIoFailure) {
  EXPECT_EQ(run("keygen --attributes 2 --out " + p("missing/dir/k")).code, 3);
}

TEST_F(CliTest, KeygenDefaultsToKeystoreHome) {
  ASSERT_EQ(run("keygen --attributes 2").code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "issuer.key"));
  EXPECT_TRUE(fs::exists(dir_ / "issuer.key.pub"));
}

TEST_F(CliTest, SeededKeygenIsReproducible) {
  ASSERT_EQ(run("keygen --attributes 3 --seed 9 --out " + p("a")).code, 0);
  ASSERT_EQ(run("keygen --attributes 3 --seed 9 --out " + p("b")).code, 0);
  ASSERT_EQ(run("keygen --attributes 3 --seed 10 --out " + p("c")).code, 0);
  EXPECT_EQ(slurp(p("a.pub")), slurp(p("b.pub")));
  EXPECT_NE(slurp(p("a.pub")), slurp(p("c.pub")));
}

TEST_F(CliTest, IssueErrors) {
  ASSERT_EQ(run("keygen --attributes 5 --out " + p("k")).code, 0);
  spill(p("four.json"), R"({"credentialSubject": {"a": "1", "b": "2", "c": "3", "d": "4"}})");
  EXPECT_EQ(run("issue --key " + p("k") + " --credential " + p("four.json") + " --out " +
                p("s"))
                .code,
            2);
  spill(p("bad.json"), "{\"credentialSubject\": ");
  EXPECT_EQ(run("issue --key " + p("k") + " --credential " + p("bad.json") + " --out " +
                p("s"))
                .code,
            4);
  EXPECT_EQ(run("issue --key " + p("nope") + " --credential " + sample_.string() +
                " --out " + p("s"))
                .code,
            3);
}

TEST_F(CliTest, PaperScenarioEndToEnd) {
  issue_sample();
  const auto r = redact("name,address.country");
  ASSERT_EQ(r.code, 0);
  const auto red = Json::parse(slurp(p("red.json")));
  EXPECT_EQ(red["indices"], Json::parse("[1, 5]"));
  EXPECT_EQ(red["document"]["credentialSubject"].size(), 2u);
  EXPECT_FALSE(red["document"]["credentialSubject"].contains("birthDate"));

  const auto v = run("verify --pub " + p("k.pub") + " --redacted " + p("red.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("ACCEPTED"), std::string::npos);
  EXPECT_NE(v.out.find("Alice Example"), std::string::npos);
  EXPECT_NE(v.out.find("United Kingdom"), std::string::npos);
  EXPECT_EQ(v.out.find("1990-01-01"), std::string::npos);
}

TEST_F(CliTest, KeepAllFivePaths) {
  issue_sample();
  ASSERT_EQ(
      redact("address.country,address.postcode,address.street,birthDate,name").code, 0);
  const auto red = Json::parse(slurp(p("red.json")));
  EXPECT_EQ(red["indices"].size(), 5u);
  EXPECT_EQ(run("verify --pub " + p("k.pub") + " --redacted " + p("red.json")).code, 0);
}

TEST_F(CliTest, RedactErrors) {
  issue_sample();
  EXPECT_EQ(redact("").code, 2);
  EXPECT_EQ(redact("shoeSize").code, 2);
  // A signature for a different document.
  spill(p("other.json"),
        R"({"credentialSubject": {"a": "1", "b": "2", "c": "3", "d": "4", "e": "5"}})");
  ASSERT_EQ(run("issue --key " + p("k") + " --credential " + p("other.json") + " --out " +
                p("other.sig"))
                .code,
            0);
  EXPECT_EQ(run("redact --pub " + p("k.pub") + " --credential " + sample_.string() +
                " --sig " + p("other.sig") + " --keep name --out " + p("x.json"))
                .code,
            5);
  // Redaction needs no secret key and accepts none.
  EXPECT_EQ(run("redact --key " + p("k") + " --pub " + p("k.pub") + " --credential " +
                sample_.string() + " --sig " + p("cred.sig") + " --keep name --out " +
                p("x.json"))
                .code,
            2);
}

TEST_F(CliTest, BitFlippedSignatureIsRejected) {
  issue_sample();
  ASSERT_EQ(redact("name,address.country").code, 0);
  auto red = Json::parse(slurp(p("red.json")));
  const auto sig = from_base64(red["signature"].get<std::string>());

  // Flip bits inside the first group element until the result still decodes,
  // so the rejection comes from the verification equations.
  const std::size_t sigma1_start = sig.size() - 3 * 48 - 96;
  bool decodable_found = false, malformed_found = false;
  for (std::size_t bit = 8 * sigma1_start + 8 * 47; bit < 8 * sig.size(); ++bit) {
    auto flipped = sig;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    bool decodes = true;
    try {
      rss::decode_signature<Bls12381>(flipped);
    } catch (const DecodeError&) {
      decodes = false;
    }
    if (decodes == decodable_found && decodes) continue;
    if (!decodes && malformed_found) continue;
    red["signature"] = to_base64(flipped);
    spill(p("flip.json"), red.dump());
    const int code = run("verify --pub " + p("k.pub") + " --redacted " + p("flip.json")).code;
    if (decodes) {
      EXPECT_EQ(code, 1) << "bit " << bit;
      decodable_found = true;
    } else {
      EXPECT_EQ(code, 4) << "bit " << bit;
      malformed_found = true;
    }
    if (decodable_found && malformed_found) break;
  }
  EXPECT_TRUE(decodable_found);
}

TEST_F(CliTest, EditedDisclosedValueIsRejected) {
  issue_sample();
  ASSERT_EQ(redact("name,address.country").code, 0);
  auto red = Json::parse(slurp(p("red.json")));
  red["document"]["credentialSubject"]["address"]["country"] = "France";
  spill(p("edit.json"), red.dump());
  EXPECT_EQ(run("verify --pub " + p("k.pub") + " --redacted " + p("edit.json")).code, 1);
}

TEST_F(CliTest, TruncatedInputsAreMalformed) {
  issue_sample();
  ASSERT_EQ(redact("name").code, 0);
  const auto text = slurp(p("red.json"));
  spill(p("trunc.json"), text.substr(0, text.size() / 2));
  EXPECT_EQ(run("verify --pub " + p("k.pub") + " --redacted " + p("trunc.json")).code, 4);
  const auto pub = slurp(p("k.pub"));
  spill(p("trunc.pub"), pub.substr(0, pub.size() - 10));
  EXPECT_EQ(run("verify --pub " + p("trunc.pub") + " --redacted " + p("red.json")).code, 4);
  EXPECT_EQ(run("verify --pub " + p("k.pub") + " --redacted " + p("absent.json")).code, 3);
}

TEST_F(CliTest, JsonModePrintsOneObjectPerCommand) {
  issue_sample();
  const auto r = run("--json redact --pub " + p("k.pub") + " --credential " +
                     sample_.string() + " --sig " + p("cred.sig") +
                     " --keep name --out " + p("red.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["status"], "ok");
  const auto v = run("--json verify --pub " + p("k.pub") + " --redacted " + p("red.json"));
  ASSERT_EQ(v.code, 0);
  const auto j = Json::parse(v.out);
  EXPECT_EQ(j["status"], "accepted");
  EXPECT_EQ(j["disclosed"]["name"], "Alice Example");
  const auto e = run("--json keygen --attributes 0");
  EXPECT_EQ(e.code, 2);
  EXPECT_EQ(Json::parse(e.out)["exit_code"], 2);
}

TEST_F(CliTest, MockBackendIsAvailableInTestBuilds) {
  issue_sample("mock-exp-p61");
  ASSERT_EQ(redact("birthDate").code, 0);
  EXPECT_EQ(run("verify --pub " + p("k.pub") + " --redacted " + p("red.json")).code, 0);
}

TEST_F(CliTest, BenchEmitsFiveRowTable) {
  const auto r = run("bench --n 3 --iterations 30 --warmup 1 --format csv --backend mock-exp-p61");
  ASSERT_EQ(r.code, 0);
  for (const char* row : {"public key,", "private key,", "signature,",
                          "derived signature,", "verifying signature,"}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
  EXPECT_EQ(run("bench --iterations 0").code, 2);
  EXPECT_EQ(run("bench --format xml").code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --pub x").code, 2);
}

}  // namespace
}  // namespace rsscred
