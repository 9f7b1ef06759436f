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

// rsscred: issue, redact and verify selectively disclosable credentials.
//
// Exit codes: 0 ok, 1 verification rejected, 2 invalid argument,
// 3 I/O failure, 4 malformed input, 5 signature invalid for document.

#include <sodium.h>

#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "keystore.hpp"

namespace {

void add_seed(CLI::App* cmd, rsscred::cli::GlobalOptions& g) {
#ifdef RSSCRED_TEST_FEATURES
  cmd->add_option("--seed", g.seed, "Deterministic randomness (test builds only)");
#else
  (void)cmd;
  (void)g;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rsscred::cli;
  if (sodium_init() < 0) {
    std::cerr << "rsscred: libsodium initialisation failed\n";
    return kIoFailure;
  }

  CLI::App app{"Redactable-signature verifiable credentials"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--json", global.json, "Print one JSON object per command");

  KeygenOptions keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate an issuer key pair");
  keygen_cmd->add_option("--attributes", keygen.attributes, "Attributes per credential")
      ->required();
  keygen_cmd->add_option("--out", keygen.out,
                         "Keystore file (default $RSS_CREDS_HOME/issuer.key); "
                         "the public key goes to <out>.pub");
#ifdef RSSCRED_TEST_FEATURES
  keygen_cmd->add_option("--backend", keygen.backend, "Group backend");
#endif
  add_seed(keygen_cmd, global);

  IssueOptions issue;
  auto* issue_cmd = app.add_subcommand("issue", "Sign a credential document");
  issue_cmd->add_option("--key", issue.key, "Keystore file (default $RSS_CREDS_HOME/issuer.key)");
  issue_cmd->add_option("--credential", issue.credential, "Credential JSON")->required();
  issue_cmd->add_option("--out", issue.out, "Signature output file")->required();
  add_seed(issue_cmd, global);

  RedactOptions redact;
  auto* redact_cmd =
      app.add_subcommand("redact", "Derive a signature on a subset of attributes");
  redact_cmd->add_option("--pub", redact.pub, "Issuer public key")->required();
  redact_cmd->add_option("--credential", redact.credential, "Credential JSON")->required();
  redact_cmd->add_option("--sig", redact.sig, "Issuer signature")->required();
  redact_cmd->add_option("--keep", redact.keep, "Attribute paths to disclose")
      ->required()
      ->delimiter(',')
      ->allow_extra_args(false);
  redact_cmd->add_option("--out", redact.out, "Redacted credential output")->required();
  add_seed(redact_cmd, global);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a redacted credential");
  verify_cmd->add_option("--pub", verify.pub, "Issuer public key")->required();
  verify_cmd->add_option("--redacted", verify.redacted, "Redacted credential")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime and size table");
  bench_cmd->add_option("--n", bench.n, "Attribute counts")->delimiter(',');
  bench_cmd->add_option("--keep-ratio", bench.keep_ratio, "Fractions kept")->delimiter(',');
  bench_cmd->add_option("--iterations", bench.iterations, "Timed iterations (>= 30)");
  bench_cmd->add_option("--warmup", bench.warmup, "Untimed warm-up iterations");
  bench_cmd->add_option("--format", bench.format, "text, csv or json");
  bench_cmd->add_option("--seed", bench.seed, "Workload seed");
  bench_cmd->add_flag("--parallel", bench.parallel, "Parallel verification batches");
#ifdef RSSCRED_TEST_FEATURES
  bench_cmd->add_option("--backend", bench.backend, "Group backend");
#endif

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidArgument;
  }

  if (*keygen_cmd) return run_keygen(global, keygen);
  if (*issue_cmd) return run_issue(global, issue);
  if (*redact_cmd) return run_redact(global, redact);
  if (*verify_cmd) return run_verify(global, verify);
  if (*bench_cmd) return run_bench(global, bench);
  return kInvalidArgument;
}
