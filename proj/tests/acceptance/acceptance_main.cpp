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


// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/exponent_oracle.hpp"
#include "rsscred/bench.hpp"
#include "rsscred/bls12_381.hpp"
#include "rsscred/credential.hpp"
#include "rsscred/mock_backend.hpp"
#include "rsscred/ps.hpp"
#include "rsscred/rss.hpp"
#include "rsscred/rss_wire.hpp"

namespace {

using namespace rsscred;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using B = Bls12381;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::uint32_t> random_subset(std::uint32_t n, std::mt19937_64& gen) {
  for (;;) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 1; i <= n; ++i) {
      if (gen() & 1) s.push_back(i);
    }
    if (!s.empty()) return s;
  }
}

template <class Backend>
rss::Disclosure<Backend> disclose(const std::vector<typename Backend::Scalar>& m,
                                  const rss::IndexSet& I) {
  rss::Disclosure<Backend> d;
  for (auto i : I.indices()) d.emplace(i, m[i - 1]);
  return d;
}

template <class Backend>
std::vector<typename Backend::Scalar> messages(std::uint32_t n, RandomSource& rng) {
  std::vector<typename Backend::Scalar> m;
  for (std::uint32_t j = 0; j < n; ++j) m.push_back(random_scalar<Backend>(rng));
  return m;
}

// 1. issue -> redact -> verify over random credentials.
Outcome correctness() {
  SeededRandom rng(1001);
  std::mt19937_64 gen(1001);
  int total = 0, failures = 0;
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto kp = rss::keygen<B>(n, rng);
    for (int k = 0; k < 50; ++k) {
      credential::Json claims = credential::Json::object();
      for (std::uint32_t a = 0; a < n; ++a) {
        const auto key = "c" + std::to_string(gen() % 100) + "_" + std::to_string(a);
        const auto value = "v" + std::to_string(gen());
        if (gen() % 3 == 0) {
          claims["group"][key] = value;
        } else {
          claims[key] = value;
        }
      }
      const auto cred = credential::canonicalize(
          {{"issuer", "did:example:issuer"}, {"credentialSubject", claims}});
      const auto sig =
          rss::sign<B>(kp.sk, credential::encode_attributes<B>(cred), rng);
      std::vector<std::string> keep;
      for (auto i : random_subset(n, gen)) keep.push_back(cred.attributes[i - 1].path);
      const auto rc = credential::redact<B>(
          cred, sig, credential::RedactionPolicy::keep(keep), kp.pk, rng);
      ++total;
      if (!credential::verify_credential<B>(rc, kp.pk)) ++failures;
    }
  }
  return {failures == 0, std::to_string(total - failures) + "/" +
                             std::to_string(total) + " accepted (n = 1..8, 50 each)"};
}

// 2. Derived signature length independent of n and |I|.
Outcome constant_signature_size() {
  SeededRandom rng(1002);
  std::set<std::size_t> sizes;
  int samples = 0;
  for (std::uint32_t n : {2u, 6u, 10u}) {
    const auto kp = rss::keygen<B>(n, rng);
    const auto m = messages<B>(n, rng);
    const auto sig = rss::sign<B>(kp.sk, m, rng);
    for (std::uint32_t keep : {1u, (n + 1) / 2, n}) {
      std::vector<std::uint32_t> idx;
      for (std::uint32_t i = 1; i <= keep; ++i) idx.push_back(i);
      const auto d = rss::derive<B>(kp.pk, sig, m, rss::IndexSet::of(idx, n), rng);
      sizes.insert(rss::encode(d).size());
      ++samples;
    }
  }
  std::string detail = std::to_string(samples) + " derived signatures, lengths {";
  for (auto s : sizes) detail += std::to_string(s) + (s == *sizes.rbegin() ? "" : ",");
  return {sizes.size() == 1, detail + "} bytes"};
}

// 3. Public key length affine in n with zero residual.
Outcome linear_public_key() {
  SeededRandom rng(1003);
  const std::size_t g1 = g1_len<B>(), g2 = g2_len<B>();
  const std::size_t fixed = 8 + B::descriptor().encoded_size() + 4 + 1 +
                            rss::kDefaultHashId.size() + 2 * g2;
  const std::size_t slope = 2 * g1 + g2;
  std::size_t worst = 0;
  std::string detail;
  for (std::uint32_t n : {1u, 2u, 4u, 8u, 16u}) {
    const auto size = rss::encode(rss::keygen<B>(n, rng).pk).size();
    const std::size_t predicted = fixed + slope * n;
    worst = std::max(worst, size > predicted ? size - predicted : predicted - size);
    detail += (detail.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(size);
  }
  return {worst == 0, "len = " + std::to_string(fixed) + " + " + std::to_string(slope) +
                          " n; measured " + detail + "; max residual " +
                          std::to_string(worst)};
}

// 4. Mock backend exponents against the integer oracle.
Outcome oracle_equivalence() {
  using M = MockBackend;
  namespace orc = oracle;
  SeededRandom rng(1004);
  std::mt19937_64 gen(1004);
  int mismatches = 0, undetected = 0;
  for (int k = 0; k < 200; ++k) {
    const std::uint32_t n = 1 + gen() % 5;
    const auto kp = rss::keygen<M>(n, rng);
    const auto m = messages<M>(n, rng);
    const auto sig = rss::sign<M>(kp.sk, m, rng);
    const auto kept = random_subset(n, gen);
    const auto I = rss::IndexSet::of(kept, n);
    const auto r = random_nonzero_scalar<M>(rng);
    const auto t = random_nonzero_scalar<M>(rng);
    const auto d = rss::derive_with<M>(kp.pk, sig, m, I, r, t);

    const orc::KeyLogs key{kp.sk.x.value(), kp.sk.y.value(), kp.pk.g1.log(),
                           kp.pk.g2.log(), n};
    std::vector<orc::Int> mi;
    for (const auto& s : m) mi.emplace_back(s.value());
    std::vector<orc::Int> c;
    for (const auto& ci : rss::index_commitments<M>(kp.pk, d.sigma1, d.sigma2,
                                                    d.sigma_tilde, I)) {
      c.emplace_back(ci.value());
    }
    const std::vector<unsigned> ks(kept.begin(), kept.end());
    const auto fresh = orc::sign(key, sig.sigma1.log(), mi);
    const auto want = orc::derive(key, fresh, mi, ks, r.value(), t.value(), c);
    const orc::SigLogs got{d.sigma1.log(), d.sigma2.log(), d.sigma3.log(),
                           d.sigma_tilde.log()};
    std::map<unsigned, orc::Int> disclosed;
    for (auto i : kept) disclosed.emplace(i, mi[i - 1]);

    if (got.s1 != want.s1 || got.s2 != want.s2 || got.s3 != want.s3 ||
        got.st != want.st || fresh.s2 != orc::Int(sig.sigma2.log()) ||
        !orc::equation1(key, got, disclosed) || !orc::equation2(key, got, ks, c) ||
        !rss::verify<M>(kp.pk, d, disclose<M>(m, I))) {
      ++mismatches;
    }
    for (int which = 0; which < 4; ++which) {
      auto bad = got;
      orc::Int* field[] = {&bad.s1, &bad.s2, &bad.s3, &bad.st};
      *field[which] = orc::mod(*field[which] + 1);
      if (orc::equation1(key, bad, disclosed) && orc::equation2(key, bad, ks, c)) {
        ++undetected;
      }
    }
  }
  return {mismatches == 0 && undetected == 0,
          "200 instances (n <= 5): " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(undetected) + " of 800 +1 perturbations balanced"};
}

// 5. Every single tampering is rejected.
Outcome tamper_rejection() {
  SeededRandom rng(1005);
  std::mt19937_64 gen(1005);
  const std::uint32_t n = 6;
  const auto kp = rss::keygen<B>(n, rng);
  const char* names[] = {"value", "index set", "sigma1", "sigma2", "sigma3", "sigma~"};
  int accepted[6] = {};
  for (int k = 0; k < 100; ++k) {
    const auto m = messages<B>(n, rng);
    const auto sig = rss::sign<B>(kp.sk, m, rng);
    auto kept = random_subset(n, gen);
    if (kept.size() == n) kept.erase(kept.begin() + gen() % n);
    const auto I = rss::IndexSet::of(kept, n);
    const auto d = rss::derive<B>(kp.pk, sig, m, I, rng);
    const auto good = disclose<B>(m, I);

    auto bad_value = good;
    auto it = bad_value.begin();
    std::advance(it, gen() % bad_value.size());
    it->second = random_scalar<B>(rng);
    accepted[0] += rss::verify<B>(kp.pk, d, bad_value);

    // Swap one retained index for a redacted one, disclosing its true value.
    auto moved = good;
    const auto out = kept[gen() % kept.size()];
    const auto complement = I.complement();
    const auto in = complement[gen() % complement.size()];
    moved.erase(out);
    moved.emplace(in, m[in - 1]);
    accepted[1] += rss::verify<B>(kp.pk, d, moved);

    const auto delta1 = B::G1::generator() * random_nonzero_scalar<B>(rng);
    const auto delta2 = B::G2::generator() * random_nonzero_scalar<B>(rng);
    auto t = d;
    t.sigma1 = t.sigma1 + delta1;
    accepted[2] += rss::verify<B>(kp.pk, t, good);
    t = d;
    t.sigma2 = t.sigma2 + delta1;
    accepted[3] += rss::verify<B>(kp.pk, t, good);
    t = d;
    t.sigma3 = t.sigma3 + delta1;
    accepted[4] += rss::verify<B>(kp.pk, t, good);
    t = d;
    t.sigma_tilde = t.sigma_tilde + delta2;
    accepted[5] += rss::verify<B>(kp.pk, t, good);
  }
  bool ok = true;
  std::string detail = "100 trials each, accepted:";
  for (int k = 0; k < 6; ++k) {
    ok = ok && accepted[k] == 0;
    detail += std::string(" ") + names[k] + "=" + std::to_string(accepted[k]);
  }
  return {ok, detail};
}

// 6. Two derivations differ in every component and both verify.
Outcome rerandomization() {
  SeededRandom rng(1006);
  const std::uint32_t n = 5;
  const auto kp = rss::keygen<B>(n, rng);
  const auto cred = credential::parse_credential([] {
    std::ifstream in(std::string(RSSCRED_TEST_DATA) + "/sample_credential.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  const auto sig = rss::sign<B>(kp.sk, credential::encode_attributes<B>(cred), rng);
  const auto policy = credential::RedactionPolicy::keep({"name", "address.country"});
  int bad = 0;
  for (int k = 0; k < 100; ++k) {
    const auto a = credential::redact<B>(cred, sig, policy, kp.pk, rng);
    const auto b = credential::redact<B>(cred, sig, policy, kp.pk, rng);
    const auto& x = a.signature;
    const auto& y = b.signature;
    const bool distinct = x.sigma1.to_bytes() != y.sigma1.to_bytes() &&
                          x.sigma2.to_bytes() != y.sigma2.to_bytes() &&
                          x.sigma3.to_bytes() != y.sigma3.to_bytes() &&
                          x.sigma_tilde.to_bytes() != y.sigma_tilde.to_bytes();
    if (!distinct || !credential::verify_credential<B>(a, kp.pk) ||
        !credential::verify_credential<B>(b, kp.pk)) {
      ++bad;
    }
  }
  return {bad == 0, "100 pairs, " + std::to_string(bad) +
                        " with a shared component or a failed verification"};
}

// 7. CLI scenario plus the five-row table and a per-operation time bound.
struct Run {
  int code = -1;
  std::string out;
  double seconds = 0;
};

Run run_cli(const std::string& args, const fs::path& home) {
  const std::string cmd = "RSS_CREDS_HOME='" + home.string() + "' '" RSSCRED_CLI "' " +
                          args + " 2>&1";
  Run r;
  const auto start = Clock::now();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Table printed after the criterion lines.
std::string scenario_table;

Outcome paper_scenario() {
  const fs::path home = fs::temp_directory_path() /
                        ("rsscred_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(home);
  fs::create_directories(home);
  const std::string sample = std::string(RSSCRED_TEST_DATA) + "/sample_credential.json";
  const auto at = [&](const char* f) { return (home / f).string(); };

  std::vector<Run> steps;
  steps.push_back(run_cli("keygen --attributes 5 --out " + at("issuer.key"), home));
  steps.push_back(run_cli("issue --key " + at("issuer.key") + " --credential " + sample +
                              " --out " + at("cred.sig"),
                          home));
  steps.push_back(run_cli("redact --pub " + at("issuer.key.pub") + " --credential " +
                              sample + " --sig " + at("cred.sig") +
                              " --keep name,address.country --out " + at("red.json"),
                          home));
  steps.push_back(run_cli("verify --pub " + at("issuer.key.pub") + " --redacted " +
                              at("red.json"),
                          home));
  bool cli_ok = true;
  double slowest = 0;
  for (const auto& s : steps) {
    cli_ok = cli_ok && s.code == 0;
    slowest = std::max(slowest, s.seconds);
  }
  const auto& verified = steps.back().out;
  cli_ok = cli_ok && verified.find("ACCEPTED") != std::string::npos &&
           verified.find("Alice Example") != std::string::npos &&
           verified.find("United Kingdom") != std::string::npos &&
           verified.find("1990-01-01") == std::string::npos;
  fs::remove_all(home);

  bench::BenchConfig config;
  config.message_lengths = {6};
  config.keep_ratios = {2.0 / 6.0};
  const auto report = bench::run_bench<B>(config).at(0);
  const auto table = bench::emit_table(report, bench::Format::kText);
  bool table_ok = report.rows.size() == bench::kCategories.size();
  double slowest_op_ms = 0;
  for (auto c : bench::kCategories) {
    table_ok = table_ok && table.find(c) != std::string::npos;
    slowest_op_ms = std::max(slowest_op_ms, report.row(c).mean_ms);
  }
  const bool fast = slowest < 5.0 && slowest_op_ms < 5000.0;

  std::ostringstream detail;
  detail << "CLI keygen/issue/redact/verify " << (cli_ok ? "ok" : "FAILED")
         << " (slowest step " << bench::significant(slowest * 1000) << " ms); "
         << "five-row table " << (table_ok ? "ok" : "FAILED")
         << "; slowest operation at n = 6: " << bench::significant(slowest_op_ms)
         << " ms (bound 5000 ms)";
  scenario_table = table;
  return {cli_ok && table_ok && fast, detail.str()};
}

// 8. PS baseline.
Outcome ps_baseline() {
  SeededRandom rng(1008);
  int wrong = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = 1 + k % 8;
    const auto kp = ps::keygen<B>(r, rng);
    const auto m = messages<B>(static_cast<std::uint32_t>(r), rng);
    const auto sig = ps::sign<B>(kp.sk, m, rng);
    if (!ps::verify<B>(kp.pk, m, sig)) ++wrong;
    if (!ps::verify<B>(kp.pk, m, ps::rerandomize<B>(sig, rng))) ++wrong;
    if (ps::verify<B>(kp.pk, m, ps::Signature<B>{B::G1::identity(), sig.sigma2})) ++wrong;
    if (ps::verify<B>(kp.pk, m,
                      ps::Signature<B>{B::G1::identity(), B::G1::identity()})) {
      ++wrong;
    }
  }
  return {wrong == 0, "100 trials r = 1..8 (sign, rerandomize, identity sigma1): " +
                          std::to_string(wrong) + " wrong outcomes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 correctness suite", correctness},
      {"2 constant signature size", constant_signature_size},
      {"3 linear public key", linear_public_key},
      {"4 oracle equivalence", oracle_equivalence},
      {"5 tamper rejection", tamper_rejection},
      {"6 re-randomization", rerandomization},
      {"7 scenario reproduction", paper_scenario},
      {"8 PS baseline", ps_baseline},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << " ["
              << bench::significant(secs) << " s]: " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  if (!scenario_table.empty()) {
    std::cout << "\nscenario table (n = 6, 2 kept):\n" << scenario_table;
  }
  return failed == 0 ? 0 : 1;
}
