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


// Micro-benchmarks for the pairing backend and the redactable signature
// operations as a function of the message length. The CLI `bench`
// subcommand produces the summary table; these give per-operation detail.

#include <benchmark/benchmark.h>

#include "rsscred/bls12_381.hpp"
#include "rsscred/rss.hpp"
#include "rsscred/rss_wire.hpp"

namespace {

using namespace rsscred;
using B = Bls12381;

std::vector<B::Scalar> messages(std::uint32_t n, RandomSource& rng) {
  std::vector<B::Scalar> m;
  for (std::uint32_t j = 0; j < n; ++j) m.push_back(random_scalar<B>(rng));
  return m;
}

// Keeps the first ceil(n * 2 / 5) positions, the two-of-five scenario.
rss::IndexSet scenario_keep(std::uint32_t n) {
  const std::uint32_t keep = std::max<std::uint32_t>(1, (2 * n + 4) / 5);
  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 1; i <= keep; ++i) idx.push_back(i);
  return rss::IndexSet::of(idx, n);
}

void BM_Pairing(benchmark::State& state) {
  SeededRandom rng(1);
  const auto p = B::G1::generator() * random_scalar<B>(rng);
  const auto q = B::G2::generator() * random_scalar<B>(rng);
  for (auto _ : state) benchmark::DoNotOptimize(B::pairing(p, q));
}
BENCHMARK(BM_Pairing)->Unit(benchmark::kMicrosecond);

void BM_G1Mul(benchmark::State& state) {
  SeededRandom rng(2);
  const auto p = B::G1::generator();
  const auto s = random_scalar<B>(rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * s);
}
BENCHMARK(BM_G1Mul)->Unit(benchmark::kMicrosecond);

void BM_G2Mul(benchmark::State& state) {
  SeededRandom rng(3);
  const auto p = B::G2::generator();
  const auto s = random_scalar<B>(rng);
  for (auto _ : state) benchmark::DoNotOptimize(p * s);
}
BENCHMARK(BM_G2Mul)->Unit(benchmark::kMicrosecond);

void BM_Keygen(benchmark::State& state) {
  SeededRandom rng(4);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rss::keygen<B>(n, rng));
  SeededRandom size_rng(4);
  state.counters["pk_bytes"] =
      static_cast<double>(rss::encode(rss::keygen<B>(n, size_rng).pk).size());
}
BENCHMARK(BM_Keygen)->RangeMultiplier(2)->Range(1, 32)->Unit(benchmark::kMillisecond);

void BM_Sign(benchmark::State& state) {
  SeededRandom rng(5);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto kp = rss::keygen<B>(n, rng);
  const auto m = messages(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rss::sign<B>(kp.sk, m, rng));
}
BENCHMARK(BM_Sign)->RangeMultiplier(2)->Range(1, 32)->Unit(benchmark::kMillisecond);

void BM_Derive(benchmark::State& state) {
  SeededRandom rng(6);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto kp = rss::keygen<B>(n, rng);
  const auto m = messages(n, rng);
  const auto sig = rss::sign<B>(kp.sk, m, rng);
  const auto I = scenario_keep(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rss::derive<B>(kp.pk, sig, m, I, rng));
  }
}
BENCHMARK(BM_Derive)->RangeMultiplier(2)->Range(1, 32)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  SeededRandom rng(7);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto kp = rss::keygen<B>(n, rng);
  const auto m = messages(n, rng);
  const auto sig = rss::sign<B>(kp.sk, m, rng);
  const auto I = scenario_keep(n);
  const auto d = rss::derive<B>(kp.pk, sig, m, I, rng);
  rss::Disclosure<B> disclosed;
  for (auto i : I.indices()) disclosed.emplace(i, m[i - 1]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rss::verify<B>(kp.pk, d, disclosed));
  }
}
BENCHMARK(BM_Verify)->RangeMultiplier(2)->Range(1, 32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
