// Copyright 2026 The cverify Authors
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

#include <benchmark/benchmark.h>

#include <map>

#include "cverify/rng.hpp"
#include "cverify/rw.hpp"
#include "cverify/squirrels.hpp"
#include "cverify/wave.hpp"

using namespace cverify;

namespace {

struct SquirrelsFixture {
  SquirrelsParams params;
  SquirrelsPublicKey pk;
  SquirrelsVerificationKey vk;
  SquirrelsSignature sig;

  explicit SquirrelsFixture(std::uint16_t tag) : params(squirrels_named_params(tag)) {
    Rng rng(tag);
    pk = squirrels_random_public_key(params, rng);
    vk = squirrels_vkeygen(squirrels_ckeygen(params, squirrels_instance(tag).t, rng), pk, params);
    sig = {rng.bytes(kSquirrelsSaltBytes), std::vector<std::int32_t>(params.n)};
    for (auto& v : sig.s) v = static_cast<std::int32_t>(rng.uniform(41)) - 20;
  }
};

const SquirrelsFixture& squirrels_fixture(std::uint16_t tag) {
  static std::map<std::uint16_t, SquirrelsFixture> cache;
  auto it = cache.find(tag);
  if (it == cache.end()) it = cache.emplace(tag, SquirrelsFixture(tag)).first;
  return it->second;
}

void BM_SquirrelsVerify(benchmark::State& state) {
  const auto& f = squirrels_fixture(static_cast<std::uint16_t>(state.range(0)));
  const ByteView m = as_bytes("bench");
  for (auto _ : state) benchmark::DoNotOptimize(squirrels_verify(f.sig, m, f.pk, f.params));
  state.SetLabel(f.params.name());
}

void BM_SquirrelsCVerify(benchmark::State& state) {
  const auto& f = squirrels_fixture(static_cast<std::uint16_t>(state.range(0)));
  const ByteView m = as_bytes("bench");
  for (auto _ : state) benchmark::DoNotOptimize(squirrels_cverify(f.sig, m, f.vk, f.params));
  state.SetLabel(f.params.name());
}

BENCHMARK(BM_SquirrelsVerify)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SquirrelsCVerify)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

struct WaveFixture {
  WaveParams params = wave_named_params(822);
  WavePublicKey pk;
  WaveVerificationKey vk;
  WaveSignature sig;

  WaveFixture() {
    Rng rng(822);
    pk = wave_toy_keygen(params, rng);
    vk = wave_vkeygen(pk, wave_ckeygen(params, wave_instance(822).c, rng), params);
    sig = {rng.bytes(kWaveSaltBytes), TritVector(params.n)};
    for (std::size_t placed = 0; placed < params.w;) {
      const std::size_t j = rng.uniform(params.n);
      if (sig.s.get(j) != 0) continue;
      sig.s.set(j, 1);
      ++placed;
    }
  }
};

const WaveFixture& wave_fixture() {
  static const WaveFixture f;
  return f;
}

void BM_WaveVerify(benchmark::State& state) {
  const auto& f = wave_fixture();
  const ByteView m = as_bytes("bench");
  for (auto _ : state) benchmark::DoNotOptimize(wave_verify(f.sig, m, f.pk, f.params));
}

void BM_WaveCVerify(benchmark::State& state) {
  const auto& f = wave_fixture();
  const ByteView m = as_bytes("bench");
  for (auto _ : state) benchmark::DoNotOptimize(wave_cverify(f.sig, m, f.vk, f.params));
}

BENCHMARK(BM_WaveVerify)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WaveCVerify)->Unit(benchmark::kMicrosecond);

void BM_RwVerify(benchmark::State& state) {
  Rng rng(7);
  const RwKeypair kp = rw_keygen(static_cast<unsigned>(state.range(0)), rng);
  const RwVerificationKey vk = rw_vkeygen(rw_ckeygen(31, rng), kp.n);
  const ByteView m = as_bytes("bench");
  const RwSignature sig = rw_sign(kp, m, rng);
  const bool compressed = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compressed ? rw_cverify(sig, m, vk) : rw_verify(sig, m, kp.n));
  }
  state.SetLabel(compressed ? "cverify" : "verify");
}

BENCHMARK(BM_RwVerify)->ArgsProduct({{1024, 3072}, {0, 1}})->Unit(benchmark::kMicrosecond);

}  // namespace
