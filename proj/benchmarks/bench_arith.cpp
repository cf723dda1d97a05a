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

#include "cverify/ecrt.hpp"
#include "cverify/rng.hpp"
#include "cverify/ternary.hpp"

using namespace cverify;

namespace {

void BM_ModEcrt(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<std::size_t>(state.range(1));
  Rng rng(11);
  std::vector<u64> all;
  for (std::size_t i = 0; i < s + t; ++i) all.push_back(sample_prime(PrimeWidth(31), rng, all).value());
  const PrimeBasis p(std::span<const u64>(all).first(s));
  const PrimeBasis r(std::span<const u64>(all).subspan(s));
  const EcrtPrecomp pre = mod_ecrt_setup(p, r);
  const CrtCoefficients q = q_coefficients(p);
  RnsResidues x;
  for (std::size_t i = 0; i < s; ++i) x.values.push_back(rng.uniform(p[i].value()));
  for (auto _ : state) benchmark::DoNotOptimize(mod_ecrt(pre, q, x));
}

BENCHMARK(BM_ModEcrt)->Args({165, 5})->Args({339, 11});

void BM_WordMul(benchmark::State& state) {
  Rng rng(12);
  const WordModulus m = sample_prime(PrimeWidth(static_cast<unsigned>(state.range(0))), rng);
  u64 a = rng.uniform(m.value());
  const u64 b = rng.uniform(m.value());
  for (auto _ : state) {
    a = m.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}

BENCHMARK(BM_WordMul)->Arg(31)->Arg(62);

void BM_F3Matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = static_cast<std::size_t>(state.range(1));
  Rng rng(13);
  const TernaryMatrix m = TernaryMatrix::random(n, c, rng);
  const TritVector v = TritVector::random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(f3_matvec(v, m));
}

BENCHMARK(BM_F3Matvec)->Args({4288, 4288})->Args({8496, 80})->Unit(benchmark::kMicrosecond);

}  // namespace
