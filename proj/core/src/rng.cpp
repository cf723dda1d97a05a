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

#include "cverify/rng.hpp"

#include <array>
#include <random>

namespace cverify {

namespace {
std::array<std::uint8_t, 16> seed_block(std::uint64_t seed) {
  std::array<std::uint8_t, 16> b{'c', 'v', 'r', 'n', 'g', '/', '1', 0};
  for (int i = 0; i < 8; ++i) b[8 + i] = static_cast<std::uint8_t>(seed >> (8 * i));
  return b;
}
}  // namespace

Rng::Rng(std::uint64_t seed) : stream_(seed_block(seed)) {}

Rng Rng::from_entropy() {
  std::random_device rd;
  std::array<std::uint8_t, 32> seed{};
  for (std::size_t i = 0; i < seed.size(); i += 4) {
    const std::uint32_t w = rd();
    for (int k = 0; k < 4; ++k) seed[i + k] = static_cast<std::uint8_t>(w >> (8 * k));
  }
  return Rng(ByteView(seed));
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  // Largest multiple of bound that fits; reject above it.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());
  return lo + static_cast<std::int64_t>(uniform(span));
}

double Rng::uniform_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Rng Rng::fork() {
  std::array<std::uint8_t, 32> seed{};
  fill(seed);
  return Rng(ByteView(seed));
}

}  // namespace cverify
