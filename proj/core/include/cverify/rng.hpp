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

#pragma once

#include <cstdint>
#include <span>

#include "cverify/xof.hpp"

namespace cverify {

/// Seeded deterministic random source backed by a SHAKE256 stream.
/// Not thread-safe; give each thread its own instance (see fork()).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  explicit Rng(ByteView seed) : stream_(seed) {}

  /// Seed drawn from std::random_device.
  static Rng from_entropy();

  std::uint64_t next_u64() { return stream_.next_u64(); }
  void fill(std::span<std::uint8_t> out) { stream_.read(out); }
  Bytes bytes(std::size_t n);

  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform in [lo, hi], lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double uniform_real();

  /// Independent child stream.
  Rng fork();

 private:
  XofStream stream_;
};

}  // namespace cverify
