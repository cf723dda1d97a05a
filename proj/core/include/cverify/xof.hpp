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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cverify {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// One-shot SHAKE256 with `out_len` bytes of output.
Bytes shake256(ByteView input, std::size_t out_len);

inline ByteView as_bytes(const std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

Bytes concat(ByteView a, ByteView b);

/// Unbounded deterministic byte stream derived from a seed. Block i is
/// SHAKE256(seed || le64(i)); blocks are consumed in order.
class XofStream {
 public:
  explicit XofStream(ByteView seed);

  void read(std::span<std::uint8_t> out);
  std::uint8_t next_byte();
  std::uint64_t next_u64();

 private:
  void refill();

  Bytes seed_;
  Bytes block_;
  std::size_t pos_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace cverify
