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

#include "cverify/xof.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace cverify {

namespace {
constexpr std::size_t kBlockBytes = 512;

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};
}  // namespace

Bytes shake256(ByteView input, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  Bytes out(out_len);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw std::runtime_error("SHAKE256 failed");
  }
  return out;
}

Bytes concat(ByteView a, ByteView b) {
  Bytes out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

XofStream::XofStream(ByteView seed) : seed_(seed.begin(), seed.end()) {
  seed_.resize(seed_.size() + 8);
  refill();
}

void XofStream::refill() {
  const std::size_t at = seed_.size() - 8;
  for (int i = 0; i < 8; ++i) {
    seed_[at + i] = static_cast<std::uint8_t>(counter_ >> (8 * i));
  }
  ++counter_;
  block_ = shake256(seed_, kBlockBytes);
  pos_ = 0;
}

void XofStream::read(std::span<std::uint8_t> out) {
  for (auto& b : out) b = next_byte();
}

std::uint8_t XofStream::next_byte() {
  if (pos_ == block_.size()) refill();
  return block_[pos_++];
}

std::uint64_t XofStream::next_u64() {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(next_byte()) << (8 * i);
  return v;
}

}  // namespace cverify
