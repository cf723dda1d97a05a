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

// Wave-shape verification over F3. A signature s of length n and weight w is
// valid for public R (k x (n-k)) when
//   s_[0, n-k) + s_[n-k, n) * R = Hash(salt || m).
// The compressed check multiplies t = s - (Hash | 0) by VK = (I | R)^T C for
// a secret systematic C of shape (n-k) x c, so only n x c trits are used.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "cverify/common.hpp"
#include "cverify/ternary.hpp"
#include "cverify/xof.hpp"

namespace cverify {

class Rng;

inline constexpr std::size_t kWaveSaltBytes = 16;
inline constexpr std::uint16_t kWaveToyTag = 0;

struct WaveInstance {
  const char* name;
  std::uint16_t tag;
  unsigned lambda;
  std::size_t n;
  std::size_t k;
  std::size_t w;
  std::size_t c;
};

/// Wave822, Wave1249, Wave1644.
const std::array<WaveInstance, 3>& wave_instances();
const WaveInstance& wave_instance(std::uint16_t tag);
const WaveInstance& wave_instance(const std::string& name);

struct WaveParams {
  std::uint16_t tag = kWaveToyTag;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t w = 0;

  std::size_t syndrome_len() const { return n - k; }
  std::string name() const;
  friend bool operator==(const WaveParams&, const WaveParams&) = default;
};

WaveParams wave_named_params(std::uint16_t tag);

/// R, k x (n-k).
struct WavePublicKey {
  TernaryMatrix r;
  friend bool operator==(const WavePublicKey&, const WavePublicKey&) = default;
};

/// C, (n-k) x c with an identity top block.
struct WaveCompressionKey {
  TernaryMatrix c;
  std::size_t dim() const { return c.cols(); }
  friend bool operator==(const WaveCompressionKey&, const WaveCompressionKey&) = default;
};

/// Rows c..n-1 of (I | R)^T C; the top c rows are the identity.
struct WaveVerificationKey {
  std::size_t n = 0;
  TernaryMatrix bottom;
  std::size_t dim() const { return bottom.cols(); }
  friend bool operator==(const WaveVerificationKey&, const WaveVerificationKey&) = default;
};

struct WaveSignature {
  Bytes salt;
  TritVector s;
  friend bool operator==(const WaveSignature&, const WaveSignature&) = default;
};

/// Hash(salt || m) in F3^len: 2-bit chunks of the XOF stream, value 3 skipped.
TritVector wave_hash(ByteView salt, ByteView message, std::size_t len);

/// Throws kMalformedSignature when the signature length is not n.
Verdict wave_verify(const WaveSignature& sig, ByteView message, const WavePublicKey& pk,
                    const WaveParams& params, OpTally* tally = nullptr);

WaveCompressionKey wave_ckeygen(const WaveParams& params, std::size_t c, Rng& rng);
/// Throws kDimensionMismatch.
WaveVerificationKey wave_vkeygen(const WavePublicKey& pk, const WaveCompressionKey& ck,
                                 const WaveParams& params);

/// t * VK = 0 with the implicit identity rows restored.
bool wave_syndrome_vanishes(const TritVector& t, const WaveVerificationKey& vk,
                            OpTally* tally = nullptr);

Verdict wave_cverify(const WaveSignature& sig, ByteView message, const WaveVerificationKey& vk,
                     const WaveParams& params, OpTally* tally = nullptr);

struct CompressionDimChoice {
  std::size_t c;
  double mu;
};

/// Multiple of 8 whose c * log2(3) is nearest target_mu.
CompressionDimChoice wave_choose_c(double target_mu);

inline std::size_t wave_vk_bytes(std::size_t n, std::size_t c) { return (n - c) * ((c + 3) / 4); }

WavePublicKey wave_toy_keygen(const WaveParams& params, Rng& rng);
/// Throws kResampleLimit after `max_tries` salts.
WaveSignature wave_toy_sign(const WavePublicKey& pk, ByteView message, const WaveParams& params,
                            Rng& rng, std::size_t max_tries = 100000);

}  // namespace cverify
