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

#include "cverify/wave.hpp"

#include <cmath>
#include <limits>

#include "cverify/rng.hpp"

namespace cverify {
namespace {

constexpr std::string_view kHashDomain = "cverify/wave/hash";

constexpr std::array<WaveInstance, 3> kInstances = {{
    {"Wave822", 822, 128, 8576, 4288, 7668, 80},
    {"Wave1249", 1249, 192, 12544, 6272, 11216, 120},
    {"Wave1644", 1644, 256, 16512, 8256, 14764, 160},
}};

TritVector syndrome_residual(const WaveSignature& sig, ByteView message, const WaveParams& params) {
  if (sig.s.size() != params.n) {
    throw Error(ErrorCode::kMalformedSignature, "signature length differs from n");
  }
  TritVector t = sig.s;
  const TritVector h = wave_hash(sig.salt, message, params.syndrome_len());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const unsigned v = t.get(i) + 3 - h.get(i);
    t.set(i, v % 3);
  }
  return t;
}

}  // namespace

const std::array<WaveInstance, 3>& wave_instances() { return kInstances; }

const WaveInstance& wave_instance(std::uint16_t tag) {
  for (const auto& inst : kInstances) {
    if (inst.tag == tag) return inst;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown Wave instance tag");
}

const WaveInstance& wave_instance(const std::string& name) {
  for (const auto& inst : kInstances) {
    if (name == inst.name || name == std::to_string(inst.tag)) return inst;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown Wave instance: " + name);
}

std::string WaveParams::name() const {
  return tag == kWaveToyTag ? std::string("toy") : wave_instance(tag).name;
}

WaveParams wave_named_params(std::uint16_t tag) {
  const WaveInstance& inst = wave_instance(tag);
  return {inst.tag, inst.n, inst.k, inst.w};
}

TritVector wave_hash(ByteView salt, ByteView message, std::size_t len) {
  Bytes seed(kHashDomain.begin(), kHashDomain.end());
  seed.insert(seed.end(), salt.begin(), salt.end());
  seed.insert(seed.end(), message.begin(), message.end());
  XofStream xof(seed);
  TritVector out(len);
  std::size_t i = 0;
  while (i < len) {
    const std::uint8_t byte = xof.next_byte();
    for (unsigned sh = 0; sh < 8 && i < len; sh += 2) {
      const unsigned chunk = (byte >> sh) & 3;
      if (chunk != 3) out.set(i++, chunk);
    }
  }
  return out;
}

Verdict wave_verify(const WaveSignature& sig, ByteView message, const WavePublicKey& pk,
                    const WaveParams& params, OpTally* tally) {
  const TritVector t = syndrome_residual(sig, message, params);
  if (pk.r.rows() != params.k || pk.r.cols() != params.syndrome_len()) {
    throw Error(ErrorCode::kDimensionMismatch, "public key does not match parameters");
  }
  if (sig.s.weight() != params.w) return Verdict::kReject;
  TritVector acc = f3_matvec(t.slice(params.syndrome_len(), params.k), pk.r);
  acc.add_assign(t.slice(0, params.syndrome_len()));
  if (tally != nullptr) {
    tally->word_mul += (params.k + 1) * params.syndrome_len();
    tally->reductions += params.syndrome_len();
  }
  return verdict_from(acc.is_zero());
}

WaveCompressionKey wave_ckeygen(const WaveParams& params, std::size_t c, Rng& rng) {
  const std::size_t rows = params.syndrome_len();
  if (c == 0 || c > rows) throw Error(ErrorCode::kInvalidArgument, "c must be in [1, n-k]");
  TernaryMatrix m = TernaryMatrix::identity(c).stacked(TernaryMatrix::random(rows - c, c, rng));
  return {std::move(m)};
}

WaveVerificationKey wave_vkeygen(const WavePublicKey& pk, const WaveCompressionKey& ck,
                                 const WaveParams& params) {
  const std::size_t rows = params.syndrome_len();
  if (pk.r.rows() != params.k || pk.r.cols() != rows || ck.c.rows() != rows) {
    throw Error(ErrorCode::kDimensionMismatch, "keys do not match parameters");
  }
  const std::size_t c = ck.dim();
  TernaryMatrix bottom = ck.c.row_block(c, rows - c).stacked(f3_matmul(pk.r, ck.c));
  return {params.n, std::move(bottom)};
}

bool wave_syndrome_vanishes(const TritVector& t, const WaveVerificationKey& vk, OpTally* tally) {
  const std::size_t c = vk.dim();
  if (t.size() != vk.n || vk.bottom.rows() + c != vk.n) {
    throw Error(ErrorCode::kDimensionMismatch, "syndrome length differs from n");
  }
  TritVector acc = f3_matvec(t.slice(c, vk.n - c), vk.bottom);
  acc.add_assign(t.slice(0, c));
  if (tally != nullptr) {
    tally->word_mul += (vk.n - c + 1) * c;
    tally->reductions += c;
  }
  return acc.is_zero();
}

Verdict wave_cverify(const WaveSignature& sig, ByteView message, const WaveVerificationKey& vk,
                     const WaveParams& params, OpTally* tally) {
  const TritVector t = syndrome_residual(sig, message, params);
  if (vk.n != params.n) {
    throw Error(ErrorCode::kDimensionMismatch, "verification key does not match parameters");
  }
  if (sig.s.weight() != params.w) return Verdict::kReject;
  return verdict_from(wave_syndrome_vanishes(t, vk, tally));
}

CompressionDimChoice wave_choose_c(double target_mu) {
  const double per_trit = std::log2(3.0);
  CompressionDimChoice best{8, 8 * per_trit};
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t c = 8; c <= 4096; c += 8) {
    const double mu = static_cast<double>(c) * per_trit;
    const double gap = std::abs(mu - target_mu);
    if (gap < best_gap) {
      best_gap = gap;
      best = {c, mu};
    }
  }
  return best;
}

WavePublicKey wave_toy_keygen(const WaveParams& params, Rng& rng) {
  if (params.k == 0 || params.k >= params.n) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < k < n");
  }
  return {TernaryMatrix::random(params.k, params.syndrome_len(), rng)};
}

WaveSignature wave_toy_sign(const WavePublicKey& pk, ByteView message, const WaveParams& params,
                            Rng& rng, std::size_t max_tries) {
  const std::size_t rows = params.syndrome_len();
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    WaveSignature sig{rng.bytes(kWaveSaltBytes), TritVector(params.n)};
    const TritVector tail = TritVector::random(params.k, rng);
    TritVector head = f3_matvec(tail, pk.r).negated();
    head.add_assign(wave_hash(sig.salt, message, rows));
    for (std::size_t i = 0; i < rows; ++i) sig.s.set(i, head.get(i));
    for (std::size_t i = 0; i < params.k; ++i) sig.s.set(rows + i, tail.get(i));
    if (sig.s.weight() == params.w) return sig;
  }
  throw Error(ErrorCode::kResampleLimit, "toy signing exceeded its retry budget");
}

}  // namespace cverify
