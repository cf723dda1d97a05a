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

// Binary file formats. Every file is a 16-byte header followed by a payload:
//
//   0  magic "CVK1"
//   4  scheme  (0 RW, 1 Squirrels, 2 Wave)
//   5  kind    (0 PK, 1 CK, 2 VK, 3 SIG, 4 PARAMS, 5 SK)
//   6  instance tag, u16
//   8  payload length, u64
//
// All integers are little-endian. Squirrels residues are 32-bit signed
// fields holding non-negative values, secret-prime (or public-prime) major.
// Trits are packed four per byte, two bits each, least significant first,
// with each matrix row starting on a byte boundary.

#include <cstddef>
#include <cstdint>

#include "cverify/rw.hpp"
#include "cverify/squirrels.hpp"
#include "cverify/wave.hpp"
#include "cverify/xof.hpp"

namespace cverify {

enum class Scheme : std::uint8_t { kRw = 0, kSquirrels = 1, kWave = 2 };

enum class FileKind : std::uint8_t {
  kPublicKey = 0,
  kCompressionKey = 1,
  kVerificationKey = 2,
  kSignature = 3,
  kParams = 4,
  kSecretKey = 5,
};

const char* to_string(Scheme scheme);
const char* to_string(FileKind kind);

inline constexpr std::size_t kHeaderBytes = 16;

struct FileHeader {
  Scheme scheme = Scheme::kRw;
  FileKind kind = FileKind::kPublicKey;
  std::uint16_t tag = 0;
  std::uint64_t payload_len = 0;
};

struct DecodedFile {
  FileHeader header;
  Bytes payload;
};

Bytes encode_file(Scheme scheme, FileKind kind, std::uint16_t tag, ByteView payload);
/// Throws kMalformedInput for a bad magic, unknown scheme or kind, or a
/// payload length that disagrees with the file size.
DecodedFile decode_file(ByteView file);

// Squirrels. Signature decoders throw kMalformedSignature; everything else
// throws kMalformedInput.
Bytes encode_squirrels_params(const SquirrelsParams& params);
SquirrelsParams decode_squirrels_params(ByteView payload, std::uint16_t tag);
Bytes encode_squirrels_pk(const SquirrelsPublicKey& pk);
SquirrelsPublicKey decode_squirrels_pk(ByteView payload, const SquirrelsParams& params);
/// r, Delta_i residues, Delta residues, I; 4(s+3)t bytes.
Bytes encode_squirrels_ck(const SquirrelsCompressionKey& ck);
SquirrelsCompressionKey decode_squirrels_ck(ByteView payload, const SquirrelsParams& params);
/// r, I, vbar rows 1..n-1; 4(n+1)t bytes.
Bytes encode_squirrels_vk(const SquirrelsVerificationKey& vk);
SquirrelsVerificationKey decode_squirrels_vk(ByteView payload, const SquirrelsParams& params);
/// salt, then n coordinates as 16-bit signed values.
Bytes encode_squirrels_sig(const SquirrelsSignature& sig);
SquirrelsSignature decode_squirrels_sig(ByteView payload, const SquirrelsParams& params);
Bytes encode_squirrels_toy_secret(const SquirrelsToySecret& secret);
SquirrelsToySecret decode_squirrels_toy_secret(ByteView payload);

// Wave.
Bytes encode_wave_params(const WaveParams& params);
WaveParams decode_wave_params(ByteView payload, std::uint16_t tag);
Bytes encode_trit_matrix(const TernaryMatrix& m);
TernaryMatrix decode_trit_matrix(ByteView payload, std::size_t rows, std::size_t cols);
Bytes encode_wave_pk(const WavePublicKey& pk);
WavePublicKey decode_wave_pk(ByteView payload, const WaveParams& params);
/// u32 c, then C row by row.
Bytes encode_wave_ck(const WaveCompressionKey& ck);
WaveCompressionKey decode_wave_ck(ByteView payload, const WaveParams& params);
/// The n-c stored rows only; c is recovered from the length.
Bytes encode_wave_vk(const WaveVerificationKey& vk);
WaveVerificationKey decode_wave_vk(ByteView payload, const WaveParams& params);
Bytes encode_wave_sig(const WaveSignature& sig);
WaveSignature decode_wave_sig(ByteView payload, const WaveParams& params);

// Rabin-Williams.
Bytes encode_rw_pk(const BigInt& n);
BigInt decode_rw_pk(ByteView payload);
Bytes encode_rw_sk(const RwKeypair& sk);
RwKeypair decode_rw_sk(ByteView payload);
Bytes encode_rw_ck(const WordModulus& ell);
WordModulus decode_rw_ck(ByteView payload);
Bytes encode_rw_vk(const RwVerificationKey& vk);
RwVerificationKey decode_rw_vk(ByteView payload);
Bytes encode_rw_sig(const RwSignature& sig);
RwSignature decode_rw_sig(ByteView payload);

}  // namespace cverify
