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

#include "cverify/codec.hpp"

#include <array>
#include <cstring>
#include <string>

namespace cverify {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'C', 'V', 'K', '1'};

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { le(v, 2); }
  void u32(std::uint32_t v) { le(v, 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void bytes(ByteView b) {
    if (b.empty()) return;
    const std::size_t old = out_.size();
    out_.resize(old + b.size());
    std::memcpy(out_.data() + old, b.data(), b.size());
  }
  Bytes take() { return std::move(out_); }

 private:
  void le(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  Bytes out_;
};

class Reader {
 public:
  Reader(ByteView in, ErrorCode code) : in_(in), code_(code) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  std::uint64_t u64() { return le(8); }
  Bytes bytes(std::size_t n) {
    need(n);
    Bytes out(in_.begin() + static_cast<std::ptrdiff_t>(pos_),
              in_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
  }
  ByteView view(std::size_t n) {
    need(n);
    const ByteView out = in_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  void finish() const {
    if (pos_ != in_.size()) fail("trailing bytes");
  }
  [[noreturn]] void fail(const std::string& what) const { throw Error(code_, what); }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) fail("truncated payload");
  }
  std::uint64_t le(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
    pos_ += static_cast<std::size_t>(width);
    return v;
  }

  ByteView in_;
  std::size_t pos_ = 0;
  ErrorCode code_;
};

std::uint32_t residue_field(Reader& rd, u64 modulus) {
  const std::uint32_t v = rd.u32();
  if (v >= modulus || (v >> 31) != 0) rd.fail("residue out of range");
  return v;
}

PrimeBasis basis_or_fail(const std::vector<u64>& primes, const Reader& rd) {
  try {
    return PrimeBasis(primes);
  } catch (const Error& e) {
    rd.fail(e.what());
  }
}

void pack_trits(Writer& w, const TritVector& v) {
  for (std::size_t b = 0; b < (v.size() + 3) / 4; ++b) {
    std::uint8_t byte = 0;
    for (std::size_t k = 0; k < 4 && 4 * b + k < v.size(); ++k) {
      byte |= static_cast<std::uint8_t>(v.get(4 * b + k) << (2 * k));
    }
    w.u8(byte);
  }
}

TritVector unpack_trits(Reader& rd, std::size_t len) {
  TritVector v(len);
  const ByteView raw = rd.view((len + 3) / 4);
  for (std::size_t i = 0; i < raw.size() * 4; ++i) {
    const unsigned field = (raw[i / 4] >> (2 * (i % 4))) & 3;
    if (field == 3) rd.fail("field is not a trit");
    if (i >= len) {
      if (field != 0) rd.fail("nonzero padding");
      continue;
    }
    v.set(i, field);
  }
  return v;
}

Bytes big_field(const BigInt& x) {
  Writer w;
  const Bytes mag = to_bytes_le(abs(x));
  w.u32(static_cast<std::uint32_t>(mag.size()));
  w.bytes(mag);
  return w.take();
}

BigInt read_big(Reader& rd) {
  const std::uint32_t len = rd.u32();
  return from_bytes_le(rd.view(len));
}

}  // namespace

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kRw: return "rw";
    case Scheme::kSquirrels: return "squirrels";
    case Scheme::kWave: return "wave";
  }
  return "?";
}

const char* to_string(FileKind kind) {
  switch (kind) {
    case FileKind::kPublicKey: return "pk";
    case FileKind::kCompressionKey: return "ck";
    case FileKind::kVerificationKey: return "vk";
    case FileKind::kSignature: return "sig";
    case FileKind::kParams: return "params";
    case FileKind::kSecretKey: return "sk";
  }
  return "?";
}

Bytes encode_file(Scheme scheme, FileKind kind, std::uint16_t tag, ByteView payload) {
  Writer w;
  w.bytes(kMagic);
  w.u8(static_cast<std::uint8_t>(scheme));
  w.u8(static_cast<std::uint8_t>(kind));
  w.u16(tag);
  w.u64(payload.size());
  w.bytes(payload);
  return w.take();
}

DecodedFile decode_file(ByteView file) {
  Reader rd(file, ErrorCode::kMalformedInput);
  const ByteView magic = rd.view(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) rd.fail("bad magic");
  DecodedFile out;
  const std::uint8_t scheme = rd.u8();
  const std::uint8_t kind = rd.u8();
  if (scheme > 2) rd.fail("unknown scheme");
  if (kind > 5) rd.fail("unknown file kind");
  out.header.scheme = static_cast<Scheme>(scheme);
  out.header.kind = static_cast<FileKind>(kind);
  out.header.tag = rd.u16();
  out.header.payload_len = rd.u64();
  if (out.header.payload_len != file.size() - kHeaderBytes) rd.fail("payload length mismatch");
  out.payload = rd.bytes(out.header.payload_len);
  return out;
}

// Squirrels

Bytes encode_squirrels_params(const SquirrelsParams& params) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(params.n));
  w.u32(static_cast<std::uint32_t>(params.q));
  w.u64(params.beta_sq);
  w.u32(static_cast<std::uint32_t>(params.s()));
  for (const auto& p : params.public_basis.moduli()) w.u32(static_cast<std::uint32_t>(p.value()));
  return w.take();
}

SquirrelsParams decode_squirrels_params(ByteView payload, std::uint16_t tag) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  SquirrelsParams p;
  p.tag = tag;
  p.n = rd.u32();
  p.q = rd.u32();
  p.beta_sq = rd.u64();
  const std::uint32_t s = rd.u32();
  if (static_cast<std::uint64_t>(s) * 4 != payload.size() - 20) rd.fail("basis length mismatch");
  std::vector<u64> primes(s);
  for (auto& v : primes) v = rd.u32();
  rd.finish();
  p.public_basis = basis_or_fail(primes, rd);
  try {
    p.validate();
  } catch (const Error& e) {
    rd.fail(e.what());
  }
  return p;
}

Bytes encode_squirrels_pk(const SquirrelsPublicKey& pk) {
  Writer w;
  for (const std::uint32_t v : pk.v) w.u32(v);
  return w.take();
}

SquirrelsPublicKey decode_squirrels_pk(ByteView payload, const SquirrelsParams& params) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  if (payload.size() != squirrels_pk_bytes(params.n, params.s())) rd.fail("public key size");
  SquirrelsPublicKey pk{params.n, params.s(), {}};
  pk.v.resize((params.n - 1) * params.s());
  for (std::size_t j = 0; j < params.s(); ++j) {
    const u64 p = params.public_basis[j].value();
    for (std::size_t i = 0; i + 1 < params.n; ++i) pk.v[j * (params.n - 1) + i] = residue_field(rd, p);
  }
  rd.finish();
  return pk;
}

Bytes encode_squirrels_ck(const SquirrelsCompressionKey& ck) {
  const EcrtPrecomp& pre = ck.precomp;
  Writer w;
  for (const auto& r : pre.secret_basis().moduli()) w.u32(static_cast<std::uint32_t>(r.value()));
  for (std::size_t k = 0; k < pre.t(); ++k) {
    for (std::size_t i = 0; i < pre.s(); ++i) w.u32(static_cast<std::uint32_t>(pre.delta_i(i, k)));
  }
  for (std::size_t k = 0; k < pre.t(); ++k) w.u32(static_cast<std::uint32_t>(pre.delta(k)));
  for (const u64 v : ck.inv_delta) w.u32(static_cast<std::uint32_t>(v));
  return w.take();
}

SquirrelsCompressionKey decode_squirrels_ck(ByteView payload, const SquirrelsParams& params) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const std::size_t s = params.s();
  const std::size_t unit = squirrels_ck_bytes(s, 1);
  if (payload.empty() || payload.size() % unit != 0) rd.fail("compression key size");
  const std::size_t t = payload.size() / unit;
  std::vector<u64> r(t);
  for (auto& v : r) {
    v = rd.u32();
    if (!is_prime(v) || (v >> 31) != 0) rd.fail("secret modulus is not a prime below 2^31");
  }
  const PrimeBasis secret = basis_or_fail(r, rd);
  std::vector<u64> delta_i(t * s);
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = 0; i < s; ++i) delta_i[k * s + i] = residue_field(rd, r[k]);
  }
  std::vector<u64> delta(t);
  std::vector<u64> inv(t);
  for (std::size_t k = 0; k < t; ++k) delta[k] = residue_field(rd, r[k]);
  for (std::size_t k = 0; k < t; ++k) {
    inv[k] = residue_field(rd, r[k]);
    if (secret[k].mul(inv[k], delta[k]) != 1) rd.fail("inverse does not match Delta");
  }
  rd.finish();
  try {
    EcrtPrecomp pre(params.public_basis, secret, std::move(delta), std::move(delta_i),
                    default_precision(s));
    return {std::move(pre), std::move(inv)};
  } catch (const Error& e) {
    rd.fail(e.what());
  }
}

Bytes encode_squirrels_vk(const SquirrelsVerificationKey& vk) {
  Writer w;
  for (const auto& r : vk.secret_basis.moduli()) w.u32(static_cast<std::uint32_t>(r.value()));
  for (const u64 v : vk.inv_delta) w.u32(static_cast<std::uint32_t>(v));
  for (std::size_t j = 0; j < vk.t(); ++j) {
    for (std::size_t i = 0; i + 1 < vk.n; ++i) w.u32(vk.at(i, j));
  }
  return w.take();
}

SquirrelsVerificationKey decode_squirrels_vk(ByteView payload, const SquirrelsParams& params) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const std::size_t n = params.n;
  const std::size_t unit = squirrels_vk_bytes(n, 1);
  if (payload.empty() || payload.size() % unit != 0) rd.fail("verification key size");
  const std::size_t t = payload.size() / unit;
  std::vector<u64> r(t);
  for (auto& v : r) {
    v = rd.u32();
    if (!is_prime(v) || (v >> 31) != 0) rd.fail("secret modulus is not a prime below 2^31");
  }
  SquirrelsVerificationKey vk{basis_or_fail(r, rd), std::vector<u64>(t), n, {}};
  for (std::size_t k = 0; k < t; ++k) vk.inv_delta[k] = residue_field(rd, r[k]);
  vk.vbar.resize(n * t);
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = 0; i + 1 < n; ++i) vk.vbar[k * n + i] = residue_field(rd, r[k]);
    vk.vbar[k * n + n - 1] = static_cast<std::uint32_t>(r[k] - 1);
  }
  rd.finish();
  return vk;
}

Bytes encode_squirrels_sig(const SquirrelsSignature& sig) {
  Writer w;
  w.bytes(sig.salt);
  for (const std::int32_t v : sig.s) w.u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  return w.take();
}

SquirrelsSignature decode_squirrels_sig(ByteView payload, const SquirrelsParams& params) {
  Reader rd(payload, ErrorCode::kMalformedSignature);
  if (payload.size() != kSquirrelsSaltBytes + 2 * params.n) rd.fail("signature size");
  SquirrelsSignature sig{rd.bytes(kSquirrelsSaltBytes), std::vector<std::int32_t>(params.n)};
  for (auto& v : sig.s) {
    v = static_cast<std::int16_t>(rd.u16());
    if (v == -32768) rd.fail("coordinate out of range");
  }
  return sig;
}

Bytes encode_squirrels_toy_secret(const SquirrelsToySecret& secret) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(secret.n));
  for (const std::int64_t v : secret.g) w.u64(static_cast<std::uint64_t>(v));
  return w.take();
}

SquirrelsToySecret decode_squirrels_toy_secret(ByteView payload) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const std::uint32_t n = rd.u32();
  if (n < 2 || n > 32 || payload.size() != 4 + 8 * std::size_t{n} * n) rd.fail("secret size");
  std::vector<std::int64_t> g(std::size_t{n} * n);
  for (auto& v : g) v = static_cast<std::int64_t>(rd.u64());
  try {
    return squirrels_toy_secret_from_basis(n, std::move(g));
  } catch (const Error& e) {
    rd.fail(e.what());
  }
}

// Wave

Bytes encode_wave_params(const WaveParams& params) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(params.n));
  w.u32(static_cast<std::uint32_t>(params.k));
  w.u32(static_cast<std::uint32_t>(params.w));
  return w.take();
}

WaveParams decode_wave_params(ByteView payload, std::uint16_t tag) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  WaveParams p;
  p.tag = tag;
  p.n = rd.u32();
  p.k = rd.u32();
  p.w = rd.u32();
  rd.finish();
  if (p.k == 0 || p.k >= p.n || p.w > p.n) rd.fail("inconsistent Wave parameters");
  return p;
}

Bytes encode_trit_matrix(const TernaryMatrix& m) {
  Writer w;
  for (std::size_t r = 0; r < m.rows(); ++r) pack_trits(w, m.row_vector(r));
  return w.take();
}

TernaryMatrix decode_trit_matrix(ByteView payload, std::size_t rows, std::size_t cols) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  if (payload.size() != rows * ((cols + 3) / 4)) rd.fail("matrix size");
  TernaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, unpack_trits(rd, cols));
  return m;
}

Bytes encode_wave_pk(const WavePublicKey& pk) { return encode_trit_matrix(pk.r); }

WavePublicKey decode_wave_pk(ByteView payload, const WaveParams& params) {
  return {decode_trit_matrix(payload, params.k, params.syndrome_len())};
}

Bytes encode_wave_ck(const WaveCompressionKey& ck) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(ck.dim()));
  w.bytes(encode_trit_matrix(ck.c));
  return w.take();
}

WaveCompressionKey decode_wave_ck(ByteView payload, const WaveParams& params) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const std::uint32_t c = rd.u32();
  const std::size_t rows = params.syndrome_len();
  if (c == 0 || c > rows) rd.fail("compression dimension");
  WaveCompressionKey ck{decode_trit_matrix(payload.subspan(4), rows, c)};
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (ck.c.get(i, j) != (i == j ? 1u : 0u)) rd.fail("compression key is not systematic");
    }
  }
  return ck;
}

Bytes encode_wave_vk(const WaveVerificationKey& vk) { return encode_trit_matrix(vk.bottom); }

WaveVerificationKey decode_wave_vk(ByteView payload, const WaveParams& params) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  std::size_t found = 0;
  std::size_t matches = 0;
  for (std::size_t c = 1; c <= params.syndrome_len(); ++c) {
    if (wave_vk_bytes(params.n, c) == payload.size()) {
      found = c;
      ++matches;
    }
  }
  if (matches != 1) rd.fail("verification key size does not determine c");
  return {params.n, decode_trit_matrix(payload, params.n - found, found)};
}

Bytes encode_wave_sig(const WaveSignature& sig) {
  Writer w;
  w.bytes(sig.salt);
  pack_trits(w, sig.s);
  return w.take();
}

WaveSignature decode_wave_sig(ByteView payload, const WaveParams& params) {
  Reader rd(payload, ErrorCode::kMalformedSignature);
  if (payload.size() != kWaveSaltBytes + (params.n + 3) / 4) rd.fail("signature size");
  WaveSignature sig;
  sig.salt = rd.bytes(kWaveSaltBytes);
  sig.s = unpack_trits(rd, params.n);
  return sig;
}

// Rabin-Williams

Bytes encode_rw_pk(const BigInt& n) { return to_bytes_le(n); }

BigInt decode_rw_pk(ByteView payload) {
  if (payload.empty() || payload.back() == 0) {
    throw Error(ErrorCode::kMalformedInput, "modulus encoding");
  }
  return from_bytes_le(payload);
}

Bytes encode_rw_sk(const RwKeypair& sk) {
  Writer w;
  w.bytes(big_field(sk.p));
  w.bytes(big_field(sk.q));
  return w.take();
}

RwKeypair decode_rw_sk(ByteView payload) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const BigInt p = read_big(rd);
  const BigInt q = read_big(rd);
  rd.finish();
  try {
    return RwKeypair::from_primes(p, q);
  } catch (const Error& e) {
    rd.fail(e.what());
  }
}

Bytes encode_rw_ck(const WordModulus& ell) {
  Writer w;
  w.u64(ell.value());
  return w.take();
}

WordModulus decode_rw_ck(ByteView payload) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const std::uint64_t ell = rd.u64();
  rd.finish();
  if (ell >= WordModulus::kMax || !is_prime(ell)) rd.fail("secret modulus is not a prime");
  return WordModulus(ell);
}

Bytes encode_rw_vk(const RwVerificationKey& vk) {
  Writer w;
  w.u64(vk.ell.value());
  w.u64(vk.n_ell);
  w.u32(vk.hash_bits);
  return w.take();
}

RwVerificationKey decode_rw_vk(ByteView payload) {
  Reader rd(payload, ErrorCode::kMalformedInput);
  const std::uint64_t ell = rd.u64();
  const std::uint64_t n_ell = rd.u64();
  const std::uint32_t bits = rd.u32();
  rd.finish();
  if (ell >= WordModulus::kMax || !is_prime(ell) || n_ell >= ell) rd.fail("verification key");
  return {WordModulus(ell), n_ell, bits};
}

Bytes encode_rw_sig(const RwSignature& sig) {
  Writer w;
  w.u8(static_cast<std::uint8_t>(static_cast<std::int8_t>(sig.e)));
  w.u8(static_cast<std::uint8_t>(sig.f));
  w.bytes(sig.salt);
  w.bytes(big_field(sig.s));
  w.u8(sig.t < 0 ? 1 : 0);
  w.bytes(big_field(sig.t));
  return w.take();
}

RwSignature decode_rw_sig(ByteView payload) {
  Reader rd(payload, ErrorCode::kMalformedSignature);
  RwSignature sig;
  sig.e = static_cast<std::int8_t>(rd.u8());
  sig.f = rd.u8();
  if ((sig.e != 1 && sig.e != -1) || (sig.f != 1 && sig.f != 2)) rd.fail("e or f out of range");
  sig.salt = rd.bytes(kRwSaltBytes);
  sig.s = read_big(rd);
  const std::uint8_t negative = rd.u8();
  if (negative > 1) rd.fail("sign byte");
  sig.t = read_big(rd);
  if (negative == 1) sig.t = -sig.t;
  rd.finish();
  return sig;
}

}  // namespace cverify
