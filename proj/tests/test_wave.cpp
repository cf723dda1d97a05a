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

#include <cmath>

#include "cverify/rng.hpp"
#include "cverify/wave.hpp"
#include "doctest.h"

using namespace cverify;

namespace {

const ByteView kMsg = as_bytes("wave toy message");

// Schoolbook F3 products on unpacked trits.
std::vector<unsigned> naive_matvec(const std::vector<unsigned>& v, const TernaryMatrix& m) {
  std::vector<unsigned> out(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    unsigned acc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) acc += v[r] * m.get(r, c);
    out[c] = acc % 3;
  }
  return out;
}

std::vector<unsigned> unpack(const TritVector& v) {
  std::vector<unsigned> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
  return out;
}

WaveParams toy_params() { return {kWaveToyTag, 24, 12, 16}; }

}  // namespace

TEST_CASE("limb arithmetic matches per-field arithmetic") {
  Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const TritVector a = TritVector::random(32, rng);
    const TritVector b = TritVector::random(32, rng);
    const std::uint64_t la = a.limbs()[0];
    const std::uint64_t lb = b.limbs()[0];
    const std::uint64_t sum = f3::add(la, lb);
    const std::uint64_t neg = f3::neg(la);
    const std::uint64_t twice = f3::scale(la, 2);
    unsigned nonzero = 0;
    for (unsigned k = 0; k < 32; ++k) {
      const unsigned x = a.get(k);
      const unsigned y = b.get(k);
      CHECK(((sum >> (2 * k)) & 3) == (x + y) % 3);
      CHECK(((neg >> (2 * k)) & 3) == (3 - x) % 3);
      CHECK(((twice >> (2 * k)) & 3) == (2 * x) % 3);
      CHECK(((f3::scale(la, 0) >> (2 * k)) & 3) == 0);
      nonzero += x != 0 ? 1 : 0;
    }
    CHECK(f3::weight(la) == nonzero);
    CHECK(a.weight() == nonzero);
  }
}

TEST_CASE("trit vectors") {
  const std::vector<std::uint8_t> raw = {0, 1, 2, 2, 1, 0, 1};
  const TritVector v = TritVector::from_trits(raw);
  CHECK(v.to_trits() == raw);
  CHECK(v.weight() == 5);
  CHECK(v.slice(2, 3).to_trits() == std::vector<std::uint8_t>{2, 2, 1});
  const std::vector<std::uint8_t> bad = {0, 3};
  CHECK_THROWS_AS(TritVector::from_trits(bad), Error);
  TritVector sum = v;
  sum.add_assign(v.negated());
  CHECK(sum.is_zero());
}

TEST_CASE("f3_matvec and f3_matmul against the naive oracle") {
  Rng rng(42);
  for (std::size_t rows = 1; rows <= 64; rows += 9) {
    for (std::size_t cols = 1; cols <= 64; cols += 7) {
      const TernaryMatrix m = TernaryMatrix::random(rows, cols, rng);
      const TritVector v = TritVector::random(rows, rng);
      CHECK(unpack(f3_matvec(v, m)) == naive_matvec(unpack(v), m));
      CHECK(f3_matvec(TritVector(rows), m).is_zero());
      const TernaryMatrix b = TernaryMatrix::random(cols, 5, rng);
      const TernaryMatrix ab = f3_matmul(m, b);
      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(unpack(ab.row_vector(r)) == naive_matvec(unpack(m.row_vector(r)), b));
      }
    }
  }
  const TernaryMatrix id = TernaryMatrix::identity(8);
  const TritVector v = TritVector::random(8, rng);
  CHECK(f3_matvec(v, id) == v);
  CHECK_THROWS_AS(f3_matvec(TritVector(7), id), Error);
  CHECK_THROWS_AS(f3_matmul(id, TernaryMatrix(7, 2)), Error);
}

TEST_CASE("rank") {
  CHECK(f3_rank(TernaryMatrix::identity(9)) == 9);
  CHECK(f3_rank(TernaryMatrix(4, 4)) == 0);
  TernaryMatrix m(3, 5);
  for (std::size_t c = 0; c < 5; ++c) {
    m.set(0, c, 1);
    m.set(1, c, 2);
  }
  m.set(2, 3, 1);
  CHECK(f3_rank(m) == 2);
}

TEST_CASE("named parameters and choose_c") {
  const WaveParams p = wave_named_params(822);
  CHECK(p.n == 8576);
  CHECK(p.k == 4288);
  CHECK(p.w == 7668);
  CHECK(wave_instance(std::string("Wave1644")).c == 160);
  CHECK_THROWS_AS(wave_instance(std::uint16_t{900}), Error);
  CHECK(wave_vk_bytes(8576, 80) == 169920);
  const auto c128 = wave_choose_c(128);
  CHECK(c128.c == 80);
  CHECK(c128.mu == doctest::Approx(126.8).epsilon(0.0004));
  CHECK(wave_choose_c(192).c == 120);
  CHECK(wave_choose_c(192).mu == doctest::Approx(190.2).epsilon(0.0003));
  CHECK(wave_choose_c(256).c == 160);
  CHECK(wave_choose_c(256).mu == doctest::Approx(253.6).epsilon(0.0002));
}

TEST_CASE("hash into F3") {
  const Bytes salt(16, 1);
  const TritVector h = wave_hash(salt, kMsg, 4000);
  CHECK(h == wave_hash(salt, kMsg, 4000));
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < h.size(); ++i) ++counts[h.get(i)];
  const double sigma = std::sqrt(4000.0 * (1.0 / 3) * (2.0 / 3));
  for (auto c : counts) CHECK(std::abs(static_cast<double>(c) - 4000.0 / 3) < 4 * sigma);
}

TEST_CASE("toy keygen") {
  Rng rng(43);
  const WaveParams params = toy_params();
  const WavePublicKey pk = wave_toy_keygen(params, rng);
  CHECK(pk.r.rows() == params.k);
  CHECK(pk.r.cols() == params.n - params.k);
  Rng other(44);
  CHECK_FALSE(wave_toy_keygen(params, other) == pk);
  const WavePublicKey big = wave_toy_keygen({kWaveToyTag, 600, 300, 400}, rng);
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t r = 0; r < big.r.rows(); ++r) {
    for (std::size_t c = 0; c < big.r.cols(); ++c) ++counts[big.r.get(r, c)];
  }
  const double total = 300.0 * 300.0;
  const double sigma = std::sqrt(total * (1.0 / 3) * (2.0 / 3));
  for (auto c : counts) CHECK(std::abs(static_cast<double>(c) - total / 3) < 3 * sigma);
}

TEST_CASE("toy signatures verify; tampering rejects") {
  Rng rng(45);
  const WaveParams params = toy_params();
  const WavePublicKey pk = wave_toy_keygen(params, rng);
  for (int i = 0; i < 50; ++i) {
    const WaveSignature sig = wave_toy_sign(pk, kMsg, params, rng);
    CHECK(sig.s.weight() == params.w);
    CHECK(wave_verify(sig, kMsg, pk, params) == Verdict::kAccept);
    WaveSignature flipped = sig;
    const std::size_t pos = rng.uniform(params.n);
    flipped.s.set(pos, (sig.s.get(pos) + 1) % 3);
    CHECK(wave_verify(flipped, kMsg, pk, params) == Verdict::kReject);
  }
  const WaveSignature sig = wave_toy_sign(pk, kMsg, params, rng);
  CHECK(wave_verify(sig, as_bytes("another"), pk, params) == Verdict::kReject);
  WaveSignature truncated = sig;
  truncated.s = sig.s.slice(0, params.n - params.k);
  try {
    (void)wave_verify(truncated, kMsg, pk, params);
    FAIL("expected malformed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedSignature);
  }
  CHECK_THROWS_AS(wave_toy_sign(pk, kMsg, {kWaveToyTag, 24, 12, 0}, rng, 20), Error);
}

TEST_CASE("weight gate") {
  Rng rng(46);
  const WaveParams params = toy_params();
  const WavePublicKey pk = wave_toy_keygen(params, rng);
  const WaveSignature sig = wave_toy_sign(pk, kMsg, params, rng);
  for (const std::size_t w : {params.w - 1, params.w + 1}) {
    const WaveParams shifted{kWaveToyTag, params.n, params.k, w};
    CHECK(wave_verify(sig, kMsg, pk, shifted) == Verdict::kReject);
  }
}

TEST_CASE("compression and verification keys") {
  Rng rng(47);
  const WaveParams params = toy_params();
  const WavePublicKey pk = wave_toy_keygen(params, rng);
  const WaveCompressionKey ck = wave_ckeygen(params, 4, rng);
  CHECK(ck.c.rows() == params.n - params.k);
  CHECK(f3_rank(ck.c) == 4);
  CHECK_FALSE(wave_ckeygen(params, 4, rng) == ck);
  CHECK_THROWS_AS(wave_ckeygen(params, 0, rng), Error);

  // Kernel of x -> xC has dimension (n-k) - c: count solutions over F3^8.
  const WaveParams small{kWaveToyTag, 16, 8, 10};
  const WaveCompressionKey cks = wave_ckeygen(small, 3, rng);
  std::size_t kernel = 0;
  for (std::size_t x = 0; x < 6561; ++x) {
    TritVector v(8);
    for (std::size_t i = 0, y = x; i < 8; ++i, y /= 3) v.set(i, static_cast<unsigned>(y % 3));
    kernel += f3_matvec(v, cks.c).is_zero() ? 1 : 0;
  }
  CHECK(kernel == 243);

  const WaveVerificationKey vk = wave_vkeygen(pk, ck, params);
  CHECK(vk.bottom.rows() == params.n - 4);
  const TernaryMatrix full = TernaryMatrix::identity(params.n - params.k).stacked(pk.r);
  const TernaryMatrix expect = f3_matmul(full, ck.c);
  CHECK(expect.row_block(0, 4) == TernaryMatrix::identity(4));
  CHECK(expect.row_block(4, params.n - 4) == vk.bottom);

  const WavePublicKey zero{TernaryMatrix(params.k, params.n - params.k)};
  const WaveVerificationKey vz = wave_vkeygen(zero, ck, params);
  CHECK(vz.bottom.row_block(0, params.n - params.k - 4) == ck.c.row_block(4, params.n - params.k - 4));
  CHECK(vz.bottom.row_block(params.n - params.k - 4, params.k) == TernaryMatrix(params.k, 4));
  CHECK_THROWS_AS(wave_vkeygen(WavePublicKey{TernaryMatrix(3, 3)}, ck, params), Error);
}

TEST_CASE("completeness and tallies") {
  Rng rng(48);
  const WaveParams params = toy_params();
  const WavePublicKey pk = wave_toy_keygen(params, rng);
  for (int c = 0; c < 4; ++c) {
    const WaveVerificationKey vk = wave_vkeygen(pk, wave_ckeygen(params, 4, rng), params);
    for (int i = 0; i < 50; ++i) {
      const WaveSignature sig = wave_toy_sign(pk, kMsg, params, rng);
      OpTally full;
      OpTally comp;
      CHECK(wave_verify(sig, kMsg, pk, params, &full) == Verdict::kAccept);
      CHECK(wave_cverify(sig, kMsg, vk, params, &comp) == Verdict::kAccept);
      CHECK(full.word_mul == (params.k + 1) * (params.n - params.k));
      CHECK(comp.word_mul == (params.n - 4 + 1) * 4);
    }
  }
}
