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

#include "cverify/bigint.hpp"

#include "cverify/rng.hpp"

namespace cverify {

Bytes to_bytes_le(const BigInt& x, std::size_t min_len) {
  const BigInt mag = abs(x);
  std::size_t count = 0;
  Bytes out((mpz_sizeinbase(mag.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(out.data(), &count, -1, 1, -1, 0, mag.get_mpz_t());
  out.resize(std::max(count, min_len));
  return out;
}

BigInt from_bytes_le(ByteView bytes) {
  BigInt x;
  if (!bytes.empty()) mpz_import(x.get_mpz_t(), bytes.size(), -1, 1, -1, 0, bytes.data());
  return x;
}

BigInt from_u64(u64 v) {
  BigInt x;
  mpz_import(x.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &v);
  return x;
}

u64 to_u64(const BigInt& x) {
  u64 v = 0;
  std::size_t count = 0;
  if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
    throw Error(ErrorCode::kInvalidArgument, "integer does not fit in 64 bits");
  }
  mpz_export(&v, &count, -1, sizeof(u64), 0, 0, x.get_mpz_t());
  return v;
}

u64 reduce_big(const BigInt& x, const WordModulus& m) {
  const std::size_t nlimbs = (mpz_sizeinbase(x.get_mpz_t(), 2) + 63) / 64;
  std::vector<u64> limbs(nlimbs + 1, 0);
  std::size_t count = 0;
  mpz_export(limbs.data(), &count, -1, sizeof(u64), 0, 0, x.get_mpz_t());
  const u64 radix = m.mul(m.reduce(u64{1} << 32), m.reduce(u64{1} << 32));  // 2^64 mod m
  u64 acc = 0;
  for (std::size_t i = count; i-- > 0;) {
    acc = m.add(m.mul(acc, radix), m.reduce(limbs[i]));
  }
  return sgn(x) < 0 ? m.neg(acc) : acc;
}

unsigned bit_length(const BigInt& x) {
  return sgn(x) == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

BigInt random_bits_exact(Rng& rng, unsigned bits) {
  Bytes b = rng.bytes((bits + 7) / 8);
  BigInt x = from_bytes_le(b);
  x = x % (BigInt(1) << bits);
  mpz_setbit(x.get_mpz_t(), bits - 1);
  return x;
}

BigInt random_below(Rng& rng, const BigInt& bound) {
  const unsigned bits = bit_length(bound);
  for (;;) {
    BigInt x = from_bytes_le(rng.bytes((bits + 7) / 8));
    x = x % (BigInt(1) << bits);
    if (x < bound) return x;
  }
}

}  // namespace cverify
