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

#include "cverify/rw.hpp"

#include <cmath>
#include <string>

#include "cverify/rng.hpp"

namespace cverify {

namespace {

constexpr std::string_view kHashDomain = "cverify/rw/hash";

bool probably_prime(const BigInt& x) { return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0; }

BigInt random_prime_mod8(Rng& rng, unsigned bits, unsigned residue) {
  for (;;) {
    BigInt x = random_bits_exact(rng, bits);
    mpz_setbit(x.get_mpz_t(), bits - 2);  // keeps p*q at full length
    x -= x % 8;
    x += residue;
    if (bit_length(x) == bits && probably_prime(x)) return x;
  }
}

void check_shape(const RwSignature& sig) {
  if (sig.e != 1 && sig.e != -1) {
    throw Error(ErrorCode::kMalformedSignature, "RW signature e must be -1 or 1");
  }
  if (sig.f != 1 && sig.f != 2) {
    throw Error(ErrorCode::kMalformedSignature, "RW signature f must be 1 or 2");
  }
  if (sig.s <= 1) throw Error(ErrorCode::kMalformedSignature, "RW signature needs s > 1");
}

}  // namespace

RwKeypair RwKeypair::from_primes(const BigInt& p, const BigInt& q) {
  if (p % 8 != 3) throw Error(ErrorCode::kInvalidArgument, "RW prime p must be 3 mod 8");
  if (q % 8 != 7) throw Error(ErrorCode::kInvalidArgument, "RW prime q must be 7 mod 8");
  if (!probably_prime(p) || !probably_prime(q)) {
    throw Error(ErrorCode::kInvalidArgument, "RW key factors must be prime");
  }
  return RwKeypair{p, q, p * q};
}

BigInt rw_hash(ByteView salt, ByteView message, unsigned hash_bits) {
  Bytes input(kHashDomain.begin(), kHashDomain.end());
  input.insert(input.end(), salt.begin(), salt.end());
  input.insert(input.end(), message.begin(), message.end());
  const Bytes digest = shake256(input, (hash_bits + 7) / 8);
  BigInt h = from_bytes_le(digest);
  return h % (BigInt(1) << hash_bits);
}

RwKeypair rw_keygen(unsigned bits, Rng& rng) {
  if (bits < 64) throw Error(ErrorCode::kInvalidArgument, "RW modulus needs at least 64 bits");
  for (;;) {
    const BigInt p = random_prime_mod8(rng, bits / 2, 3);
    const BigInt q = random_prime_mod8(rng, bits - bits / 2, 7);
    if (p != q && bit_length(p * q) == bits) return RwKeypair::from_primes(p, q);
  }
}

RwSignature rw_sign(const RwKeypair& sk, ByteView message, Rng& rng) {
  const BigInt& n = sk.n;
  const unsigned hbits = rw_hash_bits(n);
  const BigInt two_inv = (n + 1) / 2;
  for (;;) {
    RwSignature sig;
    sig.salt = rng.bytes(kRwSaltBytes);
    const BigInt h = rw_hash(sig.salt, message, hbits);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), n.get_mpz_t());
    if (g != 1) continue;
    // Exactly one of h, -h, h/2, -h/2 is a square mod N.
    for (int e : {1, -1}) {
      for (unsigned f : {1U, 2U}) {
        BigInt u = h * e;
        if (f == 2) u *= two_inv;
        u %= n;
        if (u < 0) u += n;
        if (mpz_legendre(u.get_mpz_t(), sk.p.get_mpz_t()) != 1 ||
            mpz_legendre(u.get_mpz_t(), sk.q.get_mpz_t()) != 1) {
          continue;
        }
        // p, q = 3 (mod 4): square roots by exponentiation, glued by CRT.
        BigInt sp, sq;
        const BigInt ep = (sk.p + 1) / 4, eq = (sk.q + 1) / 4;
        mpz_powm(sp.get_mpz_t(), u.get_mpz_t(), ep.get_mpz_t(), sk.p.get_mpz_t());
        mpz_powm(sq.get_mpz_t(), u.get_mpz_t(), eq.get_mpz_t(), sk.q.get_mpz_t());
        BigInt qinv;
        mpz_invert(qinv.get_mpz_t(), sk.q.get_mpz_t(), sk.p.get_mpz_t());
        BigInt s = sq + sk.q * (((sp - sq) * qinv) % sk.p);
        s %= n;
        if (s < 0) s += n;
        if (s <= 1) break;
        sig.e = e;
        sig.f = f;
        sig.s = s;
        const BigInt lhs = BigInt(e * static_cast<int>(f)) * s * s;
        sig.t = (lhs - h) / n;
        return sig;
      }
    }
  }
}

Verdict rw_verify(const RwSignature& sig, ByteView message, const BigInt& n) {
  check_shape(sig);
  if (sig.s >= n) throw Error(ErrorCode::kMalformedSignature, "RW signature needs s < N");
  const BigInt h = rw_hash(sig.salt, message, rw_hash_bits(n));
  BigInt diff = BigInt(sig.e * static_cast<int>(sig.f)) * sig.s * sig.s - h;
  diff %= n;
  return verdict_from(diff == 0);
}

WordModulus rw_ckeygen(unsigned mu, Rng& rng) { return sample_prime(PrimeWidth(mu), rng); }

RwVerificationKey rw_vkeygen(const WordModulus& ell, const BigInt& n) {
  return RwVerificationKey{ell, reduce_big(n, ell), rw_hash_bits(n)};
}

Verdict rw_cverify(const RwSignature& sig, ByteView message, const RwVerificationKey& vk) {
  check_shape(sig);
  const WordModulus& ell = vk.ell;
  const u64 s = reduce_big(sig.s, ell);
  const u64 t = reduce_big(sig.t, ell);
  const u64 h = reduce_big(rw_hash(sig.salt, message, vk.hash_bits), ell);
  u64 lhs = ell.mul(s, s);
  if (sig.f == 2) lhs = ell.add(lhs, lhs);
  if (sig.e == -1) lhs = ell.neg(lhs);
  lhs = ell.sub(lhs, ell.mul(t, vk.n_ell));
  return verdict_from(lhs == h);
}

RwSignature rw_forge_known_ell(const WordModulus& ell, ByteView message, const BigInt& n,
                               Rng& rng) {
  const u64 n_ell = reduce_big(n, ell);
  const unsigned hbits = rw_hash_bits(n);
  for (;;) {
    RwSignature sig;
    sig.salt = rng.bytes(kRwSaltBytes);
    const u64 h = reduce_big(rw_hash(sig.salt, message, hbits), ell);
    for (u64 t = 0; t < 256; ++t) {
      const u64 x = ell.add(h, ell.mul(ell.reduce(t), n_ell));
      const auto root = sqrt_mod(x, ell);
      if (!root) continue;
      BigInt s = from_u64(*root);
      if (s <= 1) s += from_u64(ell.value());
      sig.e = 1;
      sig.f = 1;
      sig.s = s;
      sig.t = from_u64(t);
      return sig;
    }
  }
}

BigInt rw_residual(const RwSignature& sig, ByteView message, const BigInt& n) {
  const BigInt h = rw_hash(sig.salt, message, rw_hash_bits(n));
  return BigInt(sig.e * static_cast<int>(sig.f)) * sig.s * sig.s - sig.t * n - h;
}

double rw_forgery_bound(const BigInt& n, unsigned mu, double queries) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  const double log2n = std::log2(mant) + static_cast<double>(exp);
  const double kappa = std::floor(log2n / mu);
  const double primes =
      mu == 31 ? static_cast<double>(kPrimes31) : count_primes_bounds(mu).first;
  return 2.0 * kappa * queries / primes;
}

}  // namespace cverify
