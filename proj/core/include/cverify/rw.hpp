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

// Rabin-Williams signatures with the "expanded" signature (e, f, salt, s, t)
// satisfying e*f*s^2 - t*N = Hash(salt || m) over the integers, and the
// compressed check of that identity modulo a verifier-secret word prime.

#include <cstdint>

#include "cverify/bigint.hpp"
#include "cverify/common.hpp"

namespace cverify {

class Rng;

inline constexpr std::size_t kRwSaltBytes = 16;

/// p = 3 (mod 8), q = 7 (mod 8), n = p*q.
struct RwKeypair {
  BigInt p;
  BigInt q;
  BigInt n;

  /// Validates the congruence conditions and primality; throws
  /// kInvalidArgument otherwise.
  static RwKeypair from_primes(const BigInt& p, const BigInt& q);
};

struct RwSignature {
  int e = 1;          // -1 or 1
  unsigned f = 1;     // 1 or 2
  Bytes salt;
  BigInt s;           // 1 < s < N
  BigInt t;           // -2N < t < 2N

  friend bool operator==(const RwSignature&, const RwSignature&) = default;
};

/// Verifier-private key: the secret prime and N mod ell. `hash_bits` is the
/// bit length of Hash outputs, bitlen(N) - 1, which the verifier needs to
/// recompute the hash without N.
struct RwVerificationKey {
  WordModulus ell{3};
  u64 n_ell = 0;
  unsigned hash_bits = 0;
};

/// Hash(salt || m) as an integer in [0, 2^(bitlen(N)-1)) subset of [0, N).
BigInt rw_hash(ByteView salt, ByteView message, unsigned hash_bits);
inline unsigned rw_hash_bits(const BigInt& n) { return bit_length(n) - 1; }

RwKeypair rw_keygen(unsigned bits, Rng& rng);
RwSignature rw_sign(const RwKeypair& sk, ByteView message, Rng& rng);

/// e*f*s^2 = Hash(salt || m) (mod N) with 1 < s < N. Throws
/// kMalformedSignature for e, f or s out of range.
Verdict rw_verify(const RwSignature& sig, ByteView message, const BigInt& n);

/// Random mu-bit prime.
WordModulus rw_ckeygen(unsigned mu, Rng& rng);
RwVerificationKey rw_vkeygen(const WordModulus& ell, const BigInt& n);

/// e*f*s^2 - t*N_ell = h (mod ell) after reducing s, t and h modulo ell.
Verdict rw_cverify(const RwSignature& sig, ByteView message, const RwVerificationKey& vk);

/// Forgery for an adversary who knows ell: random salt, smallest t >= 0 with
/// h + t*N a square mod ell, s its square root, e = f = 1.
RwSignature rw_forge_known_ell(const WordModulus& ell, ByteView message, const BigInt& n,
                               Rng& rng);

/// Xi = e*f*s^2 - t*N - Hash(salt || m); zero exactly for honest signatures.
BigInt rw_residual(const RwSignature& sig, ByteView message, const BigInt& n);

/// 2*kappa*Q / #Primes(mu), kappa = floor(log2(N) / mu). #Primes(31) is
/// exact; other widths use the lower estimate.
double rw_forgery_bound(const BigInt& n, unsigned mu, double queries);

}  // namespace cverify
