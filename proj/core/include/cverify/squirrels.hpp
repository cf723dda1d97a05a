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

// Squirrels-shape signatures over co-cyclic lattices. The public key holds
// the residues of v_check modulo a public prime basis p; a signature s is
// valid when c = s + HashToPoint(salt || m) satisfies
//   sum_{i<n} c_i v_i = c_n (mod p_j) for every j,   ||s||^2 <= beta^2.
// Compressed verification replaces p by a few secret primes r, after mapping
// v_check to residues modulo r with the explicit CRT.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cverify/bigint.hpp"
#include "cverify/common.hpp"
#include "cverify/ecrt.hpp"
#include "cverify/xof.hpp"

namespace cverify {

class Rng;

inline constexpr std::size_t kSquirrelsSaltBytes = 16;
inline constexpr std::uint16_t kSquirrelsToyTag = 0;

/// Published shape of a named instance (levels 1..5).
struct SquirrelsInstance {
  const char* name;
  std::uint16_t tag;
  unsigned lambda;
  std::size_t n;
  std::uint64_t q;
  std::uint64_t beta_sq;
  std::size_t s;
  unsigned delta_bits;
  std::size_t t;
};

const std::array<SquirrelsInstance, 5>& squirrels_instances();
/// Lookup by tag 1..5 or by name ("I".."V", "Squirrels-I", ...).
/// Throws kInvalidArgument.
const SquirrelsInstance& squirrels_instance(std::uint16_t tag);
const SquirrelsInstance& squirrels_instance(const std::string& name);

struct SquirrelsParams {
  std::uint16_t tag = kSquirrelsToyTag;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t beta_sq = 0;
  PrimeBasis public_basis;

  std::size_t s() const { return public_basis.size(); }
  std::string name() const;
  /// Throws kInvalidArgument unless q is a power of two <= 2^15, n >= 2,
  /// n <= 4096 and every public prime is below 2^31.
  void validate() const;

  friend bool operator==(const SquirrelsParams&, const SquirrelsParams&) = default;
};

/// Named parameters with a synthetic public basis: s distinct 31-bit primes
/// drawn from a fixed per-instance stream.
SquirrelsParams squirrels_named_params(std::uint16_t tag);

/// v[j * (n-1) + i] = v_check_i mod p_j, i < n-1. v_check_n = -1 is implicit.
struct SquirrelsPublicKey {
  std::size_t n = 0;
  std::size_t s = 0;
  std::vector<std::uint32_t> v;

  std::uint32_t at(std::size_t i, std::size_t j) const { return v[j * (n - 1) + i]; }
  friend bool operator==(const SquirrelsPublicKey&, const SquirrelsPublicKey&) = default;
};

/// Uniform residues, for sizing and benchmarking at named parameters.
SquirrelsPublicKey squirrels_random_public_key(const SquirrelsParams& params, Rng& rng);

struct SquirrelsCompressionKey {
  EcrtPrecomp precomp;
  std::vector<u64> inv_delta;  // I_j = (Delta mod r_j)^-1

  const PrimeBasis& secret_basis() const { return precomp.secret_basis(); }
  std::size_t t() const { return precomp.t(); }
};

struct SquirrelsVerificationKey {
  PrimeBasis secret_basis;
  std::vector<u64> inv_delta;
  /// vbar[j * n + i], i < n; row n-1 (0-based) is r_j - 1.
  std::size_t n = 0;
  std::vector<std::uint32_t> vbar;

  std::size_t t() const { return secret_basis.size(); }
  std::uint32_t at(std::size_t i, std::size_t j) const { return vbar[j * n + i]; }
  friend bool operator==(const SquirrelsVerificationKey&, const SquirrelsVerificationKey&) =
      default;
};

struct SquirrelsSignature {
  Bytes salt;
  std::vector<std::int32_t> s;

  friend bool operator==(const SquirrelsSignature&, const SquirrelsSignature&) = default;
};

std::vector<std::int64_t> hash_to_point(ByteView message, ByteView salt, std::uint64_t q,
                                        std::size_t n);

/// Throws kMalformedSignature when the length differs from n or some
/// coordinate has magnitude >= 2^15.
Verdict squirrels_verify(const SquirrelsSignature& sig, ByteView message,
                         const SquirrelsPublicKey& pk, const SquirrelsParams& params,
                         OpTally* tally = nullptr);

/// k'_min and k'_max.
std::pair<std::int64_t, std::int64_t> k_prime_bounds(std::size_t n, std::uint64_t q,
                                                     std::uint64_t beta_sq);
inline std::pair<std::int64_t, std::int64_t> k_prime_bounds(const SquirrelsParams& p) {
  return k_prime_bounds(p.n, p.q, p.beta_sq);
}

/// t secret primes of `width` bits (default 31), each outside the public
/// basis and above k'_max - k'_min. Throws kInvalidArgument for t = 0 or a
/// width too small for the k' range, kExhausted from prime sampling.
SquirrelsCompressionKey squirrels_ckeygen(const SquirrelsParams& params, std::size_t t,
                                          Rng& rng, unsigned width = 31);
/// CK from explicit secret primes (validated as in squirrels_ckeygen).
SquirrelsCompressionKey squirrels_ck_from_primes(const SquirrelsParams& params,
                                                 std::span<const u64> secret_primes);

SquirrelsVerificationKey squirrels_vkeygen(const SquirrelsCompressionKey& ck,
                                           const SquirrelsPublicKey& pk,
                                           const SquirrelsParams& params);

/// Branch-free over the secret primes and VK entries.
Verdict squirrels_cverify(const SquirrelsSignature& sig, ByteView message,
                          const SquirrelsVerificationKey& vk, const SquirrelsParams& params,
                          OpTally* tally = nullptr);

struct SecretCountChoice {
  std::size_t t;
  double mu;
};

/// t whose log2 C(P31, t) is nearest target_mu. With `kappa_from_s`, the
/// achieved exponent is log2 C(P31, t) - log2 C(s, t) instead.
SecretCountChoice squirrels_choose_t(double target_mu, std::size_t s = 0,
                                     bool kappa_from_s = false);

inline std::size_t squirrels_pk_bytes(std::size_t n, std::size_t s) { return 4 * (n - 1) * s; }
inline std::size_t squirrels_vk_bytes(std::size_t n, std::size_t t) { return 4 * (n + 1) * t; }
inline std::size_t squirrels_ck_bytes(std::size_t s, std::size_t t) { return 4 * (s + 3) * t; }

// Toy signer. Not a secure signature scheme: it exists to produce valid
// signatures for small co-cyclic lattices.

struct SquirrelsToySecret {
  std::size_t n = 0;
  std::vector<std::int64_t> g;  // n x n basis, row-major
  std::vector<BigInt> adj;      // adjugate of g, row-major
  BigInt det;
};

struct SquirrelsToyStats {
  std::size_t attempts = 0;
  std::size_t cocyclic = 0;     // quotient cyclic (gcd of adjugate entries is 1)
  std::size_t nonsingular = 0;
};

struct SquirrelsToyOptions {
  std::uint64_t q = 16;
  std::size_t max_attempts = 2000;
};

struct SquirrelsToyKey {
  SquirrelsParams params;
  SquirrelsPublicKey pk;
  SquirrelsToySecret secret;
  SquirrelsToyStats stats;
};

/// Entries of G uniform in [-entry_bound, entry_bound]; resampled until
/// Delta = |det G| is squarefree with every prime factor below 2^31,
/// Z^n/L is cyclic and the last HNF column gives v_check_n = -1.
/// beta^2 = n^2 * entry_bound^2. Throws kResampleLimit.
SquirrelsToyKey squirrels_toy_keygen(std::size_t n, std::int64_t entry_bound, Rng& rng,
                                     const SquirrelsToyOptions& opts = {});

/// Babai round-off of HashToPoint(salt || m) against G, retrying salts until
/// the norm bound holds. Throws kResampleLimit after `max_tries`.
SquirrelsSignature squirrels_toy_sign(const SquirrelsToySecret& secret, ByteView message,
                                      const SquirrelsParams& params, Rng& rng,
                                      std::size_t max_tries = 1000);

/// Recomputes det and adjugate from the basis. Throws kInvalidArgument for
/// a singular basis.
SquirrelsToySecret squirrels_toy_secret_from_basis(std::size_t n, std::vector<std::int64_t> g);

/// v_check modulo Delta, with v_check_n = Delta - 1.
std::vector<BigInt> squirrels_toy_vcheck(const SquirrelsToySecret& secret,
                                         const SquirrelsParams& params);

}  // namespace cverify
