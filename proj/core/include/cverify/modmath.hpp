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

// Word-sized modular arithmetic. Every modulus is below 2^63 so that a
// product of two residues fits in 126 bits and Barrett quotients fit in a
// 128-bit intermediate.
//
// Routines marked "branch-free" contain no control flow or memory access
// that depends on operand values; they are the ones used on secret primes
// and secret residues during compressed verification.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "cverify/common.hpp"

namespace cverify {

class Rng;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace ct {

/// 1 if a < b else 0, for arbitrary 64-bit a, b.
inline u64 lt(u64 a, u64 b) {
  const u64 z = a - b;
  return (z ^ ((a ^ b) & (b ^ z))) >> 63;
}
/// All-ones if bit is 1, zero if 0.
inline u64 mask(u64 bit) { return static_cast<u64>(0) - bit; }
inline u64 is_zero(u64 a) { return 1 ^ ((a | (static_cast<u64>(0) - a)) >> 63); }
inline u64 eq(u64 a, u64 b) { return is_zero(a ^ b); }
inline u64 select(u64 bit, u64 if_one, u64 if_zero) {
  return if_zero ^ (mask(bit) & (if_one ^ if_zero));
}

}  // namespace ct

/// A modulus 2 <= m < 2^63 with precomputed Barrett constants.
/// Odd moduli are the common case; m = 2 is accepted so that tiny bases
/// can be expressed, but inversion modulo an even m is variable-time.
class WordModulus {
 public:
  static constexpr u64 kMax = u64{1} << 63;

  explicit WordModulus(u64 m);

  u64 value() const { return m_; }
  unsigned bits() const { return bits_; }
  bool is_odd() const { return (m_ & 1) != 0; }

  /// x mod m for any 64-bit x. Branch-free.
  u64 reduce(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<u128>(x) * mu_word_) >> 64);
    const u64 r = x - q * m_;  // in [0, 2m)
    return r - (m_ & ct::mask(1 ^ ct::lt(r, m_)));
  }

  /// x mod m for x < 2^(2*bits()). Branch-free.
  u64 reduce_wide(u128 x) const {
    // q1 < 2^64 and mu_wide_ < 2^65, so the product is split at 2^64.
    const u64 q1 = static_cast<u64>(x >> (bits_ - 1));
    const u128 pl = static_cast<u128>(q1) * static_cast<u64>(mu_wide_);
    const u128 ph = (pl >> 64) + static_cast<u128>(q1) * static_cast<u64>(mu_wide_ >> 64);
    const unsigned shift = bits_ + 1;
    const u128 q3 = (ph << (64 - shift)) | (static_cast<u128>(static_cast<u64>(pl)) >> shift);
    u128 r = x - q3 * m_;  // in [0, 3m), may exceed 2^64 when bits() = 63
    for (int i = 0; i < 2; ++i) {
      const u128 d = r - m_;
      const u64 borrow = static_cast<u64>(d >> 127);
      r = d + (m_ & ct::mask(borrow));
    }
    return static_cast<u64>(r);
  }

  /// Signed input mapped into [0, m). Branch-free.
  u64 reduce_signed(std::int64_t x) const {
    const u64 sign = static_cast<u64>(x) >> 63;
    const u64 mag = (static_cast<u64>(x) ^ ct::mask(sign)) + sign;
    return ct::select(sign, neg(reduce(mag)), reduce(mag));
  }

  u64 mul(u64 a, u64 b) const { return reduce_wide(static_cast<u128>(a) * b); }

  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;  // < 2^64 since a, b < 2^63
    return s - (m_ & ct::mask(1 ^ ct::lt(s, m_)));
  }

  u64 sub(u64 a, u64 b) const {
    const u64 d = a - b;
    return d + (m_ & ct::mask(ct::lt(a, b)));
  }

  u64 neg(u64 a) const { return (m_ - a) & ct::mask(1 ^ ct::is_zero(a)); }

  friend bool operator==(const WordModulus& a, const WordModulus& b) {
    return a.m_ == b.m_;
  }

 private:
  u64 m_;
  unsigned bits_;
  u64 mu_word_;   // floor(2^64 / m)
  u128 mu_wide_;  // floor(2^(2*bits) / m)
};

/// a * b mod m; requires a, b < m. Branch-free.
inline u64 mul_mod(u64 a, u64 b, const WordModulus& m) { return m.mul(a, b); }

/// a^-1 mod m. Throws kNotInvertible when gcd(a, m) != 1.
/// Odd moduli use a fixed-iteration binary extended gcd (branch-free);
/// even moduli fall back to the Euclidean algorithm.
u64 inv_mod(u64 a, const WordModulus& m);

/// base^exp mod m by a fixed 64-step square-and-multiply. Branch-free.
u64 pow_mod(u64 base, u64 exp, const WordModulus& m);

/// Strong pseudoprime test: with r = d*2^u + 1, true iff a^d = 1 or
/// a^(d*2^v) = -1 (mod r) for some 0 <= v < u. Requires r odd, r > 2,
/// 1 < a < r.
bool is_strong_pseudoprime(u64 r, u64 a);

/// Deterministic primality for n < 2^64 (Miller-Rabin on the first twelve
/// prime bases).
bool is_prime(u64 n);

/// Legendre symbol (a | p) for an odd prime p; returns 0, 1 or p - 1.
u64 legendre(u64 a, const WordModulus& p);

/// A square root of a modulo odd prime p, if one exists (Tonelli-Shanks).
std::optional<u64> sqrt_mod(u64 a, const WordModulus& p);

/// Width b of sampled primes: 2^(b-1) < r < 2^b, 8 <= b <= 62.
class PrimeWidth {
 public:
  explicit PrimeWidth(unsigned bits);
  unsigned bits() const { return bits_; }

 private:
  unsigned bits_;
};

/// The unique composite in (2^30, 2^31) that is a strong pseudoprime to
/// bases 2, 3 and 5.
inline constexpr u64 kSpsp235Composite31 = 1157839381;  // 24061 * 48121

/// Acceptance rule used by sample_prime for an odd candidate of the given
/// width. For 31 bits: strong pseudoprime to 2, 3, 5 and not the single
/// known composite. Otherwise: deterministic Miller-Rabin.
bool accepts_prime_candidate(u64 r, PrimeWidth width);

/// Uniform odd candidates of exactly `width` bits until one is accepted and
/// not in `exclude`. Throws kExhausted after `max_draws` candidates
/// (default 10 * 2^b / b).
WordModulus sample_prime(PrimeWidth width, Rng& rng, std::span<const u64> exclude = {},
                         std::optional<u64> max_draws = std::nullopt);

/// Bounds on the number of mu-bit primes:
/// 0.975 * 2^(mu-1) / ((mu-1) ln 2) < #Primes(mu) < 2^(mu-1) / ((mu-1) ln 2).
/// Requires mu >= 8.
std::pair<double, double> count_primes_bounds(unsigned mu);

/// Exact number of 31-bit primes, pi(2^31) - pi(2^30).
inline constexpr u64 kPrimes31 = 105097565 - 54400028;

}  // namespace cverify
