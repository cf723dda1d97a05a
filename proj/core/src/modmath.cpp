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

#include "cverify/modmath.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "cverify/rng.hpp"

namespace cverify {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kSharedFactor: return "SharedFactor";
    case ErrorCode::kMalformedSignature: return "MalformedSignature";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kResampleLimit: return "ResampleLimit";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

WordModulus::WordModulus(u64 m) : m_(m) {
  if (m < 2 || m >= kMax) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must satisfy 2 <= m < 2^63, got " + std::to_string(m));
  }
  bits_ = static_cast<unsigned>(std::bit_width(m));
  mu_word_ = static_cast<u64>((static_cast<u128>(1) << 64) / m);
  mu_wide_ = (static_cast<u128>(1) << (2 * bits_)) / m;
}

namespace {

u64 inv_mod_odd(u64 x, const WordModulus& mod) {
  const u64 m = mod.value();
  u64 a = mod.reduce(x);
  u64 b = m;
  u64 u = 1;
  u64 v = 0;
  // Invariants: a = u*x, b = v*x (mod m), b odd. Each round strictly
  // shrinks bitlen(a) + bitlen(b) until a = 0, so 2*64 rounds suffice.
  for (int i = 0; i < 128; ++i) {
    const u64 odd = a & 1;
    const u64 swap = ct::mask(odd & ct::lt(a, b));
    const u64 ab = (a ^ b) & swap;
    a ^= ab;
    b ^= ab;
    const u64 uv = (u ^ v) & swap;
    u ^= uv;
    v ^= uv;
    a -= b & ct::mask(odd);
    u = ct::select(odd, mod.sub(u, v), u);
    a >>= 1;
    u = (u + (m & ct::mask(u & 1))) >> 1;
  }
  if (b != 1) {
    throw Error(ErrorCode::kNotInvertible, "value not invertible modulo " + std::to_string(m));
  }
  return v;
}

u64 inv_mod_euclid(u64 x, u64 m) {
  __int128 r0 = m, r1 = x % m;
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) {
    throw Error(ErrorCode::kNotInvertible, "value not invertible modulo " + std::to_string(m));
  }
  s0 %= static_cast<__int128>(m);
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

}  // namespace

u64 inv_mod(u64 a, const WordModulus& m) {
  if (m.value() == 1) return 0;
  return m.is_odd() ? inv_mod_odd(a, m) : inv_mod_euclid(a, m.value());
}

u64 pow_mod(u64 base, u64 exp, const WordModulus& m) {
  base = m.reduce(base);
  u64 result = m.reduce(1);
  for (int bit = 63; bit >= 0; --bit) {
    result = m.mul(result, result);
    const u64 with = m.mul(result, base);
    result = ct::select((exp >> bit) & 1, with, result);
  }
  return result;
}

bool is_strong_pseudoprime(u64 r, u64 a) {
  const WordModulus mod(r);
  u64 d = r - 1;
  const int u = std::countr_zero(d);
  d >>= u;
  u64 x = pow_mod(a, d, mod);
  if (x == 1 || x == r - 1) return true;
  for (int v = 1; v < u; ++v) {
    x = mod.mul(x, x);
    if (x == r - 1) return true;
  }
  return false;
}

namespace {
constexpr std::array<u64, 12> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kMrBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n >= WordModulus::kMax) {
    // Outside the word-modulus range; plain Miller-Rabin with u128.
    u64 d = n - 1;
    const int u = std::countr_zero(d);
    d >>= u;
    auto mulmod = [n](u64 x, u64 y) { return static_cast<u64>(static_cast<u128>(x) * y % n); };
    for (u64 a : kMrBases) {
      u64 x = 1, b = a, e = d;
      while (e) {
        if (e & 1) x = mulmod(x, b);
        b = mulmod(b, b);
        e >>= 1;
      }
      if (x == 1 || x == n - 1) continue;
      bool witness = true;
      for (int v = 1; v < u && witness; ++v) {
        x = mulmod(x, x);
        if (x == n - 1) witness = false;
      }
      if (witness) return false;
    }
    return true;
  }
  for (u64 a : kMrBases) {
    if (!is_strong_pseudoprime(n, a)) return false;
  }
  return true;
}

u64 legendre(u64 a, const WordModulus& p) { return pow_mod(a, (p.value() - 1) / 2, p); }

std::optional<u64> sqrt_mod(u64 a, const WordModulus& p) {
  a = p.reduce(a);
  const u64 pv = p.value();
  if (a == 0) return 0;
  if (pv == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (pv % 4 == 3) return pow_mod(a, (pv + 1) / 4, p);
  // Tonelli-Shanks.
  u64 q = pv - 1;
  int s = std::countr_zero(q);
  q >>= s;
  u64 z = 2;
  while (legendre(z, p) != pv - 1) ++z;
  u64 c = pow_mod(z, q, p);
  u64 x = pow_mod(a, (q + 1) / 2, p);
  u64 t = pow_mod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = p.mul(tt, tt);
      ++i;
    }
    u64 b = c;
    for (int k = 0; k < m - i - 1; ++k) b = p.mul(b, b);
    x = p.mul(x, b);
    c = p.mul(b, b);
    t = p.mul(t, c);
    m = i;
  }
  return x;
}

PrimeWidth::PrimeWidth(unsigned bits) : bits_(bits) {
  if (bits < 8 || bits > 62) {
    throw Error(ErrorCode::kInvalidArgument,
                "prime width must be in [8, 62], got " + std::to_string(bits));
  }
}

bool accepts_prime_candidate(u64 r, PrimeWidth width) {
  const unsigned b = width.bits();
  if ((r & 1) == 0) return false;
  if (r <= (u64{1} << (b - 1)) || r >= (u64{1} << b)) return false;
  if (b == 31) {
    return is_strong_pseudoprime(r, 2) && is_strong_pseudoprime(r, 3) &&
           is_strong_pseudoprime(r, 5) && r != kSpsp235Composite31;
  }
  return is_prime(r);
}

WordModulus sample_prime(PrimeWidth width, Rng& rng, std::span<const u64> exclude,
                         std::optional<u64> max_draws) {
  const unsigned b = width.bits();
  const u64 budget = max_draws.value_or(10 * (u64{1} << b) / b);
  const u64 low_mask = (u64{1} << b) - 1;
  const u64 top = u64{1} << (b - 1);
  for (u64 draw = 0; draw < budget; ++draw) {
    const u64 r = (rng.next_u64() & low_mask) | top | 1;
    if (!accepts_prime_candidate(r, width)) continue;
    if (std::find(exclude.begin(), exclude.end(), r) != exclude.end()) continue;
    return WordModulus(r);
  }
  throw Error(ErrorCode::kExhausted,
              "prime sampling budget exhausted at width " + std::to_string(b));
}

std::pair<double, double> count_primes_bounds(unsigned mu) {
  if (mu < 8) {
    throw Error(ErrorCode::kInvalidArgument, "prime-count bounds need mu >= 8");
  }
  const double upper = std::ldexp(1.0, static_cast<int>(mu) - 1) /
                       ((mu - 1) * std::numbers::ln2);
  return {0.975 * upper, upper};
}

}  // namespace cverify
