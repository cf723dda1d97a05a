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

#include <algorithm>
#include <optional>

#include "cverify/rng.hpp"
#include "cverify/squirrels.hpp"

namespace cverify {
namespace {

using Matrix = std::vector<BigInt>;

BigInt bareiss_det(Matrix m, std::size_t n) {
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[swap * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i * n + j] = v;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

// det * G^-1 by Gauss-Jordan over the rationals.
Matrix adjugate(const std::vector<std::int64_t>& g, std::size_t n, const BigInt& det) {
  std::vector<mpq_class> a(n * 2 * n);
  const std::size_t w = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * w + j] = static_cast<long>(g[i * n + j]);
    a[i * w + n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv * w + col] == 0) ++piv;
    if (piv != col) {
      for (std::size_t c = 0; c < w; ++c) std::swap(a[piv * w + c], a[col * w + c]);
    }
    const mpq_class inv = 1 / a[col * w + col];
    for (std::size_t c = 0; c < w; ++c) a[col * w + c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * w + col] == 0) continue;
      const mpq_class f = a[r * w + col];
      for (std::size_t c = 0; c < w; ++c) a[r * w + c] -= f * a[col * w + c];
    }
  }
  Matrix adj(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class v = a[i * w + n + j] * det;
      adj[i * n + j] = v.get_num();
    }
  }
  return adj;
}

BigInt pollard_rho(const BigInt& m, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const BigInt c = from_u64(rng.uniform(1u << 30) + 1);
    BigInt x = from_u64(rng.uniform(1u << 30) + 2);
    BigInt y = x;
    BigInt d = 1;
    for (int iter = 0; iter < (1 << 18) && d == 1; ++iter) {
      x = (x * x + c) % m;
      y = (y * y + c) % m;
      y = (y * y + c) % m;
      const BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
    }
    if (d != 1 && d != m) return d;
  }
  return 0;
}

bool factor_into(const BigInt& m, Rng& rng, std::vector<BigInt>& out) {
  if (m == 1) return true;
  if (mpz_probab_prime_p(m.get_mpz_t(), 30) != 0) {
    out.push_back(m);
    return true;
  }
  const BigInt d = pollard_rho(m, rng);
  if (d == 0) return false;
  return factor_into(d, rng, out) && factor_into(m / d, rng, out);
}

// Prime factors of a squarefree delta, or nothing when delta is not
// squarefree or cannot be factored.
std::optional<std::vector<u64>> squarefree_factors(BigInt delta, Rng& rng) {
  std::vector<BigInt> factors;
  for (unsigned long d = 2; d < (1ul << 16) && delta > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(delta.get_mpz_t(), d) != 0) {
      delta /= d;
      if (mpz_divisible_ui_p(delta.get_mpz_t(), d) != 0) return std::nullopt;
      factors.push_back(d);
    }
  }
  if (!factor_into(delta, rng, factors)) return std::nullopt;
  std::vector<u64> primes;
  for (const BigInt& f : factors) {
    if (bit_length(f) > 31) return std::nullopt;
    primes.push_back(to_u64(f));
  }
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) return std::nullopt;
  return primes;
}

// v_check mod p normalized to v_n = -1, from a column of the adjugate.
std::optional<std::vector<u64>> vcheck_mod(const Matrix& adj, std::size_t n,
                                           const WordModulus& p) {
  for (std::size_t k = 0; k < n; ++k) {
    const u64 last = reduce_big(adj[(n - 1) * n + k], p);
    if (last == 0) continue;
    const u64 scale = p.neg(inv_mod(last, p));
    std::vector<u64> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = p.mul(reduce_big(adj[i * n + k], p), scale);
    return v;
  }
  return std::nullopt;
}

}  // namespace

SquirrelsToyKey squirrels_toy_keygen(std::size_t n, std::int64_t entry_bound, Rng& rng,
                                     const SquirrelsToyOptions& opts) {
  if (n < 2 || n > 32) throw Error(ErrorCode::kInvalidArgument, "toy n must be in [2, 32]");
  if (entry_bound < 1) throw Error(ErrorCode::kInvalidArgument, "entry bound must be positive");
  const auto beta_sq = static_cast<std::uint64_t>(n * n) *
                       static_cast<std::uint64_t>(entry_bound * entry_bound);

  SquirrelsToyStats stats;
  while (stats.attempts < opts.max_attempts) {
    ++stats.attempts;
    SquirrelsToySecret sec;
    sec.n = n;
    sec.g.resize(n * n);
    Matrix gm(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      sec.g[i] = rng.uniform_int(-entry_bound, entry_bound);
      gm[i] = static_cast<long>(sec.g[i]);
    }
    sec.det = bareiss_det(gm, n);
    if (sec.det == 0) continue;
    ++stats.nonsingular;
    sec.adj = adjugate(sec.g, n, sec.det);

    BigInt content = 0;
    for (const BigInt& e : sec.adj) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
    if (content != 1) continue;
    ++stats.cocyclic;

    const BigInt delta = abs(sec.det);
    if (delta <= opts.q + beta_sq) continue;
    const auto primes = squarefree_factors(delta, rng);
    if (!primes) continue;

    SquirrelsParams params{kSquirrelsToyTag, n, opts.q, beta_sq, PrimeBasis(*primes)};
    params.validate();
    SquirrelsPublicKey pk{n, primes->size(), {}};
    pk.v.resize((n - 1) * primes->size());
    bool shaped = true;
    for (std::size_t j = 0; j < primes->size() && shaped; ++j) {
      const auto v = vcheck_mod(sec.adj, n, params.public_basis[j]);
      if (!v) {
        shaped = false;
        break;
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        pk.v[j * (n - 1) + i] = static_cast<std::uint32_t>((*v)[i]);
      }
    }
    if (!shaped) continue;
    return {std::move(params), std::move(pk), std::move(sec), stats};
  }
  throw Error(ErrorCode::kResampleLimit, "toy key generation exceeded its attempt budget");
}

SquirrelsSignature squirrels_toy_sign(const SquirrelsToySecret& secret, ByteView message,
                                      const SquirrelsParams& params, Rng& rng,
                                      std::size_t max_tries) {
  const std::size_t n = secret.n;
  const int sign = sgn(secret.det);
  const BigInt d = abs(secret.det);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    SquirrelsSignature sig{rng.bytes(kSquirrelsSaltBytes), {}};
    const std::vector<std::int64_t> h = hash_to_point(message, sig.salt, params.q, n);
    std::vector<BigInt> x(n);
    for (std::size_t k = 0; k < n; ++k) {
      BigInt y = 0;
      for (std::size_t i = 0; i < n; ++i) y += static_cast<long>(h[i]) * secret.adj[i * n + k];
      y *= sign;
      BigInt num = 2 * y + d;
      BigInt den = 2 * d;
      mpz_fdiv_q(x[k].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    bool fits = true;
    std::uint64_t norm = 0;
    sig.s.resize(n);
    for (std::size_t k = 0; k < n && fits; ++k) {
      BigInt c = 0;
      for (std::size_t i = 0; i < n; ++i) c += x[i] * static_cast<long>(secret.g[i * n + k]);
      c -= static_cast<long>(h[k]);
      if (abs(c) >= (1 << 15)) {
        fits = false;
        break;
      }
      const long sk = c.get_si();
      sig.s[k] = static_cast<std::int32_t>(sk);
      norm += static_cast<std::uint64_t>(sk * sk);
    }
    if (fits && norm <= params.beta_sq) return sig;
  }
  throw Error(ErrorCode::kResampleLimit, "toy signing exceeded its retry budget");
}

SquirrelsToySecret squirrels_toy_secret_from_basis(std::size_t n, std::vector<std::int64_t> g) {
  if (n < 2 || g.size() != n * n) throw Error(ErrorCode::kInvalidArgument, "basis shape");
  SquirrelsToySecret sec{n, std::move(g), {}, 0};
  Matrix gm(n * n);
  for (std::size_t i = 0; i < n * n; ++i) gm[i] = static_cast<long>(sec.g[i]);
  sec.det = bareiss_det(gm, n);
  if (sec.det == 0) throw Error(ErrorCode::kInvalidArgument, "singular basis");
  sec.adj = adjugate(sec.g, n, sec.det);
  return sec;
}

std::vector<BigInt> squirrels_toy_vcheck(const SquirrelsToySecret& secret,
                                         const SquirrelsParams& params) {
  const std::size_t n = secret.n;
  std::vector<BigInt> v(n, 0);
  BigInt modulus = 1;
  for (const WordModulus& p : params.public_basis.moduli()) {
    const auto vp = vcheck_mod(secret.adj, n, p);
    if (!vp) throw Error(ErrorCode::kInvalidArgument, "secret basis is not in co-cyclic shape");
    const BigInt pz = from_u64(p.value());
    BigInt m_inv;
    const BigInt m_mod = modulus % pz;
    mpz_invert(m_inv.get_mpz_t(), m_mod.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      BigInt diff = (from_u64((*vp)[i]) - v[i]) % pz;
      if (diff < 0) diff += pz;
      v[i] += modulus * ((diff * m_inv) % pz);
    }
    modulus *= pz;
  }
  return v;
}

}  // namespace cverify
