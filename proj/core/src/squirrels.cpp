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

#include "cverify/squirrels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "cverify/rng.hpp"
#include "cverify/security.hpp"

namespace cverify {
namespace {

constexpr std::string_view kHashDomain = "cverify/squirrels/h2p";
constexpr std::int64_t kCoordLimit = std::int64_t{1} << 15;

constexpr std::array<SquirrelsInstance, 5> kInstances = {{
    {"Squirrels-I", 1, 128, 1034, 4096, 2026590, 165, 5048, 5},
    {"Squirrels-II", 2, 128, 1164, 4096, 2442439, 188, 5738, 5},
    {"Squirrels-III", 3, 192, 1556, 4096, 4512242, 262, 8017, 8},
    {"Squirrels-IV", 4, 192, 1718, 4096, 3659372, 275, 8402, 8},
    {"Squirrels-V", 5, 256, 2056, 4096, 5370115, 339, 10347, 11},
}};

std::vector<std::int64_t> target_vector(const SquirrelsSignature& sig, ByteView message,
                                        const SquirrelsParams& params) {
  if (sig.s.size() != params.n) {
    throw Error(ErrorCode::kMalformedSignature, "signature length differs from n");
  }
  for (const std::int32_t si : sig.s) {
    if (si >= kCoordLimit || si <= -kCoordLimit) {
      throw Error(ErrorCode::kMalformedSignature, "signature coordinate out of range");
    }
  }
  std::vector<std::int64_t> c = hash_to_point(message, sig.salt, params.q, params.n);
  for (std::size_t i = 0; i < params.n; ++i) c[i] += sig.s[i];
  return c;
}

bool norm_ok(const SquirrelsSignature& sig, std::uint64_t beta_sq) {
  std::uint64_t norm = 0;
  for (const std::int32_t si : sig.s) {
    norm += static_cast<std::uint64_t>(std::int64_t{si} * si);
  }
  return norm <= beta_sq;
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

const std::array<SquirrelsInstance, 5>& squirrels_instances() { return kInstances; }

const SquirrelsInstance& squirrels_instance(std::uint16_t tag) {
  if (tag < 1 || tag > kInstances.size()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown Squirrels instance tag");
  }
  return kInstances[tag - 1];
}

const SquirrelsInstance& squirrels_instance(const std::string& name) {
  for (const auto& inst : kInstances) {
    const std::string full = inst.name;
    if (name == full || name == full.substr(full.find('-') + 1)) return inst;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown Squirrels instance: " + name);
}

std::string SquirrelsParams::name() const {
  return tag == kSquirrelsToyTag ? std::string("toy") : squirrels_instance(tag).name;
}

void SquirrelsParams::validate() const {
  if (n < 2 || n > 4096) throw Error(ErrorCode::kInvalidArgument, "n out of range");
  if (q == 0 || !std::has_single_bit(q) || q > (std::uint64_t{1} << 15)) {
    throw Error(ErrorCode::kInvalidArgument, "q must be a power of two <= 2^15");
  }
  if (public_basis.size() == 0) throw Error(ErrorCode::kInvalidArgument, "empty basis");
  for (const auto& p : public_basis.moduli()) {
    if (p.value() >= (u64{1} << 31)) {
      throw Error(ErrorCode::kInvalidArgument, "public primes must be below 2^31");
    }
  }
}

SquirrelsParams squirrels_named_params(std::uint16_t tag) {
  const SquirrelsInstance& inst = squirrels_instance(tag);
  std::string seed = "cverify/squirrels/basis/";
  seed += inst.name;
  Rng rng(as_bytes(seed));
  std::vector<u64> primes;
  primes.reserve(inst.s);
  const PrimeWidth width(31);
  while (primes.size() < inst.s) {
    primes.push_back(sample_prime(width, rng, primes).value());
  }
  SquirrelsParams params{inst.tag, inst.n, inst.q, inst.beta_sq, PrimeBasis(primes)};
  return params;
}

SquirrelsPublicKey squirrels_random_public_key(const SquirrelsParams& params, Rng& rng) {
  SquirrelsPublicKey pk{params.n, params.s(), {}};
  pk.v.resize((params.n - 1) * params.s());
  for (std::size_t j = 0; j < params.s(); ++j) {
    const u64 p = params.public_basis[j].value();
    for (std::size_t i = 0; i + 1 < params.n; ++i) {
      pk.v[j * (params.n - 1) + i] = static_cast<std::uint32_t>(rng.uniform(p));
    }
  }
  return pk;
}

std::vector<std::int64_t> hash_to_point(ByteView message, ByteView salt, std::uint64_t q,
                                        std::size_t n) {
  Bytes input(kHashDomain.begin(), kHashDomain.end());
  input.insert(input.end(), salt.begin(), salt.end());
  input.insert(input.end(), message.begin(), message.end());
  const Bytes out = shake256(input, 2 * n);
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t chunk = out[2 * i] | (std::uint64_t{out[2 * i + 1]} << 8);
    h[i] = static_cast<std::int64_t>(chunk & (q - 1));
  }
  return h;
}

Verdict squirrels_verify(const SquirrelsSignature& sig, ByteView message,
                         const SquirrelsPublicKey& pk, const SquirrelsParams& params,
                         OpTally* tally) {
  const std::vector<std::int64_t> c = target_vector(sig, message, params);
  if (pk.n != params.n || pk.s != params.s()) {
    throw Error(ErrorCode::kDimensionMismatch, "public key does not match parameters");
  }
  if (!norm_ok(sig, params.beta_sq)) return Verdict::kReject;

  const std::size_t n = params.n;
  u64 ok = 1;
  for (std::size_t j = 0; j < params.s(); ++j) {
    const std::uint32_t* row = pk.v.data() + j * (n - 1);
    std::int64_t acc = -c[n - 1];
    for (std::size_t i = 0; i + 1 < n; ++i) acc += c[i] * row[i];
    ok &= ct::is_zero(params.public_basis[j].reduce_signed(acc));
  }
  if (tally != nullptr) {
    tally->word_mul += (n - 1) * params.s();
    tally->reductions += params.s();
  }
  return verdict_from(ok == 1);
}

std::pair<std::int64_t, std::int64_t> k_prime_bounds(std::size_t n, std::uint64_t q,
                                                     std::uint64_t beta_sq) {
  const auto root = static_cast<std::int64_t>(isqrt(4 * n * beta_sq));
  const std::int64_t qm1 = q == 0 ? 0 : static_cast<std::int64_t>(q - 1);
  const std::int64_t nm1 = n == 0 ? 0 : static_cast<std::int64_t>(n - 1);
  return {-root - 1, 2 * nm1 * qm1 + root + 1};
}

SquirrelsCompressionKey squirrels_ck_from_primes(const SquirrelsParams& params,
                                                 std::span<const u64> secret_primes) {
  if (secret_primes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one secret prime is required");
  }
  const auto [kmin, kmax] = k_prime_bounds(params);
  const auto range = static_cast<u64>(kmax - kmin);
  for (const u64 r : secret_primes) {
    if (r <= range) {
      throw Error(ErrorCode::kInvalidArgument, "secret prime does not exceed k' range");
    }
    if (r >= (u64{1} << 31)) {
      throw Error(ErrorCode::kInvalidArgument, "secret primes must be below 2^31");
    }
  }
  EcrtPrecomp pre = mod_ecrt_setup(params.public_basis, PrimeBasis(secret_primes));
  std::vector<u64> inv(pre.t());
  for (std::size_t k = 0; k < pre.t(); ++k) {
    inv[k] = inv_mod(pre.delta(k), pre.secret_basis()[k]);
  }
  return {std::move(pre), std::move(inv)};
}

SquirrelsCompressionKey squirrels_ckeygen(const SquirrelsParams& params, std::size_t t,
                                          Rng& rng, unsigned width) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "t must be at least 1");
  if (width > 31) throw Error(ErrorCode::kInvalidArgument, "secret prime width above 31");
  const auto [kmin, kmax] = k_prime_bounds(params);
  const auto range = static_cast<u64>(kmax - kmin);
  const PrimeWidth pw(width);
  if ((u64{1} << width) - 1 <= range) {
    throw Error(ErrorCode::kInvalidArgument, "secret prime width too small for k' range");
  }
  std::vector<u64> exclude = params.public_basis.values();
  std::vector<u64> secret;
  while (secret.size() < t) {
    const u64 r = sample_prime(pw, rng, exclude).value();
    if (r <= range) continue;
    secret.push_back(r);
    exclude.push_back(r);
  }
  return squirrels_ck_from_primes(params, secret);
}

SquirrelsVerificationKey squirrels_vkeygen(const SquirrelsCompressionKey& ck,
                                           const SquirrelsPublicKey& pk,
                                           const SquirrelsParams& params) {
  if (pk.n != params.n || pk.s != params.s() ||
      !(ck.precomp.public_basis() == params.public_basis)) {
    throw Error(ErrorCode::kDimensionMismatch, "keys do not match parameters");
  }
  const std::size_t n = params.n;
  const std::size_t t = ck.t();
  const CrtCoefficients q = q_coefficients(params.public_basis);

  SquirrelsVerificationKey vk{ck.secret_basis(), ck.inv_delta, n, {}};
  vk.vbar.resize(n * t);
  RnsResidues x;
  x.values.resize(pk.s);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < pk.s; ++j) x.values[j] = pk.at(i, j);
    const RnsResidues z = mod_ecrt(ck.precomp, q, x);
    for (std::size_t k = 0; k < t; ++k) vk.vbar[k * n + i] = static_cast<std::uint32_t>(z.values[k]);
  }
  for (std::size_t k = 0; k < t; ++k) {
    vk.vbar[k * n + n - 1] = static_cast<std::uint32_t>(vk.secret_basis[k].value() - 1);
  }
  return vk;
}

Verdict squirrels_cverify(const SquirrelsSignature& sig, ByteView message,
                          const SquirrelsVerificationKey& vk, const SquirrelsParams& params,
                          OpTally* tally) {
  const std::vector<std::int64_t> c = target_vector(sig, message, params);
  if (vk.n != params.n || vk.t() == 0 || vk.vbar.size() != vk.n * vk.t()) {
    throw Error(ErrorCode::kDimensionMismatch, "verification key does not match parameters");
  }
  if (!norm_ok(sig, params.beta_sq)) return Verdict::kReject;

  const auto [kmin, kmax] = k_prime_bounds(params);
  const auto range = static_cast<u64>(kmax - kmin);
  const auto shift = static_cast<u64>(-kmin);
  const std::size_t n = params.n;

  u64 in_range = 1;
  u64 same = 1;
  u64 k0 = 0;
  for (std::size_t j = 0; j < vk.t(); ++j) {
    const WordModulus& r = vk.secret_basis[j];
    const std::uint32_t* row = vk.vbar.data() + j * n;
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += c[i] * row[i];
    u64 k = r.mul(r.reduce_signed(acc), vk.inv_delta[j]);
    k = r.add(k, r.reduce(shift));
    k0 = ct::select(ct::eq(j, 0), k, k0);
    in_range &= 1 ^ ct::lt(range, k);
    same &= ct::eq(k, k0);
  }
  if (tally != nullptr) {
    tally->word_mul += (n + 1) * vk.t();
    tally->reductions += 2 * vk.t();
  }
  return verdict_from((in_range & same) == 1);
}

SecretCountChoice squirrels_choose_t(double target_mu, std::size_t s, bool kappa_from_s) {
  SecretCountChoice best{0, 0.0};
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t t = 1; t <= 64; ++t) {
    if (kappa_from_s && t > s) break;
    double mu = log2_binomial(static_cast<double>(kPrimes31), t);
    if (kappa_from_s) mu -= log2_binomial(static_cast<double>(s), t);
    const double gap = std::abs(mu - target_mu);
    if (gap < best_gap) {
      best_gap = gap;
      best = {t, mu};
    }
  }
  if (best.t == 0) throw Error(ErrorCode::kInvalidArgument, "no admissible t");
  return best;
}

}  // namespace cverify
