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
#include <set>
#include <string>

#include "cverify/rng.hpp"
#include "cverify/squirrels.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cverify;

namespace {

const ByteView kMsg = as_bytes("squirrels toy message");

const SquirrelsToyKey& toy_key() {
  static const SquirrelsToyKey key = [] {
    Rng rng(31);
    return squirrels_toy_keygen(12, 3, rng);
  }();
  return key;
}

mpz_class delta_of(const SquirrelsParams& params) { return oracle::product(params.public_basis.values()); }

}  // namespace

TEST_CASE("named instance table") {
  const auto& inst = squirrels_instances();
  CHECK(inst[0].n == 1034);
  CHECK(inst[0].beta_sq == 2026590);
  CHECK(inst[0].s == 165);
  CHECK(inst[0].delta_bits == 5048);
  CHECK(inst[4].n == 2056);
  CHECK(inst[4].s == 339);
  CHECK(squirrels_instance("III").n == 1556);
  CHECK(squirrels_instance(std::string("Squirrels-IV")).s == 275);
  CHECK_THROWS_AS(squirrels_instance(std::string("VI")), Error);
  CHECK_THROWS_AS(squirrels_instance(std::uint16_t{9}), Error);
}

TEST_CASE("named parameters use synthetic 31-bit bases") {
  const SquirrelsParams p = squirrels_named_params(1);
  CHECK(p.n == 1034);
  CHECK(p.s() == 165);
  CHECK(p.name() == "Squirrels-I");
  for (const auto& m : p.public_basis.moduli()) {
    CHECK(m.bits() == 31);
    CHECK(oracle::is_prime_trial(m.value()));
  }
  CHECK(squirrels_named_params(1) == p);
}

TEST_CASE("size formulas") {
  CHECK(squirrels_pk_bytes(1034, 165) == 681780);
  CHECK(squirrels_vk_bytes(1034, 5) == 20700);
  CHECK(squirrels_ck_bytes(165, 5) == 3360);
  CHECK(squirrels_vk_bytes(2056, 11) == 90508);
  const double ratio = static_cast<double>(squirrels_pk_bytes(1034, 165)) / squirrels_vk_bytes(1034, 5);
  CHECK(ratio == doctest::Approx(32.94).epsilon(0.0005));
}

TEST_CASE("k' bounds") {
  CHECK(k_prime_bounds(1034, 4096, 2026590) == std::pair<std::int64_t, std::int64_t>{-91554, 8551824});
  CHECK(k_prime_bounds(2056, 4096, 5370115) == std::pair<std::int64_t, std::int64_t>{-210152, 17040602});
  CHECK(k_prime_bounds(1164, 4096, 2442439) == std::pair<std::int64_t, std::int64_t>{-106640, 9631610});
  CHECK(k_prime_bounds(1, 1, 0) == std::pair<std::int64_t, std::int64_t>{-1, 1});
}

TEST_CASE("hash_to_point") {
  const Bytes salt(16, 7);
  const auto a = hash_to_point(kMsg, salt, 4096, 1034);
  CHECK(a == hash_to_point(kMsg, salt, 4096, 1034));
  CHECK(a != hash_to_point(as_bytes("x"), salt, 4096, 1034));
  Rng rng(32);
  double sum = 0;
  std::size_t count = 0;
  for (int i = 0; i < 10; ++i) {
    for (const auto v : hash_to_point(kMsg, rng.bytes(16), 4096, 1000)) {
      CHECK(v >= 0);
      CHECK(v < 4096);
      sum += static_cast<double>(v);
      ++count;
    }
  }
  const double mean = sum / static_cast<double>(count);
  const double sigma = std::sqrt((4096.0 * 4096.0 - 1) / 12.0 / static_cast<double>(count));
  CHECK(std::abs(mean - 4095.0 / 2) < 3 * sigma);
}

TEST_CASE("toy key generation") {
  const SquirrelsToyKey& key = toy_key();
  const SquirrelsParams& params = key.params;
  CHECK(params.n == 12);
  CHECK(params.beta_sq == 12u * 12u * 9u);
  MESSAGE("toy keygen: attempts=", key.stats.attempts, " nonsingular=", key.stats.nonsingular,
          " cocyclic=", key.stats.cocyclic);

  const mpz_class delta = delta_of(params);
  CHECK(abs(key.secret.det) == delta);
  mpz_class content = 0;
  for (const auto& e : key.secret.adj) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.get_mpz_t());
  CHECK(content == 1);

  const auto v = squirrels_toy_vcheck(key.secret, params);
  CHECK(v.back() == delta - 1);
  const std::size_t n = params.n;
  for (std::size_t row = 0; row < n; ++row) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += key.secret.g[row * n + i] * v[i];
    CHECK(acc % delta == 0);
  }
  for (std::size_t j = 0; j < params.s(); ++j) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(key.pk.at(i, j) == oracle::mod(v[i], params.public_basis[j].value()));
    }
  }
}

TEST_CASE("toy keygen resample limit") {
  Rng rng(33);
  SquirrelsToyOptions opts;
  opts.max_attempts = 1;
  opts.q = 1u << 15;
  CHECK_THROWS_AS(squirrels_toy_keygen(2, 1, rng, opts), Error);
  CHECK_THROWS_AS(squirrels_toy_keygen(40, 1, rng), Error);
}

TEST_CASE("toy signatures verify and lie in the lattice") {
  const SquirrelsToyKey& key = toy_key();
  const SquirrelsParams& params = key.params;
  const std::size_t n = params.n;
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    const SquirrelsSignature sig = squirrels_toy_sign(key.secret, kMsg, params, rng);
    CHECK(squirrels_verify(sig, kMsg, key.pk, params) == Verdict::kAccept);
    std::uint64_t norm = 0;
    for (auto si : sig.s) norm += static_cast<std::uint64_t>(si * si);
    CHECK(norm <= params.beta_sq);
    const auto h = hash_to_point(kMsg, sig.salt, params.q, n);
    for (std::size_t k = 0; k < n; ++k) {
      mpz_class acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += (h[j] + sig.s[j]) * key.secret.adj[j * n + k];
      CHECK(acc % key.secret.det == 0);
    }
  }
}

TEST_CASE("verification rejects") {
  const SquirrelsToyKey& key = toy_key();
  const SquirrelsParams& params = key.params;
  Rng rng(35);
  const SquirrelsSignature sig = squirrels_toy_sign(key.secret, kMsg, params, rng);

  SquirrelsSignature big = sig;
  for (auto& v : big.s) v = 2000;
  CHECK(squirrels_verify(big, kMsg, key.pk, params) == Verdict::kReject);

  SquirrelsPublicKey bad_pk = key.pk;
  bad_pk.v[0] = (bad_pk.v[0] + 1) % static_cast<std::uint32_t>(params.public_basis[0].value());
  CHECK(squirrels_verify(sig, kMsg, bad_pk, params) == Verdict::kReject);

  CHECK(squirrels_verify(sig, as_bytes("other"), key.pk, params) == Verdict::kReject);

  SquirrelsSignature shortsig = sig;
  shortsig.s.pop_back();
  try {
    (void)squirrels_verify(shortsig, kMsg, key.pk, params);
    FAIL("expected malformed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedSignature);
  }
  SquirrelsSignature wide = sig;
  wide.s[0] = 1 << 15;
  CHECK_THROWS_AS(squirrels_verify(wide, kMsg, key.pk, params), Error);
}

TEST_CASE("compression key") {
  const SquirrelsToyKey& key = toy_key();
  Rng rng(36);
  CHECK_THROWS_AS(squirrels_ckeygen(key.params, 0, rng), Error);
  const SquirrelsCompressionKey ck = squirrels_ckeygen(key.params, 4, rng);
  const mpz_class delta = delta_of(key.params);
  std::set<u64> seen;
  for (std::size_t j = 0; j < ck.t(); ++j) {
    const u64 r = ck.secret_basis()[j].value();
    CHECK(ck.secret_basis()[j].bits() == 31);
    CHECK_FALSE(key.params.public_basis.contains(r));
    CHECK(seen.insert(r).second);
    CHECK(ck.precomp.delta(j) == oracle::mod(delta, r));
    CHECK(oracle::mod(oracle::z(ck.inv_delta[j]) * delta, r) == 1);
  }
  const auto [kmin, kmax] = k_prime_bounds(key.params);
  CHECK_THROWS_AS(squirrels_ckeygen(key.params, 1, rng, 8), Error);
  const std::vector<u64> too_small = {257};
  if (static_cast<u64>(kmax - kmin) >= 257) {
    CHECK_THROWS_AS(squirrels_ck_from_primes(key.params, too_small), Error);
  }
}

TEST_CASE("verification key matches the big-integer oracle up to a Delta shift") {
  const SquirrelsToyKey& key = toy_key();
  const SquirrelsParams& params = key.params;
  Rng rng(37);
  const SquirrelsCompressionKey ck = squirrels_ckeygen(params, 5, rng);
  const SquirrelsVerificationKey vk = squirrels_vkeygen(ck, key.pk, params);
  const auto v = squirrels_toy_vcheck(key.secret, params);
  const mpz_class delta = delta_of(params);
  for (std::size_t i = 0; i + 1 < params.n; ++i) {
    bool eps0 = true;
    bool eps1 = true;
    for (std::size_t j = 0; j < vk.t(); ++j) {
      const u64 r = vk.secret_basis[j].value();
      eps0 = eps0 && vk.at(i, j) == oracle::mod(v[i], r);
      eps1 = eps1 && vk.at(i, j) == oracle::mod(v[i] - delta, r);
    }
    CHECK((eps0 || eps1));
  }
  for (std::size_t j = 0; j < vk.t(); ++j) CHECK(vk.at(params.n - 1, j) == vk.secret_basis[j].value() - 1);
}

TEST_CASE("completeness, k' range and tallies") {
  const SquirrelsToyKey& key = toy_key();
  const SquirrelsParams& params = key.params;
  const std::size_t n = params.n;
  const auto [kmin, kmax] = k_prime_bounds(params);
  const auto v = squirrels_toy_vcheck(key.secret, params);
  const mpz_class delta = delta_of(params);
  Rng rng(38);
  for (int c = 0; c < 5; ++c) {
    const SquirrelsCompressionKey ck = squirrels_ckeygen(params, 3, rng);
    const SquirrelsVerificationKey vk = squirrels_vkeygen(ck, key.pk, params);
    const u64 r0 = vk.secret_basis[0].value();
    for (int i = 0; i < 40; ++i) {
      const SquirrelsSignature sig = squirrels_toy_sign(key.secret, kMsg, params, rng);
      OpTally full;
      OpTally comp;
      CHECK(squirrels_verify(sig, kMsg, key.pk, params, &full) == Verdict::kAccept);
      CHECK(squirrels_cverify(sig, kMsg, vk, params, &comp) == Verdict::kAccept);
      CHECK(full.word_mul == (n - 1) * params.s());
      CHECK(comp.word_mul == (n + 1) * vk.t());

      const auto h = hash_to_point(kMsg, sig.salt, params.q, n);
      mpz_class acc = -(h[n - 1] + sig.s[n - 1]);
      for (std::size_t k = 0; k + 1 < n; ++k) {
        const bool shifted = vk.at(k, 0) != oracle::mod(v[k], r0);
        acc += (h[k] + sig.s[k]) * (shifted ? mpz_class(v[k] - delta) : v[k]);
      }
      CHECK(acc % delta == 0);
      const mpz_class kp = acc / delta;
      CHECK(kp >= kmin);
      CHECK(kp <= kmax);
    }
  }
}

TEST_CASE("cverify guards") {
  const SquirrelsToyKey& key = toy_key();
  Rng rng(39);
  const SquirrelsCompressionKey ck = squirrels_ckeygen(key.params, 2, rng);
  const SquirrelsVerificationKey vk = squirrels_vkeygen(ck, key.pk, key.params);
  const SquirrelsSignature sig = squirrels_toy_sign(key.secret, kMsg, key.params, rng);
  SquirrelsSignature big = sig;
  for (auto& x : big.s) x = 2000;
  CHECK(squirrels_cverify(big, kMsg, vk, key.params) == Verdict::kReject);
  SquirrelsSignature shortsig = sig;
  shortsig.s.pop_back();
  CHECK_THROWS_AS(squirrels_cverify(shortsig, kMsg, vk, key.params), Error);
}

TEST_CASE("tampered signatures are mostly rejected at 31 bits") {
  const SquirrelsToyKey& key = toy_key();
  Rng rng(40);
  const SquirrelsCompressionKey ck = squirrels_ckeygen(key.params, 1, rng);
  const SquirrelsVerificationKey vk = squirrels_vkeygen(ck, key.pk, key.params);
  int accepted = 0;
  for (int i = 0; i < 300; ++i) {
    SquirrelsSignature sig = squirrels_toy_sign(key.secret, kMsg, key.params, rng);
    sig.s[rng.uniform(sig.s.size())] += 1;
    if (squirrels_verify(sig, kMsg, key.pk, key.params) == Verdict::kAccept) continue;
    accepted += squirrels_cverify(sig, kMsg, vk, key.params) == Verdict::kAccept ? 1 : 0;
  }
  CHECK(accepted <= 2);
}

TEST_CASE("choose_t") {
  const auto t128 = squirrels_choose_t(128);
  CHECK(t128.t == 5);
  CHECK(t128.mu == doctest::Approx(121.1).epsilon(0.0004));
  const auto t192 = squirrels_choose_t(192);
  CHECK(t192.t == 8);
  CHECK(t192.mu == doctest::Approx(189.5).epsilon(0.0003));
  const auto t256 = squirrels_choose_t(256);
  CHECK(t256.t == 11);
  CHECK(t256.mu == doctest::Approx(256.3).epsilon(0.0002));
  const auto alt = squirrels_choose_t(128, 165, true);
  CHECK(alt.mu < 128 + 12);
  CHECK(alt.t > 5);
}
