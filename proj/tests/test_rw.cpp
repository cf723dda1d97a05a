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
#include "cverify/rw.hpp"
#include "doctest.h"

using namespace cverify;

namespace {

const ByteView kMsg = as_bytes("compressed verification");

}  // namespace

TEST_CASE("keygen produces well-shaped moduli") {
  Rng rng(21);
  for (unsigned bits : {64u, 96u, 128u}) {
    const RwKeypair kp = rw_keygen(bits, rng);
    CHECK(kp.p * kp.q == kp.n);
    CHECK(bit_length(kp.n) == bits);
    CHECK(kp.p % 8 == 3);
    CHECK(kp.q % 8 == 7);
    CHECK(mpz_probab_prime_p(kp.p.get_mpz_t(), 50) > 0);
    CHECK(mpz_probab_prime_p(kp.q.get_mpz_t(), 50) > 0);
    const RwSignature sig = rw_sign(kp, kMsg, rng);
    CHECK(rw_verify(sig, kMsg, kp.n) == Verdict::kAccept);
  }
  CHECK_THROWS_AS(RwKeypair::from_primes(5, 7), Error);
  CHECK_THROWS_AS(RwKeypair::from_primes(11, 13), Error);
  CHECK_THROWS_AS(rw_keygen(32, rng), Error);
}

TEST_CASE("signatures satisfy the integer identity") {
  Rng rng(22);
  const RwKeypair kp = rw_keygen(256, rng);
  for (int i = 0; i < 200; ++i) {
    const RwSignature sig = rw_sign(kp, kMsg, rng);
    CHECK(rw_residual(sig, kMsg, kp.n) == 0);
    CHECK(abs(sig.t) < 2 * kp.n);
    CHECK(sig.s > 1);
    CHECK(sig.s < kp.n);
  }
}

TEST_CASE("full verification rejects tampering") {
  Rng rng(23);
  const RwKeypair kp = rw_keygen(256, rng);
  const RwSignature sig = rw_sign(kp, kMsg, rng);
  CHECK(rw_verify(sig, kMsg, kp.n) == Verdict::kAccept);
  CHECK(rw_verify(sig, as_bytes("other message"), kp.n) == Verdict::kReject);
  RwSignature bumped = sig;
  bumped.s += 1;
  CHECK(rw_verify(bumped, kMsg, kp.n) == Verdict::kReject);
  RwSignature flipped = sig;
  flipped.e = -sig.e;
  CHECK(rw_verify(flipped, kMsg, kp.n) == Verdict::kReject);
}

TEST_CASE("malformed signatures") {
  Rng rng(24);
  const RwKeypair kp = rw_keygen(128, rng);
  const RwSignature sig = rw_sign(kp, kMsg, rng);
  const WordModulus ell = rw_ckeygen(31, rng);
  const RwVerificationKey vk = rw_vkeygen(ell, kp.n);
  auto expect_malformed = [&](RwSignature bad) {
    try {
      (void)rw_verify(bad, kMsg, kp.n);
      FAIL("expected malformed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMalformedSignature);
    }
    CHECK_THROWS_AS(rw_cverify(bad, kMsg, vk), Error);
  };
  RwSignature bad = sig;
  bad.e = 0;
  expect_malformed(bad);
  bad = sig;
  bad.f = 3;
  expect_malformed(bad);
  bad = sig;
  bad.s = 1;
  expect_malformed(bad);
  bad = sig;
  bad.s = kp.n;
  CHECK_THROWS_AS(rw_verify(bad, kMsg, kp.n), Error);
}

TEST_CASE("verification key reduction") {
  Rng rng(25);
  const WordModulus ell = rw_ckeygen(31, rng);
  CHECK(rw_vkeygen(ell, BigInt(77)).n_ell == 77);
  for (int i = 0; i < 100; ++i) {
    const BigInt n = random_bits_exact(rng, 300);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), ell.value());
    CHECK(rw_vkeygen(ell, n).n_ell == r.get_ui());
  }
  const RwKeypair a = rw_keygen(128, rng);
  const RwKeypair b = rw_keygen(128, rng);
  const RwVerificationKey va = rw_vkeygen(ell, a.n);
  const RwVerificationKey vb = rw_vkeygen(ell, b.n);
  CHECK(va.ell == vb.ell);
  CHECK(rw_cverify(rw_sign(a, kMsg, rng), kMsg, va) == Verdict::kAccept);
  CHECK(rw_cverify(rw_sign(b, kMsg, rng), kMsg, vb) == Verdict::kAccept);
}

TEST_CASE("compressed verification") {
  Rng rng(26);
  const RwKeypair kp = rw_keygen(256, rng);
  const WordModulus ell = rw_ckeygen(31, rng);
  CHECK(ell.bits() == 31);
  const RwVerificationKey vk = rw_vkeygen(ell, kp.n);
  int tampered_accepts = 0;
  for (int i = 0; i < 300; ++i) {
    const RwSignature sig = rw_sign(kp, kMsg, rng);
    CHECK(rw_cverify(sig, kMsg, vk) == Verdict::kAccept);
    RwSignature bad = sig;
    bad.t += 1;
    tampered_accepts += rw_cverify(bad, kMsg, vk) == Verdict::kAccept ? 1 : 0;
  }
  CHECK(tampered_accepts == 0);
}

TEST_CASE("forgeries with a known secret prime") {
  Rng rng(27);
  const RwKeypair kp = rw_keygen(256, rng);
  const WordModulus ell = rw_ckeygen(31, rng);
  const RwVerificationKey vk = rw_vkeygen(ell, kp.n);
  const RwSignature f1 = rw_forge_known_ell(ell, kMsg, kp.n, rng);
  const RwSignature f2 = rw_forge_known_ell(ell, kMsg, kp.n, rng);
  for (const RwSignature* f : {&f1, &f2}) {
    CHECK(rw_cverify(*f, kMsg, vk) == Verdict::kAccept);
    CHECK(rw_verify(*f, kMsg, kp.n) == Verdict::kReject);
    const BigInt xi = rw_residual(*f, kMsg, kp.n);
    CHECK(xi != 0);
    CHECK(mpz_divisible_ui_p(xi.get_mpz_t(), ell.value()) != 0);
  }
  BigInt g;
  const BigInt x1 = rw_residual(f1, kMsg, kp.n);
  const BigInt x2 = rw_residual(f2, kMsg, kp.n);
  mpz_gcd(g.get_mpz_t(), x1.get_mpz_t(), x2.get_mpz_t());
  CHECK(mpz_divisible_ui_p(g.get_mpz_t(), ell.value()) != 0);
}

TEST_CASE("forgery bound") {
  const BigInt n = BigInt(1) << 127;
  CHECK(rw_forgery_bound(n, 31, 0) == 0.0);
  const double b = rw_forgery_bound(n, 31, std::ldexp(1.0, 16));
  CHECK(b == doctest::Approx(2.0 * 4 * 65536 / 50697537.0));
  CHECK(b == doctest::Approx(0.0103).epsilon(0.005));
  CHECK(rw_forgery_bound(n, 31, std::ldexp(1.0, 17)) == doctest::Approx(2 * b));
}
