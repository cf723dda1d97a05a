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
#include <vector>

#include "cverify/modmath.hpp"
#include "cverify/rng.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cverify;

namespace {

u64 random_modulus(Rng& rng) {
  const unsigned bits = 2 + static_cast<unsigned>(rng.uniform(62));  // 2..63
  const u64 lo = u64{1} << (bits - 1);
  return lo + rng.uniform(lo);
}

}  // namespace

TEST_CASE("constant-time helpers agree with plain comparisons") {
  Rng rng(1);
  const std::vector<u64> edge = {0, 1, 2, (u64{1} << 63) - 1, u64{1} << 63, ~u64{0}};
  for (u64 a : edge) {
    for (u64 b : edge) {
      CHECK(ct::lt(a, b) == (a < b ? 1u : 0u));
      CHECK(ct::eq(a, b) == (a == b ? 1u : 0u));
    }
  }
  for (int i = 0; i < 10000; ++i) {
    const u64 a = rng.next_u64();
    const u64 b = rng.next_u64() >> (i % 64);
    CHECK(ct::lt(a, b) == (a < b ? 1u : 0u));
    CHECK(ct::select(i & 1, a, b) == ((i & 1) ? a : b));
    CHECK(ct::is_zero(a) == (a == 0 ? 1u : 0u));
  }
}

TEST_CASE("WordModulus rejects out-of-range moduli") {
  CHECK_THROWS_AS(WordModulus(0), Error);
  CHECK_THROWS_AS(WordModulus(1), Error);
  CHECK_THROWS_AS(WordModulus(u64{1} << 63), Error);
  CHECK_NOTHROW(WordModulus(2));
  CHECK_NOTHROW(WordModulus((u64{1} << 63) - 25));
}

TEST_CASE("Barrett reductions match 128-bit division") {
  Rng rng(2);
  for (int i = 0; i < 20000; ++i) {
    const u64 mv = random_modulus(rng);
    const WordModulus m(mv);
    const u64 x = rng.next_u64();
    CHECK(m.reduce(x) == x % mv);
    const u64 a = rng.uniform(mv);
    const u64 b = rng.uniform(mv);
    CHECK(m.mul(a, b) == static_cast<u64>(static_cast<u128>(a) * b % mv));
    CHECK(m.add(a, b) == static_cast<u64>((static_cast<u128>(a) + b) % mv));
    CHECK(m.sub(a, b) == (a >= b ? a - b : a + (mv - b)));
    CHECK(m.neg(a) == (a == 0 ? 0 : mv - a));
    const auto sx = static_cast<std::int64_t>(rng.next_u64());
    const std::int64_t r = sx % static_cast<std::int64_t>(mv);
    CHECK(m.reduce_signed(sx) == static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(mv) : r));
  }
}

TEST_CASE("mul_mod examples") {
  const WordModulus m(2147483647);
  CHECK(mul_mod(0, 12345, m) == 0);
  CHECK(mul_mod(1, 12345, m) == 12345);
  const u64 expect = oracle::mod(oracle::z(u64{1} << 30) * oracle::z(u64{1} << 30), 2147483647);
  CHECK(mul_mod(u64{1} << 30, u64{1} << 30, m) == expect);
}

TEST_CASE("inv_mod against GMP") {
  CHECK(inv_mod(1, WordModulus(2)) == 1);
  CHECK(inv_mod(2, WordModulus(7)) == 4);
  CHECK(inv_mod(2, WordModulus(3)) == 2);
  CHECK_THROWS_AS(inv_mod(0, WordModulus(7)), Error);
  CHECK_THROWS_AS(inv_mod(6, WordModulus(9)), Error);
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const u64 mv = random_modulus(rng);
    const WordModulus m(mv);
    const u64 a = rng.uniform(mv);
    mpz_class inv;
    const bool exists = mpz_invert(inv.get_mpz_t(), oracle::z(a).get_mpz_t(),
                                   oracle::z(mv).get_mpz_t()) != 0;
    if (exists) {
      CHECK(inv_mod(a, m) == oracle::u(inv));
    } else {
      CHECK_THROWS_AS(inv_mod(a, m), Error);
    }
  }
}

TEST_CASE("pow_mod against GMP") {
  Rng rng(4);
  for (int i = 0; i < 3000; ++i) {
    const u64 mv = random_modulus(rng);
    const u64 b = rng.uniform(mv);
    const u64 e = rng.next_u64();
    mpz_class r;
    mpz_powm(r.get_mpz_t(), oracle::z(b).get_mpz_t(), oracle::z(e).get_mpz_t(),
             oracle::z(mv).get_mpz_t());
    CHECK(pow_mod(b, e, WordModulus(mv)) == oracle::u(r));
  }
}

TEST_CASE("strong pseudoprime examples") {
  CHECK(is_strong_pseudoprime(25, 7));
  CHECK(is_strong_pseudoprime(2047, 2));
  CHECK_FALSE(is_strong_pseudoprime(2047, 3));
  for (u64 p : {3ull, 101ull, 2147483647ull}) CHECK(is_strong_pseudoprime(p, 2));
  for (u64 a : {2ull, 3ull, 5ull}) CHECK(is_strong_pseudoprime(kSpsp235Composite31, a));
  CHECK(kSpsp235Composite31 == 24061ull * 48121ull);
}

TEST_CASE("is_prime against trial division and GMP") {
  for (u64 n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
  for (u64 n : {3215031751ull, 3825123056546413051ull, 341550071728321ull}) {
    CHECK(is_prime(n) == (mpz_probab_prime_p(oracle::z(n).get_mpz_t(), 50) != 0));
  }
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = rng.next_u64() | 1;
    CHECK(is_prime(n) == (mpz_probab_prime_p(oracle::z(n).get_mpz_t(), 50) != 0));
  }
  CHECK_FALSE(is_prime(kSpsp235Composite31));
}

TEST_CASE("legendre and sqrt_mod") {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    u64 p = 0;
    do {
      p = (rng.next_u64() >> 34) | 3;
    } while (!is_prime(p));
    const WordModulus m(p);
    const u64 a = rng.uniform(p);
    const int jac = mpz_jacobi(oracle::z(a).get_mpz_t(), oracle::z(p).get_mpz_t());
    const u64 leg = legendre(a, m);
    CHECK(leg == (jac == 0 ? 0 : jac == 1 ? 1 : p - 1));
    const auto root = sqrt_mod(a, m);
    CHECK(root.has_value() == (jac >= 0));
    if (root) CHECK(m.mul(*root, *root) == a);
  }
}

TEST_CASE("prime sampler") {
  Rng rng(7);
  const PrimeWidth w31(31);
  for (int i = 0; i < 300; ++i) {
    const u64 r = sample_prime(w31, rng).value();
    CHECK(r > (u64{1} << 30));
    CHECK(r < (u64{1} << 31));
    CHECK(oracle::is_prime_trial(r));
  }
  CHECK_FALSE(accepts_prime_candidate(kSpsp235Composite31, w31));
  CHECK_FALSE(accepts_prime_candidate((u64{1} << 30) + 2, w31));
  CHECK(accepts_prime_candidate(2147483647, w31));

  std::vector<u64> all8;
  for (u64 v = 129; v < 256; v += 2) {
    if (oracle::is_prime_trial(v)) all8.push_back(v);
  }
  const u64 got = sample_prime(PrimeWidth(8), rng, std::span<const u64>(all8).subspan(1)).value();
  CHECK(got == all8.front());
  CHECK_THROWS_AS(sample_prime(PrimeWidth(8), rng, all8), Error);
  CHECK_THROWS_AS(PrimeWidth(7), Error);
  CHECK_THROWS_AS(PrimeWidth(63), Error);
}

TEST_CASE("prime count bounds") {
  const auto [lo31, hi31] = count_primes_bounds(31);
  CHECK(lo31 < static_cast<double>(kPrimes31));
  CHECK(static_cast<double>(kPrimes31) < hi31);
  CHECK(kPrimes31 == 50697537u);
  const auto [lo128, hi128] = count_primes_bounds(128);
  CHECK(lo128 < hi128);
  const double ref = 127.0 - std::log2(127.0 * std::log(2.0));
  CHECK(std::log2(hi128) == doctest::Approx(ref));
  CHECK(std::log2(lo128) == doctest::Approx(ref + std::log2(0.975)));
  CHECK_THROWS_AS(count_primes_bounds(2), Error);
}

TEST_CASE("63-bit moduli at the top of the range") {
  Rng rng(9);
  for (u64 mv : {(u64{1} << 63) - 25, (u64{1} << 63) - 1, (u64{1} << 62) + 1}) {
    const WordModulus m(mv);
    CHECK(m.mul(mv - 1, mv - 1) == 1);
    for (int i = 0; i < 2000; ++i) {
      const u64 a = mv - 1 - rng.uniform(1000);
      const u64 b = rng.uniform(mv);
      CHECK(m.mul(a, b) == static_cast<u64>(static_cast<u128>(a) * b % mv));
    }
  }
}
