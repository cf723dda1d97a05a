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

// Multiprecision integers for the Rabin-Williams module and the desk-scale
// lattice key generator. Verification paths of the GPV schemes never touch
// this header.

#include <gmpxx.h>

#include <cstddef>

#include "cverify/modmath.hpp"
#include "cverify/xof.hpp"

namespace cverify {

using BigInt = mpz_class;

/// Little-endian magnitude bytes, zero-padded to at least `min_len`.
Bytes to_bytes_le(const BigInt& x, std::size_t min_len = 0);
BigInt from_bytes_le(ByteView bytes);
BigInt from_u64(u64 v);
u64 to_u64(const BigInt& x);  // requires 0 <= x < 2^64

/// x mod m from the 64-bit limbs of |x| by Horner's rule in word
/// arithmetic; negative x is mapped into [0, m).
u64 reduce_big(const BigInt& x, const WordModulus& m);

/// Uniform integer of exactly `bits` bits (top bit set).
BigInt random_bits_exact(Rng& rng, unsigned bits);
/// Uniform in [0, bound).
BigInt random_below(Rng& rng, const BigInt& bound);

unsigned bit_length(const BigInt& x);

}  // namespace cverify
