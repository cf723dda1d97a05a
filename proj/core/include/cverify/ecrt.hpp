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

// Explicit CRT base extension: residues of 0 <= x < Delta modulo a public
// prime basis p are mapped to residues of x (or x - Delta) modulo a second
// basis r, without ever forming Delta or x.
//
//   x = alpha*Delta - floor(alpha)*Delta,   alpha = sum_i y_i / p_i,
//   y_i = x_i * q_i mod p_i,  q_i = (Delta/p_i)^-1 mod p_i.
//
// floor(alpha) is taken from an a-bit fixed-point sum, which is exact or one
// too large; when it is one too large the result is x - Delta.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cverify/modmath.hpp"

namespace cverify {

/// Ordered list of pairwise distinct primes. The product is never formed.
class PrimeBasis {
 public:
  PrimeBasis() = default;
  /// Validates primality and distinctness; throws kInvalidArgument.
  explicit PrimeBasis(std::span<const u64> primes);
  explicit PrimeBasis(std::vector<WordModulus> primes);

  std::size_t size() const { return primes_.size(); }
  const WordModulus& operator[](std::size_t i) const { return primes_[i]; }
  std::span<const WordModulus> moduli() const { return primes_; }
  std::vector<u64> values() const;
  bool contains(u64 v) const;

  friend bool operator==(const PrimeBasis&, const PrimeBasis&) = default;

 private:
  std::vector<WordModulus> primes_;
};

/// Residues of one value over a basis; values[i] < basis[i].
struct RnsResidues {
  std::vector<u64> values;

  static RnsResidues of(u64 x, const PrimeBasis& basis);
  static RnsResidues of_signed(std::int64_t x, const PrimeBasis& basis);
  std::size_t size() const { return values.size(); }
  friend bool operator==(const RnsResidues&, const RnsResidues&) = default;
};

/// q[i] = (Delta / p_i)^-1 mod p_i.
struct CrtCoefficients {
  std::vector<u64> q;
};

/// Running product over j != i, then one inversion per prime.
CrtCoefficients q_coefficients(const PrimeBasis& p);

/// Smallest precision admitted for s public primes: ceil(log2 s) + 1.
unsigned min_precision(std::size_t s);
/// Default precision: one bit above the minimum.
unsigned default_precision(std::size_t s);

/// Precomputed data for mapping residues over `public_basis` (size s) to
/// residues over `secret_basis` (size t). Immutable after construction.
class EcrtPrecomp {
 public:
  EcrtPrecomp(PrimeBasis public_basis, PrimeBasis secret_basis, std::vector<u64> delta_res,
              std::vector<u64> delta_i_res, unsigned precision_a);

  const PrimeBasis& public_basis() const { return public_; }
  const PrimeBasis& secret_basis() const { return secret_; }
  std::size_t s() const { return public_.size(); }
  std::size_t t() const { return secret_.size(); }
  unsigned precision() const { return precision_a_; }

  /// Delta mod r_k.
  u64 delta(std::size_t k) const { return delta_res_[k]; }
  /// Delta_i mod r_k, Delta_i = Delta / p_i.
  u64 delta_i(std::size_t i, std::size_t k) const { return delta_i_res_[k * s() + i]; }

  RnsResidues delta_residues() const { return {delta_res_}; }
  RnsResidues delta_i_residues(std::size_t i) const;
  /// Row k holds (Delta_i mod r_k) for i = 0..s-1.
  std::span<const u64> delta_i_row(std::size_t k) const {
    return std::span<const u64>(delta_i_res_).subspan(k * s(), s());
  }

 private:
  PrimeBasis public_;
  PrimeBasis secret_;
  std::vector<u64> delta_res_;    // t entries
  std::vector<u64> delta_i_res_;  // t x s, secret-prime major
  unsigned precision_a_;
};

/// Residues of Delta and every Delta_i over r, by running products of the
/// p_i reduced mod each r_k. Throws kSharedFactor if some r_k equals some p_i.
EcrtPrecomp mod_ecrt_setup(const PrimeBasis& p, const PrimeBasis& r,
                           std::optional<unsigned> precision_a = std::nullopt);

/// floor(2^a * x_i * q_i / p_i) for the unreduced product x_i * q_i, using
/// a doublings of (x_i q_i mod p_i) with an overflow count. The integer part
/// floor(x_i q_i / p_i) must be below 2^(64-a).
u64 floor_accumulate(u64 x_i, u64 q_i, const WordModulus& p_i, unsigned a);

/// The fixed-point floor estimate
///   f = floor((s + sum_i floor(2^a * y_i / p_i)) / 2^a),  y_i = x_i q_i mod p_i,
/// which equals floor(alpha) or floor(alpha) + 1.
u64 ecrt_floor(const PrimeBasis& p, const CrtCoefficients& q, const RnsResidues& x,
               unsigned a);

/// Residues over the secret basis of x or x - Delta; exactly x whenever
/// x < (1 - s/2^a) Delta.
RnsResidues mod_ecrt(const EcrtPrecomp& pre, const CrtCoefficients& q, const RnsResidues& x);

}  // namespace cverify
