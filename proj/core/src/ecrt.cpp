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

#include "cverify/ecrt.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace cverify {

PrimeBasis::PrimeBasis(std::span<const u64> primes) {
  primes_.reserve(primes.size());
  for (u64 p : primes) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::kInvalidArgument, "basis entry is not prime: " + std::to_string(p));
    }
    primes_.emplace_back(p);
  }
  auto sorted = values();
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "basis primes must be distinct");
  }
}

PrimeBasis::PrimeBasis(std::vector<WordModulus> primes) : primes_(std::move(primes)) {
  auto sorted = values();
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "basis primes must be distinct");
  }
}

std::vector<u64> PrimeBasis::values() const {
  std::vector<u64> out;
  out.reserve(primes_.size());
  for (const auto& p : primes_) out.push_back(p.value());
  return out;
}

bool PrimeBasis::contains(u64 v) const {
  return std::any_of(primes_.begin(), primes_.end(),
                     [v](const WordModulus& p) { return p.value() == v; });
}

RnsResidues RnsResidues::of(u64 x, const PrimeBasis& basis) {
  RnsResidues r;
  r.values.reserve(basis.size());
  for (const auto& m : basis.moduli()) r.values.push_back(m.reduce(x));
  return r;
}

RnsResidues RnsResidues::of_signed(std::int64_t x, const PrimeBasis& basis) {
  RnsResidues r;
  r.values.reserve(basis.size());
  for (const auto& m : basis.moduli()) r.values.push_back(m.reduce_signed(x));
  return r;
}

CrtCoefficients q_coefficients(const PrimeBasis& p) {
  const std::size_t s = p.size();
  CrtCoefficients out;
  out.q.assign(s, 1);
  for (std::size_t i = 0; i < s; ++i) {
    const WordModulus& pi = p[i];
    u64 acc = pi.reduce(1);
    for (std::size_t j = 0; j < s; ++j) {
      if (j != i) acc = pi.mul(acc, pi.reduce(p[j].value()));
    }
    out.q[i] = inv_mod(acc, pi);
  }
  return out;
}

unsigned min_precision(std::size_t s) {
  const auto ceil_log2 = static_cast<unsigned>(std::bit_width(s - 1));
  return (s <= 1 ? 0U : ceil_log2) + 1;
}

unsigned default_precision(std::size_t s) { return min_precision(s) + 1; }

EcrtPrecomp::EcrtPrecomp(PrimeBasis public_basis, PrimeBasis secret_basis,
                         std::vector<u64> delta_res, std::vector<u64> delta_i_res,
                         unsigned precision_a)
    : public_(std::move(public_basis)),
      secret_(std::move(secret_basis)),
      delta_res_(std::move(delta_res)),
      delta_i_res_(std::move(delta_i_res)),
      precision_a_(precision_a) {
  if (public_.size() == 0 || secret_.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "explicit CRT needs non-empty bases");
  }
  if (delta_res_.size() != t() || delta_i_res_.size() != s() * t()) {
    throw Error(ErrorCode::kDimensionMismatch, "explicit CRT precomputation has wrong shape");
  }
  if (precision_a_ < min_precision(s())) {
    throw Error(ErrorCode::kInvalidArgument, "fixed-point precision below ceil(log2 s) + 1");
  }
  // The floor accumulator holds s + s * (2^a - 1) < 2^64.
  if (s() > (std::size_t{1} << 16) || precision_a_ > 32) {
    throw Error(ErrorCode::kInvalidArgument, "explicit CRT supports s <= 2^16 and a <= 32");
  }
  for (const auto& r : secret_.moduli()) {
    if (public_.contains(r.value())) {
      throw Error(ErrorCode::kSharedFactor,
                  "secret prime " + std::to_string(r.value()) + " divides Delta");
    }
  }
}

RnsResidues EcrtPrecomp::delta_i_residues(std::size_t i) const {
  RnsResidues out;
  out.values.reserve(t());
  for (std::size_t k = 0; k < t(); ++k) out.values.push_back(delta_i(i, k));
  return out;
}

EcrtPrecomp mod_ecrt_setup(const PrimeBasis& p, const PrimeBasis& r,
                           std::optional<unsigned> precision_a) {
  const std::size_t s = p.size();
  const std::size_t t = r.size();
  for (const auto& rk : r.moduli()) {
    if (p.contains(rk.value())) {
      throw Error(ErrorCode::kSharedFactor,
                  "secret prime " + std::to_string(rk.value()) + " is a public prime");
    }
  }
  std::vector<u64> m(t);
  std::vector<u64> c(t * s);
  for (std::size_t k = 0; k < t; ++k) {
    m[k] = r[k].reduce(1);
    std::fill_n(c.begin() + static_cast<std::ptrdiff_t>(k * s), s, m[k]);
  }
  std::vector<u64> u(t);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < t; ++k) {
      u[k] = r[k].reduce(p[i].value());
      m[k] = r[k].mul(m[k], u[k]);
    }
    for (std::size_t k = 0; k < t; ++k) {
      u64* row = c.data() + k * s;
      for (std::size_t j = 0; j < s; ++j) {
        if (j != i) row[j] = r[k].mul(row[j], u[k]);
      }
    }
  }
  return EcrtPrecomp(p, r, std::move(m), std::move(c),
                     precision_a.value_or(default_precision(s)));
}

u64 floor_accumulate(u64 x_i, u64 q_i, const WordModulus& p_i, unsigned a) {
  const u128 y = static_cast<u128>(x_i) * q_i;
  const u64 p = p_i.value();
  const auto whole = static_cast<u64>(y / p);
  u64 rem = static_cast<u64>(y % p);
  if (a > 0 && (a >= 64 || (whole >> (64 - a)) != 0)) {
    throw Error(ErrorCode::kInvalidArgument, "floor_accumulate result exceeds 64 bits");
  }
  u64 frac = 0;
  for (unsigned step = 0; step < a; ++step) {
    const u64 doubled = rem << 1;  // < 2^64 since rem < p < 2^63
    const u64 overflow = 1 ^ ct::lt(doubled, p);
    rem = doubled - (p & ct::mask(overflow));
    frac = (frac << 1) | overflow;
  }
  return (a == 0 ? whole : (whole << a)) | frac;
}

namespace {

void check_input(const PrimeBasis& p, const CrtCoefficients& q, const RnsResidues& x) {
  if (q.q.size() != p.size() || x.size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "residue vector does not match basis");
  }
}

}  // namespace

u64 ecrt_floor(const PrimeBasis& p, const CrtCoefficients& q, const RnsResidues& x,
               unsigned a) {
  check_input(p, q, x);
  u64 f = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const u64 y = p[i].mul(x.values[i], q.q[i]);
    f += floor_accumulate(y, 1, p[i], a);
  }
  return f >> a;
}

RnsResidues mod_ecrt(const EcrtPrecomp& pre, const CrtCoefficients& q, const RnsResidues& x) {
  const PrimeBasis& p = pre.public_basis();
  const PrimeBasis& r = pre.secret_basis();
  check_input(p, q, x);
  const std::size_t s = p.size();
  const unsigned a = pre.precision();

  std::vector<u64> y(s);
  u64 f = s;
  for (std::size_t i = 0; i < s; ++i) {
    y[i] = p[i].mul(x.values[i], q.q[i]);
    f += floor_accumulate(y[i], 1, p[i], a);
  }
  f >>= a;

  RnsResidues z;
  z.values.resize(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const WordModulus& rk = r[k];
    const std::span<const u64> d = pre.delta_i_row(k);
    u64 acc = 0;
    for (std::size_t i = 0; i < s; ++i) {
      acc = rk.add(acc, rk.mul(rk.reduce(y[i]), d[i]));
    }
    z.values[k] = rk.sub(acc, rk.mul(rk.reduce(f), pre.delta(k)));
  }
  return z;
}

}  // namespace cverify
