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

// Packed vectors and matrices over F3. Each trit occupies a 2-bit field
// holding 0, 1 or 2; 32 trits per 64-bit limb, least significant field
// first. Rows are padded to whole limbs and padding fields are zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cverify/common.hpp"

namespace cverify {

class Rng;

namespace f3 {

inline constexpr std::size_t kTritsPerLimb = 32;
inline constexpr std::uint64_t kLow = 0x5555555555555555ULL;
inline constexpr std::uint64_t kPair = 0x3333333333333333ULL;
inline constexpr std::uint64_t kNibble = 0x1111111111111111ULL;

inline std::size_t limbs_for(std::size_t trits) {
  return (trits + kTritsPerLimb - 1) / kTritsPerLimb;
}

// Even and odd 2-bit fields are added separately inside 4-bit lanes so that
// a sum of at most 4 never carries into the next field.
inline std::uint64_t add_lanes(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  const std::uint64_t flag = ((s + kNibble) >> 2) & kNibble;
  return s - (flag | (flag << 1));
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t even = add_lanes(a & kPair, b & kPair);
  const std::uint64_t odd = add_lanes((a >> 2) & kPair, (b >> 2) & kPair);
  return even | (odd << 2);
}

inline std::uint64_t neg(std::uint64_t a) { return ((a & kLow) << 1) | ((a >> 1) & kLow); }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return add(a, neg(b)); }

/// Multiplication of every field by a scalar in {0, 1, 2}.
inline std::uint64_t scale(std::uint64_t a, unsigned coef) {
  const std::uint64_t keep = static_cast<std::uint64_t>(0) - (coef & 1);
  const std::uint64_t flip = static_cast<std::uint64_t>(0) - (coef >> 1);
  return (a & keep) | (neg(a) & flip);
}

inline unsigned weight(std::uint64_t a) {
  return static_cast<unsigned>(__builtin_popcountll((a | (a >> 1)) & kLow));
}

}  // namespace f3

class TritVector {
 public:
  TritVector() = default;
  explicit TritVector(std::size_t len) : len_(len), limbs_(f3::limbs_for(len), 0) {}

  /// Throws kMalformedInput for values above 2.
  static TritVector from_trits(std::span<const std::uint8_t> trits);
  std::vector<std::uint8_t> to_trits() const;

  std::size_t size() const { return len_; }
  unsigned get(std::size_t i) const {
    return static_cast<unsigned>((limbs_[i / 32] >> (2 * (i % 32))) & 3);
  }
  void set(std::size_t i, unsigned v) {
    const unsigned sh = 2 * (i % 32);
    limbs_[i / 32] = (limbs_[i / 32] & ~(std::uint64_t{3} << sh)) | (std::uint64_t{v} << sh);
  }

  std::span<std::uint64_t> limbs() { return limbs_; }
  std::span<const std::uint64_t> limbs() const { return limbs_; }

  std::size_t weight() const;
  bool is_zero() const;
  /// Trits [begin, begin + len).
  TritVector slice(std::size_t begin, std::size_t len) const;
  /// this += other.
  void add_assign(const TritVector& other);
  TritVector negated() const;

  static TritVector random(std::size_t len, Rng& rng);

  friend bool operator==(const TritVector&, const TritVector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> limbs_;
};

class TernaryMatrix {
 public:
  TernaryMatrix() = default;
  TernaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(f3::limbs_for(cols)), data_(rows * stride_, 0) {}

  static TernaryMatrix identity(std::size_t n);
  static TernaryMatrix random(std::size_t rows, std::size_t cols, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  unsigned get(std::size_t r, std::size_t c) const {
    return static_cast<unsigned>((data_[r * stride_ + c / 32] >> (2 * (c % 32))) & 3);
  }
  void set(std::size_t r, std::size_t c, unsigned v) {
    std::uint64_t& limb = data_[r * stride_ + c / 32];
    const unsigned sh = 2 * (c % 32);
    limb = (limb & ~(std::uint64_t{3} << sh)) | (std::uint64_t{v} << sh);
  }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return std::span<const std::uint64_t>(data_).subspan(r * stride_, stride_);
  }
  std::span<std::uint64_t> row(std::size_t r) {
    return std::span<std::uint64_t>(data_).subspan(r * stride_, stride_);
  }
  TritVector row_vector(std::size_t r) const;
  void set_row(std::size_t r, const TritVector& v);

  /// Rows [begin, begin + count).
  TernaryMatrix row_block(std::size_t begin, std::size_t count) const;
  /// Rows of `this` followed by rows of `below`; columns must agree.
  TernaryMatrix stacked(const TernaryMatrix& below) const;

  friend bool operator==(const TernaryMatrix&, const TernaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

/// dst += coef * src over whole limbs.
void f3_axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, unsigned coef);

/// Row vector times matrix: v has M.rows() trits, result M.cols(). Throws
/// kDimensionMismatch.
TritVector f3_matvec(const TritVector& v, const TernaryMatrix& m);
/// A * B. Throws kDimensionMismatch.
TernaryMatrix f3_matmul(const TernaryMatrix& a, const TernaryMatrix& b);
std::size_t f3_rank(TernaryMatrix m);

}  // namespace cverify
