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

#include "cverify/ternary.hpp"

#include <algorithm>

#include "cverify/rng.hpp"

namespace cverify {

TritVector TritVector::from_trits(std::span<const std::uint8_t> trits) {
  TritVector v(trits.size());
  for (std::size_t i = 0; i < trits.size(); ++i) {
    if (trits[i] > 2) throw Error(ErrorCode::kMalformedInput, "value is not a trit");
    v.set(i, trits[i]);
  }
  return v;
}

std::vector<std::uint8_t> TritVector::to_trits() const {
  std::vector<std::uint8_t> out(len_);
  for (std::size_t i = 0; i < len_; ++i) out[i] = static_cast<std::uint8_t>(get(i));
  return out;
}

std::size_t TritVector::weight() const {
  std::size_t w = 0;
  for (const std::uint64_t limb : limbs_) w += f3::weight(limb);
  return w;
}

bool TritVector::is_zero() const {
  std::uint64_t acc = 0;
  for (const std::uint64_t limb : limbs_) acc |= limb;
  return acc == 0;
}

TritVector TritVector::slice(std::size_t begin, std::size_t len) const {
  TritVector out(len);
  if (begin % 32 == 0) {
    std::copy_n(limbs_.begin() + static_cast<std::ptrdiff_t>(begin / 32), out.limbs_.size(),
                out.limbs_.begin());
    const std::size_t tail = len % 32;
    if (tail != 0) out.limbs_.back() &= (std::uint64_t{1} << (2 * tail)) - 1;
    return out;
  }
  for (std::size_t i = 0; i < len; ++i) out.set(i, get(begin + i));
  return out;
}

void TritVector::add_assign(const TritVector& other) {
  if (other.len_ != len_) throw Error(ErrorCode::kDimensionMismatch, "vector lengths differ");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] = f3::add(limbs_[i], other.limbs_[i]);
}

TritVector TritVector::negated() const {
  TritVector out = *this;
  for (std::uint64_t& limb : out.limbs_) limb = f3::neg(limb);
  return out;
}

TritVector TritVector::random(std::size_t len, Rng& rng) {
  TritVector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, static_cast<unsigned>(rng.uniform(3)));
  return v;
}

TernaryMatrix TernaryMatrix::identity(std::size_t n) {
  TernaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

TernaryMatrix TernaryMatrix::random(std::size_t rows, std::size_t cols, Rng& rng) {
  TernaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<unsigned>(rng.uniform(3)));
  }
  return m;
}

TritVector TernaryMatrix::row_vector(std::size_t r) const {
  TritVector v(cols_);
  std::copy(row(r).begin(), row(r).end(), v.limbs().begin());
  return v;
}

void TernaryMatrix::set_row(std::size_t r, const TritVector& v) {
  if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "row length differs");
  std::copy(v.limbs().begin(), v.limbs().end(), row(r).begin());
}

TernaryMatrix TernaryMatrix::row_block(std::size_t begin, std::size_t count) const {
  if (begin + count > rows_) throw Error(ErrorCode::kDimensionMismatch, "row block out of range");
  TernaryMatrix out(count, cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(begin * stride_), count * stride_,
              out.data_.begin());
  return out;
}

TernaryMatrix TernaryMatrix::stacked(const TernaryMatrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorCode::kDimensionMismatch, "column counts differ");
  TernaryMatrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

void f3_axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, unsigned coef) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f3::add(dst[i], f3::scale(src[i], coef));
}

TritVector f3_matvec(const TritVector& v, const TernaryMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "matvec dimensions");
  TritVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) f3_axpy(out.limbs(), m.row(r), v.get(r));
  return out;
}

TernaryMatrix f3_matmul(const TernaryMatrix& a, const TernaryMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kDimensionMismatch, "matmul dimensions");
  TernaryMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const unsigned coef = a.get(i, l);
      if (coef != 0) f3_axpy(out.row(i), b.row(l), coef);
    }
  }
  return out;
}

std::size_t f3_rank(TernaryMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.get(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) {
      for (std::size_t i = 0; i < m.stride(); ++i) std::swap(m.row(piv)[i], m.row(rank)[i]);
    }
    // 1 and 2 are self-inverse in F3.
    const unsigned inv = m.get(rank, col);
    for (std::size_t i = 0; i < m.stride(); ++i) m.row(rank)[i] = f3::scale(m.row(rank)[i], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const unsigned f = m.get(r, col);
      if (r != rank && f != 0) f3_axpy(m.row(r), m.row(rank), 3 - f);
    }
    ++rank;
  }
  return rank;
}

}  // namespace cverify
