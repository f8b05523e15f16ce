// Copyright 2026 The foliate-qec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqec/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqec {

BitVector BitVector::from_support(std::size_t size, std::span<const std::size_t> support) {
  BitVector v(size);
  for (std::size_t i : support) {
    if (i >= size) {
      throw std::out_of_range("BitVector::from_support: index " + std::to_string(i) +
                              " out of range for size " + std::to_string(size));
    }
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: expected only '0' and '1'");
    }
  }
  return v;
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("BitVector: size mismatch (" + std::to_string(size_) + " vs " +
                                std::to_string(other.size_) + ")");
  }
}

bool BitVector::dot(const BitVector& other) const {
  check_same_size(other);
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::overlap(const BitVector& other) const {
  check_same_size(other);
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return n;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::strong_ordering BitVector::operator<=>(const BitVector& other) const {
  if (size_ != other.size_) return size_ <=> other.size_;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word diff = words_[i] ^ other.words_[i];
    if (diff != 0) {
      const Word lowest = diff & (~diff + 1);
      return (words_[i] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t BitVector::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    Word w = words_[wi];
    while (w != 0) {
      out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t length) const {
  if (begin + length > size_) throw std::out_of_range("BitVector::slice out of range");
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (get(begin + i)) out.set(i);
  }
  return out;
}

BitVector BitVector::gather(std::span<const std::size_t> positions) const {
  BitVector out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (get(positions[i])) out.set(i);
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVector> rows) {
  BitMatrix m;
  m.cols_ = cols;
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

BitMatrix BitMatrix::from_supports(std::size_t cols,
                                   const std::vector<std::vector<std::size_t>>& supports) {
  BitMatrix m;
  m.cols_ = cols;
  for (const auto& s : supports) m.append_row(BitVector::from_support(cols, s));
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  BitMatrix m;
  bool first = true;
  for (auto r : rows) {
    if (first) {
      m.cols_ = r.size();
      first = false;
    }
    m.append_row(BitVector::from_string(r));
  }
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("BitMatrix::append_row: row has " + std::to_string(row.size()) +
                                " columns, matrix has " + std::to_string(cols_));
  }
  rows_.push_back(std::move(row));
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("BitMatrix::multiply: vector length " + std::to_string(v.size()) +
                                " != cols " + std::to_string(cols_));
  }
  BitVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].dot(v)) out.set(i);
  }
  return out;
}

BitVector BitMatrix::combine_rows(const BitVector& selection) const {
  if (selection.size() != rows_.size()) {
    throw std::invalid_argument("BitMatrix::combine_rows: selection length mismatch");
  }
  BitVector out(cols_);
  for (std::size_t i : selection.support()) out ^= rows_[i];
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

BitVector BitMatrix::column(std::size_t j) const {
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].get(j)) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::stacked(const BitMatrix& other) const {
  if (other.cols_ != cols_ && !other.empty() && !empty()) {
    throw std::invalid_argument("BitMatrix::stacked: column mismatch");
  }
  BitMatrix out = *this;
  if (empty()) out.cols_ = other.cols_;
  for (const auto& r : other.rows_) out.append_row(r);
  return out;
}

bool BitMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

std::size_t BitMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.weight();
  return n;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("multiply_transpose: column mismatch (" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.cols()) + ")");
  }
  BitMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      if (a[i].dot(b[j])) out.set(i, j);
    }
  }
  return out;
}

namespace {

// In-place Gauss-Jordan elimination over the first `pivot_cols` columns.
// Returns the pivot column of each leading row; rows past the pivots are zero
// on the pivot region.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

BitVector RowEchelon::reduce(BitVector v) const {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (v.get(pivots[i])) v ^= reduced[i];
  }
  return v;
}

RowEchelon row_reduce(const BitMatrix& m) {
  std::vector<BitVector> rows(m.begin(), m.end());
  auto pivots = eliminate(rows, m.cols());
  rows.resize(pivots.size());
  return RowEchelon{BitMatrix::from_rows(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
  std::vector<BitVector> rows(m.begin(), m.end());
  return eliminate(rows, m.cols()).size();
}

BitMatrix nullspace(const BitMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  BitMatrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    BitVector v(n);
    v.set(f);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (ech.reduced.get(i, f)) v.set(ech.pivots[i]);
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s) {
  if (s.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side has length " + std::to_string(s.size()) +
                                ", matrix has " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t n = m.cols();
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitVector aug(n + 1);
    for (std::size_t c : m[i].support()) aug.set(c);
    if (s.get(i)) aug.set(n);
    rows.push_back(std::move(aug));
  }
  const auto pivots = eliminate(rows, n);
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (rows[i].get(n)) return std::nullopt;
  }
  BitVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (rows[i].get(n)) x.set(pivots[i]);
  }
  return x;
}

}  // namespace fqec
