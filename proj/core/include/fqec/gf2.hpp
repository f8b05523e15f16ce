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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqec {

/// Fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits beyond size() in the last word are always zero, so word-level
/// popcount and comparison need no masking.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static BitVector from_support(std::size_t size, std::span<const std::size_t> support);
  static BitVector from_support(std::size_t size, std::initializer_list<std::size_t> support) {
    return from_support(size, std::span<const std::size_t>(support.begin(), support.size()));
  }
  /// Parses a string of '0'/'1' characters; index 0 is the first character.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void clear();

  std::size_t weight() const;
  bool any() const;
  bool none() const { return !any(); }

  /// Inner product over GF(2): parity of the overlap.
  bool dot(const BitVector& other) const;
  /// Number of positions set in both vectors.
  std::size_t overlap(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  bool operator==(const BitVector& other) const = default;
  /// Lexicographic order with index 0 most significant.
  std::strong_ordering operator<=>(const BitVector& other) const;

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  std::vector<std::size_t> support() const;
  /// Copy of bits [begin, begin + length).
  BitVector slice(std::size_t begin, std::size_t length) const;
  /// Bits at the given positions, in order.
  BitVector gather(std::span<const std::size_t> positions) const;

  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  std::string to_string() const;

 private:
  static std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Dense row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVector> rows);
  static BitMatrix from_supports(std::size_t cols, const std::vector<std::vector<std::size_t>>& supports);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_.empty(); }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const BitVector& operator[](std::size_t i) const { return rows_[i]; }
  BitVector& operator[](std::size_t i) { return rows_[i]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  void append_row(BitVector row);
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  /// M · v over GF(2).
  BitVector multiply(const BitVector& v) const;
  /// vᵀ · M over GF(2), i.e. the XOR of the rows selected by v.
  BitVector combine_rows(const BitVector& selection) const;
  BitMatrix transpose() const;
  /// Column j as a vector of length rows().
  BitVector column(std::size_t j) const;
  /// Rows followed by the rows of `other`.
  BitMatrix stacked(const BitMatrix& other) const;

  bool is_zero() const;
  std::size_t nnz() const;

  bool operator==(const BitMatrix& other) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// A · Bᵀ over GF(2); entry (i, j) is rows A_i, B_j dotted.
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

/// Reduced row echelon form with pivots chosen leftmost-column first.
struct RowEchelon {
  BitMatrix reduced;                // rank() nonzero rows
  std::vector<std::size_t> pivots;  // pivot column of each reduced row
  std::size_t rank() const { return pivots.size(); }

  /// Clears the pivot columns of v using the reduced rows; the result is the
  /// canonical representative of v modulo the row space.
  BitVector reduce(BitVector v) const;
  bool in_row_space(const BitVector& v) const { return reduce(v).none(); }
};

RowEchelon row_reduce(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
/// Basis of {x : M x = 0}, one vector per free column in increasing order.
BitMatrix nullspace(const BitMatrix& m);
/// Some x with M x = s, or nullopt when the system is inconsistent. Free
/// variables are set to zero. Throws std::invalid_argument when s.size()
/// differs from m.rows().
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s);

}  // namespace fqec
