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

// Reference implementations used as test oracles. They work on plain
// std::vector<int> data and share no code with the library.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fqec/gf2.hpp"

namespace fqec::testing {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c) ? 1 : 0;
  }
  return d;
}

inline std::vector<int> to_dense(const BitVector& v) {
  std::vector<int> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v.get(i) ? 1 : 0;
  return d;
}

/// Textbook elimination mod 2 on integers.
inline std::size_t naive_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] % 2 == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c] % 2 == 1) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + m[rank][k]) % 2;
      }
    }
    ++rank;
  }
  return rank;
}

inline std::vector<int> naive_multiply(const Dense& m, const std::vector<int>& v) {
  std::vector<int> out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c) acc += m[r][c] * v[c];
    out[r] = acc % 2;
  }
  return out;
}

inline BitVector random_vector(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
  return v;
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double density = 0.5) {
  BitMatrix m(0, cols);
  for (std::size_t r = 0; r < rows; ++r) m.append_row(random_vector(cols, rng, density));
  return m;
}

/// All length-n vectors of weight w, by index sets; calls f(support).
template <typename F>
void for_each_combination(std::size_t n, std::size_t w, F&& f) {
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  if (w > n) return;
  while (true) {
    f(idx);
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace fqec::testing
