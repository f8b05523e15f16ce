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

#include "fqec/noise.hpp"

#include <stdexcept>

namespace fqec {

Rng trial_rng(std::uint64_t seed, std::uint64_t grid_index, std::uint64_t trial) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(grid_index), hi(grid_index), lo(trial), hi(trial)};
  return Rng(seq);
}

BitVector sample_iid_z(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_iid_z: p must lie in [0, 1]");
  BitVector e(n);
  if (p == 0.0) return e;
  for (std::size_t q = 0; q < n; ++q) {
    if (uniform01(rng) < p) e.set(q);
  }
  return e;
}

BitVector syndrome(const BitMatrix& h, const BitVector& e) {
  if (e.size() != h.cols()) throw std::invalid_argument("syndrome: error length does not match check matrix");
  return h.multiply(e);
}

}  // namespace fqec
