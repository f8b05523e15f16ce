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

#include <cstddef>
#include <cstdint>
#include <random>

#include "fqec/foliation.hpp"
#include "fqec/gf2.hpp"

namespace fqec {

using Rng = std::mt19937_64;

/// Independent stream for one Monte Carlo trial, seeded from
/// (campaign seed, grid point, trial) through std::seed_seq.
Rng trial_rng(std::uint64_t seed, std::uint64_t grid_index, std::uint64_t trial);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Each of n positions is set independently with probability p (one draw per
/// position, in order). Throws std::invalid_argument unless 0 ≤ p ≤ 1.
BitVector sample_iid_z(std::size_t n, double p, Rng& rng);
inline BitVector sample_iid_z(const FoliatedCluster& f, double p, Rng& rng) {
  return sample_iid_z(f.num_qubits(), p, rng);
}

/// s = h e over GF(2). Throws std::invalid_argument on a length mismatch.
BitVector syndrome(const BitMatrix& h, const BitVector& e);
inline BitVector syndrome(const CheckMatrix& checks, const BitVector& e) { return syndrome(checks.h, e); }

}  // namespace fqec
