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
#include <span>
#include <unordered_map>

#include "fqec/gf2.hpp"
#include "fqec/sector.hpp"
#include "fqec/sheet_decoder.hpp"

namespace fqec {

/// Degenerate maximum-likelihood decoder by full enumeration. For every
/// syndrome it sums the probability of each logical class (lambda e) and
/// answers with the most likely pattern of the most likely class.
class MapOracle {
 public:
  static constexpr std::size_t kMaxColumns = 22;

  /// Throws CapacityError beyond kMaxColumns columns, 64 checks or 32
  /// logicals, and std::invalid_argument on inconsistent shapes.
  MapOracle(const BitMatrix& h, const BitMatrix& lambda, std::span<const double> priors);
  /// IID prior p on every column of the sector.
  MapOracle(const SectorProblem& sector, double p);

  /// Correction (over the columns) for syndrome s. Throws
  /// std::invalid_argument for a syndrome no pattern produces.
  BitVector decode(const BitVector& s) const;

  /// Exact probability that decode() lands in the wrong logical class.
  double failure_probability() const { return failure_probability_; }
  std::size_t num_syndromes() const { return table_.size(); }

 private:
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> table_;  // syndrome -> representative
  double failure_probability_ = 0.0;
};

}  // namespace fqec
