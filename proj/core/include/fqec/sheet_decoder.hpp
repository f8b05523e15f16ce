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
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "fqec/gf2.hpp"

namespace fqec {

/// Probabilities handed to decoders are clamped to [kProbabilityFloor, 1 - kProbabilityFloor].
inline constexpr double kProbabilityFloor = 1e-12;

/// Posterior marginals P(e_j = 1 | s) and P(f_c = 1 | s).
struct SheetMarginals {
  std::vector<double> qubit;
  std::vector<double> flip;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Soft decoder for one sheet with checks H (rows c, columns j). The model:
/// code-qubit errors e_j ~ Bernoulli(p_j) and per-check flips
/// f_c ~ Bernoulli(q_c), all independent, observed through s = H e ⊕ f.
class SheetDecoder {
 public:
  virtual ~SheetDecoder() = default;

  const BitMatrix& checks() const { return checks_; }
  std::size_t num_qubits() const { return checks_.cols(); }
  std::size_t num_checks() const { return checks_.rows(); }

  /// Priors are clamped first. Throws std::invalid_argument when the lengths
  /// do not match the checks.
  SheetMarginals marginals(std::span<const double> qubit_priors, std::span<const double> flip_priors,
                           const BitVector& syndrome) const;

 protected:
  explicit SheetDecoder(BitMatrix checks) : checks_(std::move(checks)) {}
  virtual SheetMarginals compute(std::span<const double> qubit_priors, std::span<const double> flip_priors,
                                 const BitVector& syndrome) const = 0;

 private:
  BitMatrix checks_;
};

/// Exact marginals by enumerating all 2^n code-qubit patterns.
class EnumerationSheetDecoder final : public SheetDecoder {
 public:
  static constexpr std::size_t kMaxQubits = 20;
  /// Throws CapacityError when n > kMaxQubits or there are more than 64 checks.
  explicit EnumerationSheetDecoder(BitMatrix checks);

 protected:
  SheetMarginals compute(std::span<const double> qubit_priors, std::span<const double> flip_priors,
                         const BitVector& syndrome) const override;

 private:
  std::vector<std::uint64_t> column_masks_;
};

/// Exact marginals by forward-backward over a syndrome trellis: one section
/// per code qubit, state = partial parities of the checks whose support
/// starts before and ends after the section. Flip variables enter the branch
/// metric when their check closes.
class TrellisSheetDecoder final : public SheetDecoder {
 public:
  static constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 16;
  /// Throws CapacityError if some section needs more than max_states states.
  explicit TrellisSheetDecoder(BitMatrix checks, std::size_t max_states = kDefaultMaxStates);

  /// Largest number of simultaneously open checks.
  std::size_t width() const { return width_; }

 protected:
  SheetMarginals compute(std::span<const double> qubit_priors, std::span<const double> flip_priors,
                         const BitVector& syndrome) const override;

 private:
  struct Section {
    std::size_t in_bits = 0;   // open checks entering this section
    std::uint64_t toggle = 0;  // extended-state bits flipped by e_j = 1
    std::vector<std::size_t> closing;       // check ids closing here
    std::vector<std::size_t> closing_bits;  // their extended-state bit
    std::vector<std::size_t> kept_bits;     // extended bits surviving, in outgoing order
  };
  std::vector<Section> sections_;
  std::vector<std::size_t> empty_checks_;
  std::size_t width_ = 0;
};

/// Largest number of checks simultaneously open in qubit order.
std::size_t trellis_width(const BitMatrix& checks);

}  // namespace fqec
