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
#include <vector>

#include "fqec/gf2.hpp"
#include "fqec/sector.hpp"
#include "fqec/sheet_decoder.hpp"

namespace fqec {

struct BpConfig {
  std::size_t max_iters = 50;
  double tol = 1e-6;
  double damping = 0.0;   // weight kept from the previous message
  double epsilon = 1e-12; // message clamp
};

struct SectorDecodeResult {
  BitVector correction;     // local columns; code qubits only
  BitVector ancilla_flips;  // local columns; ancillas only
  bool converged = false;
  std::size_t iterations = 0;
  /// Set when the hard decision left a check chain whose residual no ancilla
  /// assignment explains and code qubits were re-chosen to fix it.
  bool repaired = false;
  /// Per local column: code-qubit posterior or ancilla belief. Empty when the
  /// syndrome is trivial and decoding was skipped.
  std::vector<double> posterior;
};

/// Serial combination a(1-b) + b(1-a): probability that the XOR of two
/// independent bits is 1.
inline double serial(double a, double b) { return a * (1.0 - b) + b * (1.0 - a); }
/// Parallel combination: posterior of one bit from two independent beliefs.
double parallel(double a, double b);

/// Interleaved belief propagation over the sheets of one sector.
///
/// Each sheet's checks see flip priors built from the messages of their
/// ancillas (serial combination of the two neighbours, or the one boundary
/// neighbour). The sheet decoder's flip posterior, divided by that prior, is
/// the extrinsic belief on the flip; the message back to each ancilla removes
/// the other ancilla by a serial combination. Ancilla beliefs combine the
/// prior with both sheets' messages. One iteration sweeps the sheets forward
/// and then backward; decoding stops once no ancilla belief moves by tol.
///
/// Code qubits with posterior > 0.5 are corrected. The residual syndrome is
/// then explained by ancilla flips along each check chain, choosing the more
/// likely assignment when the chain has a free end. Chains closed at both
/// ends (primal sector) can be left with odd parity; those are repaired by
/// re-solving the code-qubit correction on the least reliable columns.
class BpDecoder {
 public:
  BpDecoder(SectorProblem sector, std::shared_ptr<const SheetDecoder> sheet_decoder, BpConfig config = {});

  /// priors: one per local column. s: local syndrome.
  SectorDecodeResult decode(std::span<const double> priors, const BitVector& s) const;

  const SectorProblem& sector() const { return sector_; }
  const BpConfig& config() const { return config_; }

 private:
  SectorProblem sector_;
  std::shared_ptr<const SheetDecoder> sheet_decoder_;
  BpConfig config_;
};

}  // namespace fqec
