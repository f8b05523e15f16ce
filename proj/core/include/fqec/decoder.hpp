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
#include <optional>
#include <string_view>
#include <vector>

#include "fqec/bp_decoder.hpp"
#include "fqec/foliation.hpp"
#include "fqec/map_decoder.hpp"
#include "fqec/sector.hpp"

namespace fqec {

enum class DecoderKind { kBpEnum, kBpTrellis, kMapOracle };
enum class SectorSelection { kPrimal, kDual, kBoth };

/// "bp+enum", "bp+trellis", "map-oracle".
std::string_view to_string(DecoderKind kind);
DecoderKind decoder_kind_from_string(std::string_view text);
/// "primal", "dual", "both".
std::string_view to_string(SectorSelection s);
SectorSelection sector_selection_from_string(std::string_view text);

std::unique_ptr<SheetDecoder> make_sheet_decoder(DecoderKind kind, const BitMatrix& checks);

/// Outcome of decoding one syndrome of the whole foliated cluster.
struct DecodeResult {
  BitVector correction;     // global; code qubits only
  BitVector ancilla_flips;  // global; ancillas only
  BitVector failures;       // one bit per counted correlator row, in row order
  bool converged = true;
  std::size_t iterations = 0;  // maximum over decoded sectors
  bool repaired = false;
};

/// Decodes syndromes of a foliated cluster under IID Z noise of strength p,
/// sector by sector. Only the selected sectors are decoded and counted.
class TrialDecoder {
 public:
  /// Throws CapacityError when the decoder cannot handle the sector sizes.
  TrialDecoder(const FoliatedCluster& f, DecoderKind kind, double p, SectorSelection sectors = SectorSelection::kBoth,
               BpConfig bp = {});

  /// Fills correction, ancilla flips and metadata; failures are left empty.
  DecodeResult decode(const BitVector& syndrome) const;
  /// Failure bits lambda_l · (e ⊕ correction ⊕ ancilla_flips) for the counted rows.
  BitVector classify(const BitVector& error, const DecodeResult& result) const;
  /// decode followed by classify.
  DecodeResult run(const BitVector& error) const;

  const CheckMatrix& checks() const { return checks_; }
  const LogicalCorrelatorMatrix& correlators() const { return lambda_; }
  /// Correlator rows counted for failures.
  const std::vector<std::size_t>& counted_rows() const { return counted_rows_; }
  const std::vector<SectorProblem>& sectors() const { return sectors_; }

 private:
  double p_;
  CheckMatrix checks_;
  LogicalCorrelatorMatrix lambda_;
  std::vector<SectorProblem> sectors_;
  std::vector<std::optional<BpDecoder>> bp_;
  std::vector<std::optional<MapOracle>> map_;
  std::vector<std::size_t> counted_rows_;
};

}  // namespace fqec
