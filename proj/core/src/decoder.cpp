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

#include "fqec/decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fqec/noise.hpp"

namespace fqec {

std::string_view to_string(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::kBpEnum: return "bp+enum";
    case DecoderKind::kBpTrellis: return "bp+trellis";
    case DecoderKind::kMapOracle: return "map-oracle";
  }
  return "?";
}

DecoderKind decoder_kind_from_string(std::string_view text) {
  if (text == "bp+enum") return DecoderKind::kBpEnum;
  if (text == "bp+trellis") return DecoderKind::kBpTrellis;
  if (text == "map-oracle" || text == "map") return DecoderKind::kMapOracle;
  throw std::invalid_argument("unknown decoder '" + std::string(text) + "' (bp+enum, bp+trellis, map-oracle)");
}

std::string_view to_string(SectorSelection s) {
  switch (s) {
    case SectorSelection::kPrimal: return "primal";
    case SectorSelection::kDual: return "dual";
    case SectorSelection::kBoth: return "both";
  }
  return "?";
}

SectorSelection sector_selection_from_string(std::string_view text) {
  if (text == "primal") return SectorSelection::kPrimal;
  if (text == "dual") return SectorSelection::kDual;
  if (text == "both") return SectorSelection::kBoth;
  throw std::invalid_argument("unknown sector selection '" + std::string(text) + "' (primal, dual, both)");
}

std::unique_ptr<SheetDecoder> make_sheet_decoder(DecoderKind kind, const BitMatrix& checks) {
  switch (kind) {
    case DecoderKind::kBpEnum: return std::make_unique<EnumerationSheetDecoder>(checks);
    case DecoderKind::kBpTrellis: return std::make_unique<TrellisSheetDecoder>(checks);
    case DecoderKind::kMapOracle: break;
  }
  throw std::invalid_argument("make_sheet_decoder: map-oracle has no sheet decoder");
}

TrialDecoder::TrialDecoder(const FoliatedCluster& f, DecoderKind kind, double p, SectorSelection sectors, BpConfig bp)
    : p_(p), checks_(parity_checks(f)), lambda_(logical_correlators(f)) {
  if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("TrialDecoder: p must lie in [0, 0.5]");
  for (Sector s : {Sector::kPrimal, Sector::kDual}) {
    const bool wanted = sectors == SectorSelection::kBoth ||
                        (s == Sector::kPrimal) == (sectors == SectorSelection::kPrimal);
    if (!wanted) continue;
    SectorProblem sp = sector_problem(f, checks_, lambda_, s);
    for (std::size_t r : sp.lambda_rows) counted_rows_.push_back(r);
    if (kind == DecoderKind::kMapOracle) {
      map_.emplace_back(MapOracle(sp, p));
      bp_.emplace_back();
    } else {
      std::shared_ptr<const SheetDecoder> sheet = make_sheet_decoder(kind, sp.sheet_checks);
      bp_.emplace_back(BpDecoder(sp, std::move(sheet), bp));
      map_.emplace_back();
    }
    sectors_.push_back(std::move(sp));
  }
  std::sort(counted_rows_.begin(), counted_rows_.end());
}

DecodeResult TrialDecoder::decode(const BitVector& syndrome) const {
  if (syndrome.size() != checks_.h.rows()) throw std::invalid_argument("TrialDecoder::decode: syndrome length mismatch");
  const std::size_t N = checks_.h.cols();
  DecodeResult out;
  out.correction = BitVector(N);
  out.ancilla_flips = BitVector(N);
  for (std::size_t i = 0; i < sectors_.size(); ++i) {
    const SectorProblem& sp = sectors_[i];
    const BitVector s = sp.restrict_checks(syndrome);
    BitVector code_part(sp.num_columns()), ancilla_part(sp.num_columns());
    if (map_[i]) {
      const BitVector rep = map_[i]->decode(s);
      for (std::size_t c : rep.support()) (sp.column_is_code[c] ? code_part : ancilla_part).set(c);
      out.iterations = std::max<std::size_t>(out.iterations, 1);
    } else {
      const std::vector<double> priors(sp.num_columns(), p_);
      SectorDecodeResult r = bp_[i]->decode(priors, s);
      code_part = std::move(r.correction);
      ancilla_part = std::move(r.ancilla_flips);
      out.converged = out.converged && r.converged;
      out.iterations = std::max(out.iterations, r.iterations);
      out.repaired = out.repaired || r.repaired;
    }
    sp.scatter_qubits(code_part, out.correction);
    sp.scatter_qubits(ancilla_part, out.ancilla_flips);
  }
  return out;
}

BitVector TrialDecoder::classify(const BitVector& error, const DecodeResult& result) const {
  BitVector residual = error;
  residual ^= result.correction;
  residual ^= result.ancilla_flips;
  BitVector failures(counted_rows_.size());
  for (std::size_t i = 0; i < counted_rows_.size(); ++i) {
    if (lambda_.lambda[counted_rows_[i]].dot(residual)) failures.set(i);
  }
  return failures;
}

DecodeResult TrialDecoder::run(const BitVector& error) const {
  DecodeResult r = decode(syndrome(checks_, error));
  r.failures = classify(error, r);
  return r;
}

}  // namespace fqec
