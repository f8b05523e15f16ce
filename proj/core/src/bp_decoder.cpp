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

#include "fqec/bp_decoder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fqec {

double parallel(double a, double b) {
  const double on = a * b;
  const double off = (1.0 - a) * (1.0 - b);
  return on / (on + off);
}

BpDecoder::BpDecoder(SectorProblem sector, std::shared_ptr<const SheetDecoder> sheet_decoder, BpConfig config)
    : sector_(std::move(sector)), sheet_decoder_(std::move(sheet_decoder)), config_(config) {
  if (!sheet_decoder_) throw std::invalid_argument("BpDecoder: missing sheet decoder");
  if (sheet_decoder_->checks() != sector_.sheet_checks) {
    throw std::invalid_argument("BpDecoder: sheet decoder was built for different checks");
  }
  if (!(config_.damping >= 0.0 && config_.damping < 1.0)) throw std::invalid_argument("BpDecoder: damping must be in [0, 1)");
  if (config_.max_iters == 0) throw std::invalid_argument("BpDecoder: max_iters must be positive");
}

namespace {

struct Workspace {
  const SectorProblem& sp;
  double eps;
  std::vector<double> anc_prior;
  std::vector<std::array<double, 2>> ext;  // [a][0] from lower sheet, [a][1] from upper sheet
  std::vector<std::vector<double>> code_prior;
  std::vector<std::vector<double>> code_post;
  std::vector<BitVector> sheet_syndrome;

  double clamp(double p) const { return std::clamp(p, eps, 1.0 - eps); }
  // Message from ancilla a into the sheet on `side` (0 = its lower sheet).
  double to_sheet(int a, int side) const {
    return clamp(parallel(anc_prior[static_cast<std::size_t>(a)], ext[static_cast<std::size_t>(a)][1 - side]));
  }
  double belief(std::size_t a) const { return parallel(parallel(anc_prior[a], ext[a][0]), ext[a][1]); }
};

double odds(double p) { return p / (1.0 - p); }

void update_sheet(Workspace& w, const SheetDecoder& dec, std::size_t i, double damping) {
  const SectorSheet& sheet = w.sp.sheets[i];
  const std::size_t r = sheet.check_ancillas.size();
  std::vector<double> q(r), m_lo(r, 0.0), m_up(r, 0.0);
  for (std::size_t c = 0; c < r; ++c) {
    const auto [lo, up] = sheet.check_ancillas[c];
    // The sheet is the upper neighbour of `lo` and the lower neighbour of `up`.
    if (lo != kNone) m_lo[c] = w.to_sheet(lo, 1);
    if (up != kNone) m_up[c] = w.to_sheet(up, 0);
    if (lo != kNone && up != kNone) {
      q[c] = serial(m_lo[c], m_up[c]);
    } else {
      q[c] = lo != kNone ? m_lo[c] : m_up[c];
    }
    q[c] = w.clamp(q[c]);
  }
  SheetMarginals marg = dec.marginals(w.code_prior[i], q, w.sheet_syndrome[i]);
  for (std::size_t c = 0; c < r; ++c) {
    const auto [lo, up] = sheet.check_ancillas[c];
    const double pf = w.clamp(marg.flip[c]);
    const double ratio = odds(pf) / odds(q[c]);
    const double extrinsic = w.clamp(ratio / (1.0 + ratio));
    auto set = [&](int a, int side, double value) {
      double& slot = w.ext[static_cast<std::size_t>(a)][side];
      slot = w.clamp((1.0 - damping) * value + damping * slot);
    };
    if (lo != kNone) set(lo, 1, up != kNone ? serial(extrinsic, m_up[c]) : extrinsic);
    if (up != kNone) set(up, 0, lo != kNone ? serial(extrinsic, m_lo[c]) : extrinsic);
  }
  w.code_post[i] = std::move(marg.qubit);
}

// Ancilla assignment explaining `residual` (local rows). Returns false when
// some chain closed at both ends has odd parity; `odd` then marks those rows c.
bool attribute(const SectorProblem& sp, const BitVector& residual, const std::vector<double>& belief,
               BitVector& flips, BitVector* odd) {
  const std::size_t rows = sp.sheet_checks.rows();
  const std::size_t S = sp.sheets.size();
  bool consistent = true;
  for (std::size_t c = 0; c < rows; ++c) {
    const bool free_start = sp.sheets[0].check_ancillas[c][0] != kNone;
    int best_choice = -1;
    double best_score = 0.0;
    std::vector<std::pair<int, bool>> best_assign;
    for (int start = 0; start < (free_start ? 2 : 1); ++start) {
      std::vector<std::pair<int, bool>> assign;
      bool carry = start != 0;  // value of the lower ancilla of the current sheet
      if (free_start) assign.emplace_back(sp.sheets[0].check_ancillas[c][0], carry);
      bool ok = true;
      for (std::size_t i = 0; i < S; ++i) {
        const bool r = residual.get(sp.sheets[i].check_rows[c]);
        const int up = sp.sheets[i].check_ancillas[c][1];
        const bool lower = (i == 0 && !free_start) ? false : carry;
        const bool value = r != lower;
        if (up == kNone) {
          ok = !value;
        } else {
          assign.emplace_back(up, value);
          carry = value;
        }
      }
      if (!ok) continue;
      double score = 0.0;
      for (auto [a, v] : assign) {
        const double b = std::clamp(belief[static_cast<std::size_t>(a)], 1e-300, 1.0 - 1e-16);
        score += v ? std::log(b) : std::log1p(-b);
      }
      if (best_choice < 0 || score > best_score) {
        best_choice = start;
        best_score = score;
        best_assign = std::move(assign);
      }
    }
    if (best_choice < 0) {
      consistent = false;
      if (odd) odd->set(c);
      continue;
    }
    for (auto [a, v] : best_assign) {
      if (v) flips.set(sp.ancillas[static_cast<std::size_t>(a)].col);
    }
  }
  return consistent;
}

}  // namespace

SectorDecodeResult BpDecoder::decode(std::span<const double> priors, const BitVector& s) const {
  const SectorProblem& sp = sector_;
  if (priors.size() != sp.num_columns()) throw std::invalid_argument("BpDecoder::decode: one prior per column");
  if (s.size() != sp.h.rows()) throw std::invalid_argument("BpDecoder::decode: syndrome length mismatch");
  SectorDecodeResult out;
  out.correction = BitVector(sp.num_columns());
  out.ancilla_flips = BitVector(sp.num_columns());
  if (s.none()) {
    out.converged = true;
    out.iterations = 1;
    return out;
  }

  const std::size_t S = sp.sheets.size();
  Workspace w{sp, config_.epsilon, {}, {}, {}, {}, {}};
  for (const auto& a : sp.ancillas) w.anc_prior.push_back(w.clamp(priors[a.col]));
  w.ext.assign(sp.ancillas.size(), {0.5, 0.5});
  w.code_prior.resize(S);
  w.code_post.resize(S);
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t col : sp.sheets[i].code_cols) w.code_prior[i].push_back(priors[col]);
    w.sheet_syndrome.push_back(s.gather(sp.sheets[i].check_rows));
  }

  std::vector<double> previous = w.anc_prior;
  const SheetDecoder& dec = *sheet_decoder_;
  if (S == 1) {
    update_sheet(w, dec, 0, 0.0);
    out.converged = true;
    out.iterations = 1;
  } else {
    for (std::size_t it = 1; it <= config_.max_iters; ++it) {
      for (std::size_t i = 0; i < S; ++i) update_sheet(w, dec, i, config_.damping);
      for (std::size_t i = S - 1; i-- > 0;) update_sheet(w, dec, i, config_.damping);
      double change = 0.0;
      for (std::size_t a = 0; a < sp.ancillas.size(); ++a) {
        const double b = w.belief(a);
        change = std::max(change, std::abs(b - previous[a]));
        previous[a] = b;
      }
      out.iterations = it;
      if (change < config_.tol) {
        out.converged = true;
        break;
      }
    }
  }

  out.posterior.assign(sp.num_columns(), 0.0);
  std::vector<double> belief(sp.ancillas.size());
  for (std::size_t a = 0; a < sp.ancillas.size(); ++a) {
    belief[a] = w.belief(a);
    out.posterior[sp.ancillas[a].col] = belief[a];
  }
  for (std::size_t i = 0; i < S; ++i) {
    for (std::size_t j = 0; j < sp.sheets[i].code_cols.size(); ++j) {
      const std::size_t col = sp.sheets[i].code_cols[j];
      out.posterior[col] = w.code_post[i][j];
      if (w.code_post[i][j] > 0.5) out.correction.set(col);
    }
  }

  BitVector residual = s ^ sp.h.multiply(out.correction);
  BitVector odd(sp.sheet_checks.rows());
  if (!attribute(sp, residual, belief, out.ancilla_flips, &odd)) {
    // Flipping code qubit j on any sheet toggles the chain parity of every
    // check containing j, so solve sheet_checks · δ = odd over all code
    // columns, preferring the least reliable ones as pivots.
    std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (sheet, j)
    for (std::size_t i = 0; i < S; ++i) {
      for (std::size_t j = 0; j < sp.sheets[i].code_cols.size(); ++j) candidates.emplace_back(i, j);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
      return std::abs(w.code_post[a.first][a.second] - 0.5) < std::abs(w.code_post[b.first][b.second] - 0.5);
    });
    const BitMatrix cols_t = sp.sheet_checks.transpose();
    BitMatrix ordered(0, sp.sheet_checks.rows());
    for (auto [i, j] : candidates) ordered.append_row(cols_t[j]);
    const auto delta = solve(ordered.transpose(), odd);
    if (!delta) throw std::logic_error("BpDecoder: sheet checks are not full row rank");
    for (std::size_t idx : delta->support()) {
      const auto [i, j] = candidates[idx];
      out.correction.flip(sp.sheets[i].code_cols[j]);
    }
    out.repaired = true;
    out.ancilla_flips.clear();
    residual = s ^ sp.h.multiply(out.correction);
    if (!attribute(sp, residual, belief, out.ancilla_flips, nullptr)) {
      throw std::logic_error("BpDecoder: repaired correction is still inconsistent");
    }
  }
  return out;
}

}  // namespace fqec
