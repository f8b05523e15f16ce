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

#include "fqec/sheet_decoder.hpp"

#include <algorithm>
#include <string>

namespace fqec {

namespace {

struct Span {
  std::size_t first = 0;
  std::size_t last = 0;
  bool empty = true;
};

std::vector<Span> check_spans(const BitMatrix& checks) {
  std::vector<Span> spans(checks.rows());
  for (std::size_t c = 0; c < checks.rows(); ++c) {
    const auto support = checks[c].support();
    if (support.empty()) continue;
    spans[c] = {support.front(), support.back(), false};
  }
  return spans;
}

}  // namespace

std::size_t trellis_width(const BitMatrix& checks) {
  const auto spans = check_spans(checks);
  std::size_t width = 0;
  for (std::size_t t = 0; t < checks.cols(); ++t) {
    std::size_t open = 0;
    for (const auto& s : spans) open += (!s.empty && s.first <= t && s.last >= t) ? 1 : 0;
    width = std::max(width, open);
  }
  return width;
}

TrellisSheetDecoder::TrellisSheetDecoder(BitMatrix checks, std::size_t max_states)
    : SheetDecoder(std::move(checks)) {
  const auto spans = check_spans(this->checks());
  width_ = trellis_width(this->checks());
  if (width_ >= 63 || (std::size_t{1} << width_) > max_states) {
    throw CapacityError("TrellisSheetDecoder: trellis width " + std::to_string(width_) +
                        " exceeds the state cap of " + std::to_string(max_states));
  }
  for (std::size_t c = 0; c < spans.size(); ++c) {
    if (spans[c].empty) empty_checks_.push_back(c);
  }
  std::vector<std::size_t> open;  // check ids, in state-bit order
  for (std::size_t t = 0; t < num_qubits(); ++t) {
    Section sec;
    sec.in_bits = open.size();
    std::vector<std::size_t> ext = open;
    for (std::size_t c = 0; c < spans.size(); ++c) {
      if (!spans[c].empty && spans[c].first == t) ext.push_back(c);
    }
    std::vector<std::size_t> next;
    for (std::size_t b = 0; b < ext.size(); ++b) {
      const std::size_t c = ext[b];
      if (this->checks()[c].get(t)) sec.toggle |= std::uint64_t{1} << b;
      if (spans[c].last == t) {
        sec.closing.push_back(c);
        sec.closing_bits.push_back(b);
      } else {
        sec.kept_bits.push_back(b);
        next.push_back(c);
      }
    }
    sections_.push_back(std::move(sec));
    open = std::move(next);
  }
}

SheetMarginals TrellisSheetDecoder::compute(std::span<const double> p, std::span<const double> q,
                                            const BitVector& syndrome) const {
  const std::size_t n = num_qubits();
  SheetMarginals out{std::vector<double>(n, 0.0), std::vector<double>(num_checks(), 0.0)};
  for (std::size_t c : empty_checks_) out.flip[c] = syndrome.get(c) ? 1.0 : 0.0;
  if (n == 0) return out;

  struct Branch {
    std::size_t out_state;
    double weight;                 // prior of e_j times closing-check factors
    std::uint64_t closing_flips;   // bit i set when closing check i is flipped
  };
  // branch(t, s, e) for in-state s at section t.
  auto branch = [&](std::size_t t, std::uint64_t s, int e) {
    const Section& sec = sections_[t];
    const std::uint64_t ext = e ? (s ^ sec.toggle) : s;
    Branch b{0, e ? p[t] : 1.0 - p[t], 0};
    for (std::size_t i = 0; i < sec.closing.size(); ++i) {
      const std::size_t c = sec.closing[i];
      const bool flip = (((ext >> sec.closing_bits[i]) & 1) != 0) != syndrome.get(c);
      b.weight *= flip ? q[c] : 1.0 - q[c];
      if (flip) b.closing_flips |= std::uint64_t{1} << i;
    }
    for (std::size_t k = 0; k < sec.kept_bits.size(); ++k) {
      b.out_state |= ((ext >> sec.kept_bits[k]) & 1) << k;
    }
    return b;
  };
  auto states_in = [&](std::size_t t) { return std::size_t{1} << sections_[t].in_bits; };
  auto normalize = [](std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    if (sum > 0.0) {
      for (double& x : v) x /= sum;
    }
  };

  std::vector<std::vector<double>> alpha(n + 1), beta(n + 1);
  alpha[0] = {1.0};
  for (std::size_t t = 0; t < n; ++t) {
    alpha[t + 1].assign(t + 1 < n ? states_in(t + 1) : 1, 0.0);
    for (std::uint64_t s = 0; s < states_in(t); ++s) {
      if (alpha[t][s] == 0.0) continue;
      for (int e = 0; e < 2; ++e) {
        const Branch b = branch(t, s, e);
        alpha[t + 1][b.out_state] += alpha[t][s] * b.weight;
      }
    }
    normalize(alpha[t + 1]);
  }
  beta[n] = {1.0};
  for (std::size_t t = n; t-- > 0;) {
    beta[t].assign(states_in(t), 0.0);
    for (std::uint64_t s = 0; s < states_in(t); ++s) {
      for (int e = 0; e < 2; ++e) {
        const Branch b = branch(t, s, e);
        beta[t][s] += b.weight * beta[t + 1][b.out_state];
      }
    }
    normalize(beta[t]);
  }
  for (std::size_t t = 0; t < n; ++t) {
    const Section& sec = sections_[t];
    double total = 0.0, qubit = 0.0;
    std::vector<double> flips(sec.closing.size(), 0.0);
    for (std::uint64_t s = 0; s < states_in(t); ++s) {
      if (alpha[t][s] == 0.0) continue;
      for (int e = 0; e < 2; ++e) {
        const Branch b = branch(t, s, e);
        const double w = alpha[t][s] * b.weight * beta[t + 1][b.out_state];
        total += w;
        if (e) qubit += w;
        for (std::size_t i = 0; i < flips.size(); ++i) {
          if ((b.closing_flips >> i) & 1) flips[i] += w;
        }
      }
    }
    out.qubit[t] = qubit / total;
    for (std::size_t i = 0; i < flips.size(); ++i) out.flip[sec.closing[i]] = flips[i] / total;
  }
  return out;
}

}  // namespace fqec
