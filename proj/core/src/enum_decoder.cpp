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
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace fqec {

EnumerationSheetDecoder::EnumerationSheetDecoder(BitMatrix checks) : SheetDecoder(std::move(checks)) {
  if (num_qubits() > kMaxQubits) {
    throw CapacityError("EnumerationSheetDecoder: " + std::to_string(num_qubits()) + " qubits exceeds the cap of " +
                        std::to_string(kMaxQubits));
  }
  if (num_checks() > 64) throw CapacityError("EnumerationSheetDecoder: more than 64 checks");
  column_masks_.assign(num_qubits(), 0);
  for (std::size_t c = 0; c < num_checks(); ++c) {
    for (std::size_t j : this->checks()[c].support()) column_masks_[j] |= std::uint64_t{1} << c;
  }
}

SheetMarginals EnumerationSheetDecoder::compute(std::span<const double> p, std::span<const double> q,
                                                const BitVector& syndrome) const {
  const std::size_t n = num_qubits();
  const std::size_t r = num_checks();
  std::vector<double> llr_e(n), llr_f(r);
  for (std::size_t j = 0; j < n; ++j) llr_e[j] = std::log(p[j] / (1.0 - p[j]));
  for (std::size_t c = 0; c < r; ++c) llr_f[c] = std::log(q[c] / (1.0 - q[c]));
  std::uint64_t s_mask = 0;
  for (std::size_t c : syndrome.support()) s_mask |= std::uint64_t{1} << c;

  auto flip_term = [&](std::uint64_t f) {
    double t = 0.0;
    for (; f != 0; f &= f - 1) t += llr_f[static_cast<std::size_t>(std::countr_zero(f))];
    return t;
  };

  // Gray-code walk: pattern g ^ (g >> 1) differs from its predecessor in bit ctz(g).
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> logw(count);
  double best = -std::numeric_limits<double>::infinity();
  {
    std::uint64_t sigma = 0;
    double le = 0.0;
    for (std::uint64_t g = 0; g < count; ++g) {
      if (g != 0) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(g));
        const bool now_set = ((g ^ (g >> 1)) >> j) & 1;
        sigma ^= column_masks_[j];
        le += now_set ? llr_e[j] : -llr_e[j];
      }
      logw[g] = le + flip_term(sigma ^ s_mask);
      best = std::max(best, logw[g]);
    }
  }
  SheetMarginals out{std::vector<double>(n, 0.0), std::vector<double>(r, 0.0)};
  double total = 0.0;
  std::uint64_t sigma = 0;
  for (std::uint64_t g = 0; g < count; ++g) {
    if (g != 0) sigma ^= column_masks_[static_cast<std::size_t>(std::countr_zero(g))];
    const double w = std::exp(logw[g] - best);
    total += w;
    for (std::uint64_t e = g ^ (g >> 1); e != 0; e &= e - 1) out.qubit[static_cast<std::size_t>(std::countr_zero(e))] += w;
    for (std::uint64_t f = sigma ^ s_mask; f != 0; f &= f - 1) out.flip[static_cast<std::size_t>(std::countr_zero(f))] += w;
  }
  for (auto& v : out.qubit) v /= total;
  for (auto& v : out.flip) v /= total;
  return out;
}

}  // namespace fqec
