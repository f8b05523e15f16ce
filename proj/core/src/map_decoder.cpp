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

#include "fqec/map_decoder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqec {

namespace {

struct ClassStat {
  std::uint32_t cls = 0;
  double total = 0.0;
  double best = -1.0;
  std::uint32_t representative = 0;
};

std::vector<std::uint64_t> column_masks(const BitMatrix& m, std::size_t cols) {
  std::vector<std::uint64_t> out(cols, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t j : m[r].support()) out[j] |= std::uint64_t{1} << r;
  }
  return out;
}

}  // namespace

MapOracle::MapOracle(const BitMatrix& h, const BitMatrix& lambda, std::span<const double> priors)
    : cols_(priors.size()), rows_(h.rows()) {
  if ((!h.empty() && h.cols() != cols_) || (!lambda.empty() && lambda.cols() != cols_)) {
    throw std::invalid_argument("MapOracle: matrices and priors disagree on the column count");
  }
  if (cols_ > kMaxColumns) {
    throw CapacityError("MapOracle: " + std::to_string(cols_) + " columns exceeds the cap of " +
                        std::to_string(kMaxColumns));
  }
  if (h.rows() > 64 || lambda.rows() > 32) throw CapacityError("MapOracle: too many checks or logicals");
  const auto syn_cols = column_masks(h, cols_);
  const auto log_cols = column_masks(lambda, cols_);
  std::vector<double> ratio(cols_);
  double base = 1.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    const double p = std::clamp(priors[j], 0.0, 1.0);
    base *= 1.0 - p;
    ratio[j] = p / (1.0 - p);
  }
  if (base == 0.0) throw std::invalid_argument("MapOracle: priors must be below 1");

  std::unordered_map<std::uint64_t, std::vector<ClassStat>> stats;
  const std::uint64_t count = std::uint64_t{1} << cols_;
  std::uint64_t syn = 0;
  std::uint32_t cls = 0;
  for (std::uint64_t g = 0; g < count; ++g) {
    const auto e = static_cast<std::uint32_t>(g ^ (g >> 1));
    if (g != 0) {
      const auto j = static_cast<std::size_t>(std::countr_zero(g));
      syn ^= syn_cols[j];
      cls ^= static_cast<std::uint32_t>(log_cols[j]);
    }
    double w = base;
    for (std::uint32_t bits = e; bits != 0; bits &= bits - 1) w *= ratio[static_cast<std::size_t>(std::countr_zero(bits))];
    auto& entry = stats[syn];
    auto it = std::find_if(entry.begin(), entry.end(), [&](const ClassStat& c) { return c.cls == cls; });
    if (it == entry.end()) {
      entry.push_back({cls, 0.0, -1.0, 0});
      it = entry.end() - 1;
    }
    it->total += w;
    // Ties go to the lexicographically smaller pattern for determinism.
    if (w > it->best || (w == it->best && e < it->representative)) {
      it->best = w;
      it->representative = e;
    }
  }
  table_.reserve(stats.size());
  for (auto& [s, entry] : stats) {
    const auto best = std::max_element(entry.begin(), entry.end(), [](const ClassStat& a, const ClassStat& b) {
      return a.total < b.total || (a.total == b.total && a.cls > b.cls);
    });
    double all = 0.0;
    for (const auto& c : entry) all += c.total;
    failure_probability_ += all - best->total;
    table_.emplace(s, best->representative);
  }
}

namespace {

std::vector<double> iid(std::size_t n, double p) { return std::vector<double>(n, p); }

}  // namespace

MapOracle::MapOracle(const SectorProblem& sector, double p)
    : MapOracle(sector.h, sector.lambda, iid(sector.num_columns(), p)) {}

BitVector MapOracle::decode(const BitVector& s) const {
  if (s.size() != rows_) throw std::invalid_argument("MapOracle::decode: syndrome length mismatch");
  std::uint64_t key = 0;
  for (std::size_t c : s.support()) key |= std::uint64_t{1} << c;
  const auto it = table_.find(key);
  if (it == table_.end()) throw std::invalid_argument("MapOracle::decode: syndrome not produced by any pattern");
  BitVector out(cols_);
  for (std::uint32_t bits = it->second; bits != 0; bits &= bits - 1) {
    out.set(static_cast<std::size_t>(std::countr_zero(bits)));
  }
  return out;
}

}  // namespace fqec
