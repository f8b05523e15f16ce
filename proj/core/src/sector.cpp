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

#include "fqec/sector.hpp"

#include <map>
#include <stdexcept>

namespace fqec {

void SectorProblem::scatter_qubits(const BitVector& local, BitVector& global) const {
  if (local.size() != columns.size()) throw std::invalid_argument("scatter_qubits: length mismatch");
  for (std::size_t i : local.support()) global.flip(columns[i]);
}

SectorProblem sector_problem(const FoliatedCluster& f, const CheckMatrix& checks,
                             const LogicalCorrelatorMatrix& lambda, Sector sector) {
  SectorProblem sp;
  sp.sector = sector;
  std::vector<int> local(f.num_qubits(), kNone);
  for (std::size_t q = 0; q < f.num_qubits(); ++q) {
    if (f.sector_of(q) != sector) continue;
    local[q] = static_cast<int>(sp.columns.size());
    sp.columns.push_back(q);
    sp.column_is_code.push_back(f.is_code_qubit(q));
  }
  sp.h = BitMatrix(0, sp.columns.size());
  for (std::size_t r = 0; r < checks.h.rows(); ++r) {
    if (checks.centers[r].sector != sector) continue;
    sp.check_rows.push_back(r);
    sp.h.append_row(checks.h[r].gather(sp.columns));
  }
  sp.lambda = BitMatrix(0, sp.columns.size());
  for (std::size_t r = 0; r < lambda.lambda.rows(); ++r) {
    if (lambda.sectors[r] != sector) continue;
    sp.lambda_rows.push_back(r);
    sp.lambda.append_row(lambda.lambda[r].gather(sp.columns));
  }

  const std::size_t first = sector == Sector::kPrimal ? 1 : 2;
  const CssCode& sheet_code = f.sheet_code(first);
  sp.sheet_checks = sheet_code.bx.empty() ? BitMatrix(0, f.code().n) : sheet_code.bx;
  std::map<std::size_t, int> sheet_index;
  for (std::size_t m = first; m <= f.num_sheets(); m += 2) {
    sheet_index[m] = static_cast<int>(sp.sheets.size());
    SectorSheet sheet;
    sheet.m = m;
    for (std::size_t j = 0; j < f.code().n; ++j) sheet.code_cols.push_back(static_cast<std::size_t>(local[f.code_qubit(m, j)]));
    sp.sheets.push_back(std::move(sheet));
  }
  // Ancillas live on the sheets between (and, for the dual sector, outside)
  // the sector's sheets.
  std::map<std::pair<std::size_t, std::size_t>, int> ancilla_index;
  for (std::size_t m = 1; m <= f.num_sheets(); ++m) {
    if ((m % 2 == first % 2)) continue;
    for (std::size_t c = 0; c < sp.sheet_checks.rows(); ++c) {
      SectorAncilla a;
      a.col = static_cast<std::size_t>(local[f.ancilla(m, c)]);
      a.m = m;
      a.row = c;
      if (auto it = sheet_index.find(m - 1); it != sheet_index.end()) a.lower = it->second;
      if (auto it = sheet_index.find(m + 1); it != sheet_index.end()) a.upper = it->second;
      ancilla_index[{m, c}] = static_cast<int>(sp.ancillas.size());
      sp.ancillas.push_back(a);
    }
  }
  std::size_t row = 0;
  for (auto& sheet : sp.sheets) {
    for (std::size_t c = 0; c < sp.sheet_checks.rows(); ++c, ++row) {
      sheet.check_rows.push_back(row);
      std::array<int, 2> anc{kNone, kNone};
      if (auto it = ancilla_index.find({sheet.m - 1, c}); it != ancilla_index.end()) anc[0] = it->second;
      if (auto it = ancilla_index.find({sheet.m + 1, c}); it != ancilla_index.end()) anc[1] = it->second;
      sheet.check_ancillas.push_back(anc);
    }
  }
  return sp;
}

std::array<SectorProblem, 2> sector_split(const FoliatedCluster& f, const CheckMatrix& checks,
                                          const LogicalCorrelatorMatrix& lambda) {
  return {sector_problem(f, checks, lambda, Sector::kPrimal), sector_problem(f, checks, lambda, Sector::kDual)};
}

}  // namespace fqec
