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

#include <array>
#include <cstddef>
#include <vector>

#include "fqec/foliation.hpp"
#include "fqec/gf2.hpp"

namespace fqec {

inline constexpr int kNone = -1;

/// One sheet of a sector, seen by its sheet decoder.
struct SectorSheet {
  std::size_t m = 0;                    // sheet index in the cluster
  std::vector<std::size_t> code_cols;   // local column of code qubit j
  std::vector<std::size_t> check_rows;  // local row of check c
  /// For check c, indices into SectorProblem::ancillas of the ancilla on
  /// sheet m-1 and on sheet m+1 (kNone on a boundary).
  std::vector<std::array<int, 2>> check_ancillas;
};

/// Ancilla a_c of an opposite-type sheet, shared by the checks P_{c,m-1}
/// and P_{c,m+1} of the two neighbouring sector sheets.
struct SectorAncilla {
  std::size_t col = 0;   // local column
  std::size_t m = 0;     // sheet holding the ancilla
  std::size_t row = 0;   // stabilizer row c
  int lower = kNone;     // index into SectorProblem::sheets of sheet m-1
  int upper = kNone;     // index of sheet m+1
};

/// Column-restricted problem for one sector. Local columns list the sector's
/// global qubits in increasing order; rows keep the order of the full check
/// and correlator matrices.
struct SectorProblem {
  Sector sector = Sector::kPrimal;
  std::vector<std::size_t> columns;      // local column -> global qubit
  std::vector<std::size_t> check_rows;   // local row -> global check row
  std::vector<std::size_t> lambda_rows;  // local logical -> global correlator row
  BitMatrix h;
  BitMatrix lambda;
  BitMatrix sheet_checks;  // bx of the sector's sheet code (shared by all its sheets)
  std::vector<SectorSheet> sheets;  // increasing m
  std::vector<SectorAncilla> ancillas;
  std::vector<bool> column_is_code;

  std::size_t num_columns() const { return columns.size(); }
  /// Global vector (qubits or check rows) restricted to this sector.
  BitVector restrict_qubits(const BitVector& global) const { return global.gather(columns); }
  BitVector restrict_checks(const BitVector& global) const { return global.gather(check_rows); }
  /// XORs a local column vector into a global qubit vector.
  void scatter_qubits(const BitVector& local, BitVector& global) const;
};

SectorProblem sector_problem(const FoliatedCluster& f, const CheckMatrix& checks,
                             const LogicalCorrelatorMatrix& lambda, Sector sector);

/// Both sectors, primal first.
std::array<SectorProblem, 2> sector_split(const FoliatedCluster& f, const CheckMatrix& checks,
                                          const LogicalCorrelatorMatrix& lambda);

}  // namespace fqec
