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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fqec/cluster.hpp"
#include "fqec/css_code.hpp"
#include "fqec/tableau.hpp"

namespace fqec {

enum class Sector { kPrimal, kDual };

std::string_view to_string(Sector s);

/// 2L+1 clusterized sheets, m = 1..2L+1. Odd sheets hold progenitor(code),
/// even sheets progenitor(dual(code)); code qubit j of sheet m is bonded to
/// code qubit j of sheets m±1.
///
/// Global qubit ids run sheet by sheet; within a sheet the code qubits come
/// first, then the ancillas in S_Z row order of that sheet's code. Ancillas of
/// odd sheets are indexed by bz rows and those of even sheets by bx rows.
class FoliatedCluster {
 public:
  FoliatedCluster(CssCode code, std::size_t layers);

  const CssCode& code() const { return code_; }
  const CssCode& dual_code() const { return dual_; }
  std::size_t layers() const { return layers_; }
  std::size_t num_sheets() const { return 2 * layers_ + 1; }
  std::size_t num_qubits() const { return graph_.num_vertices(); }

  static bool is_primal(std::size_t m) { return m % 2 == 1; }
  const CssCode& sheet_code(std::size_t m) const { return is_primal(m) ? code_ : dual_; }
  /// Per-sheet progenitor graph (local vertex ids).
  const ClusterGraph& sheet(std::size_t m) const { return sheets_[m - 1]; }
  std::size_t offset(std::size_t m) const { return offsets_[m - 1]; }
  std::size_t sheet_size(std::size_t m) const { return sheets_[m - 1].num_vertices(); }
  std::size_t num_ancillas(std::size_t m) const { return sheet_code(m).bz.rows(); }

  std::size_t code_qubit(std::size_t m, std::size_t j) const { return offset(m) + j; }
  std::size_t ancilla(std::size_t m, std::size_t a) const { return offset(m) + code_.n + a; }
  /// Vertex record (kind, label, sheet) of a global qubit id.
  const Vertex& locate(std::size_t q) const { return graph_.vertex(q); }
  bool is_code_qubit(std::size_t q) const { return locate(q).kind == VertexKind::kCode; }
  Sector sector_of(std::size_t q) const;

  /// Whole foliated cluster, sheets plus inter-sheet bonds.
  const ClusterGraph& graph() const { return graph_; }
  /// Inter-sheet bonds (global ids), in order of sheet pair then code qubit.
  const std::vector<std::pair<std::size_t, std::size_t>>& inter_edges() const { return inter_edges_; }

 private:
  CssCode code_;
  CssCode dual_;
  std::size_t layers_;
  std::vector<ClusterGraph> sheets_;
  std::vector<std::size_t> offsets_;
  ClusterGraph graph_;
  std::vector<std::pair<std::size_t, std::size_t>> inter_edges_;
};

/// Throws CodeError for an invalid code and std::invalid_argument for L = 0.
FoliatedCluster foliate(const CssCode& code, std::size_t layers);

struct CheckCenter {
  std::size_t sheet = 0;  // m
  std::size_t row = 0;    // index into the sheet code's bx
  Sector sector = Sector::kPrimal;
  bool operator==(const CheckCenter&) const = default;
};

/// Parity checks P_{c,m} = X_{a_c,m-1} X_{c,m} X_{a_c,m+1}, one per X
/// stabilizer of each sheet's code, with the missing ancilla term dropped on
/// the boundary sheets. Rows are ordered by sheet, then stabilizer row.
struct CheckMatrix {
  BitMatrix h;
  std::vector<CheckCenter> centers;
};

CheckMatrix parity_checks(const FoliatedCluster& f);

/// Pure-X logical correlators on code qubits. The first k rows are primal
/// (x̄ on every odd sheet), the last k dual (the dual code's x̄ on every even
/// sheet).
struct LogicalCorrelatorMatrix {
  BitMatrix lambda;
  std::vector<Sector> sectors;
  std::size_t k() const { return lambda.rows() / 2; }
};

/// Uses logical X representatives of the code and of its dual, each shifted
/// by X stabilizers so that it also lies in ker(bx) and hence has even
/// overlap with every check. Throws CodeError if no such shift exists.
LogicalCorrelatorMatrix logical_correlators(const FoliatedCluster& f);
/// Same, from explicit representatives. Each row must be in ker(bz) ∩ ker(bx)
/// of its own code (primal: code, dual: dual code); throws CodeError otherwise.
LogicalCorrelatorMatrix logical_correlators(const FoliatedCluster& f, const BitMatrix& primal_xbars,
                                            const BitMatrix& dual_xbars);

/// Logical X representatives of `code` lying in ker(bz) ∩ ker(bx).
BitMatrix check_free_logicals(const CssCode& code);

/// Check-free representatives re-chosen for a sheet whose violated checks can
/// each be absorbed by a single boundary ancilla. Each row is shifted within
/// rowspace(bx) ∩ ker(bx) to maximise the lightest |e| + |bx e| over sheet
/// errors e that flip it, searched up to `w_cap`; ties keep the
/// check_free_logicals row. Used for the dual correlators.
BitMatrix boundary_safe_logicals(const CssCode& code, std::size_t w_cap = 3);

struct FoliatedDistance {
  bool exact = false;
  std::size_t value = 0;          // d when exact, else w_max + 1
  std::size_t primal_weight = 0;  // 0 if none found within the cap
  std::size_t dual_weight = 0;
  std::string describe() const;
};

/// Lightest Z error r with h r = 0 and lambda r ≠ 0, searched per sector.
FoliatedDistance foliated_distance(const FoliatedCluster& f, std::size_t w_max);

/// The whole foliated cluster state, one +C_v per global qubit.
StabilizerTableau foliated_cluster_tableau(const FoliatedCluster& f);

/// Qubits measured in the Bell mode: everything except the code qubits of
/// sheets 1 and 2L+1.
std::vector<std::size_t> bell_measured_qubits(const FoliatedCluster& f);

struct OperatorCheck {
  int expected = +1;          // sign predicted from the measurement outcomes
  std::optional<int> actual;  // sign found in the residual group, if a member
  bool ok() const { return actual.has_value() && *actual == expected; }
};

struct BellPairReport {
  std::vector<int> outcomes;  // per global qubit; 0 where not measured
  std::vector<OperatorCheck> stabilizers;  // S_Z then S_X, sheet 1 then sheet 2L+1
  std::vector<OperatorCheck> xx;           // X̄_i ⊗ X̄_i per logical
  std::vector<OperatorCheck> zz;           // Z̄_i ⊗ Z̄_i per logical
  bool ok() const;
};

/// Measures X on bell_measured_qubits in increasing order, taking random
/// outcomes from `forced` (indexed by global qubit id, ±1) when given and
/// otherwise from `rng`. Verifies that the boundary code qubits are left
/// stabilized by both sheets' S_Z and S_X and by X̄X̄ and Z̄Z̄, with signs given
/// by products of outcomes.
BellPairReport bell_pair_reduction(const FoliatedCluster& f, const std::optional<std::vector<int>>& forced,
                                   StabilizerTableau::Rng* rng = nullptr);

}  // namespace fqec
