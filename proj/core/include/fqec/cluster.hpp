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
#include <string>
#include <utility>
#include <vector>

#include "fqec/css_code.hpp"
#include "fqec/tableau.hpp"

namespace fqec {

enum class VertexKind { kCode, kAncilla };

std::string_view to_string(VertexKind kind);

struct Vertex {
  VertexKind kind = VertexKind::kCode;
  std::size_t label = 0;             // code-qubit index, or S_Z row index for ancillas
  std::optional<std::size_t> sheet;  // set for vertices of a foliated cluster

  bool operator==(const Vertex&) const = default;
};

/// Simple undirected graph; vertex v's cluster stabilizer is C_v = X_v Z_{N(v)}.
class ClusterGraph {
 public:
  std::size_t add_vertex(Vertex v);
  /// Throws std::invalid_argument on self-loops, parallel edges, or bad indices.
  void add_edge(std::size_t a, std::size_t b);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Edges in insertion order, each stored as (smaller, larger).
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Sorted neighbourhood N(v).
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t a, std::size_t b) const;

  /// C_v = X_v Z_{N(v)} with sign +1.
  PauliString stabilizer(std::size_t v) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Tanner graph of S_Z: code vertices 0..n-1, then one ancilla per bz row
/// (vertex n + a), with edge (a, j) iff bz[a][j] = 1.
ClusterGraph progenitor(const CssCode& code);

/// Cluster state: one +C_v generator per vertex.
StabilizerTableau cluster_state_tableau(const ClusterGraph& g);

struct SxProductReport {
  std::vector<bool> row_ok;  // one entry per bx row
  bool all_ok() const;
};

/// For each X stabilizer c, checks that every ancilla meets supp(c) an even
/// number of times and that the product of C_j over j in c equals +X_c.
SxProductReport sx_from_cluster_products(const CssCode& code, const ClusterGraph& g);

struct AncillaMeasurement {
  std::vector<int> outcomes;  // ±1 per ancilla, in bz row order
  StabilizerTableau state;    // full register; ancillas left in X eigenstates
};

/// Measures every ancilla of a progenitor graph in X. When `forced` is given
/// it must hold one ±1 per ancilla; otherwise outcomes are drawn from `rng`.
AncillaMeasurement measure_out_ancillas(const ClusterGraph& g, const std::optional<std::vector<int>>& forced,
                                        StabilizerTableau::Rng* rng = nullptr);

struct CodestateReport {
  std::vector<std::optional<int>> z_signs;     // per bz row
  std::vector<std::optional<int>> x_signs;     // per bx row
  std::vector<std::optional<int>> xbar_signs;  // per logical X
  /// S_Z signs equal the ancilla outcomes and every X operator has sign +1.
  bool matches(const std::vector<int>& ancilla_outcomes) const;
};

/// Signs of the code's stabilizers and logical X operators (embedded on the
/// code qubits of the progenitor register) in the post-measurement state.
CodestateReport codestate_report(const CssCode& code, const AncillaMeasurement& m);

}  // namespace fqec
