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

#include "fqec/cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace fqec {

std::string_view to_string(VertexKind kind) { return kind == VertexKind::kCode ? "code" : "ancilla"; }

std::size_t ClusterGraph::add_vertex(Vertex v) {
  vertices_.push_back(v);
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

bool ClusterGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

void ClusterGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= vertices_.size() || b >= vertices_.size()) throw std::invalid_argument("add_edge: vertex out of range");
  if (a == b) throw std::invalid_argument("add_edge: self-loop");
  if (has_edge(a, b)) throw std::invalid_argument("add_edge: parallel edge");
  for (auto [u, w] : {std::pair{a, b}, std::pair{b, a}}) {
    auto& nb = adjacency_[u];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), w), w);
  }
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

PauliString ClusterGraph::stabilizer(std::size_t v) const {
  const std::size_t n = vertices_.size();
  BitVector x(n), z(n);
  x.set(v);
  for (std::size_t u : adjacency_[v]) z.set(u);
  return PauliString(std::move(x), std::move(z));
}

ClusterGraph progenitor(const CssCode& code) {
  ClusterGraph g;
  for (std::size_t j = 0; j < code.n; ++j) g.add_vertex({VertexKind::kCode, j, std::nullopt});
  for (std::size_t a = 0; a < code.bz.rows(); ++a) {
    const std::size_t v = g.add_vertex({VertexKind::kAncilla, a, std::nullopt});
    for (std::size_t j : code.bz[a].support()) g.add_edge(v, j);
  }
  return g;
}

StabilizerTableau cluster_state_tableau(const ClusterGraph& g) {
  std::vector<PauliString> gens;
  gens.reserve(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) gens.push_back(g.stabilizer(v));
  return StabilizerTableau(std::move(gens));
}

bool SxProductReport::all_ok() const {
  return std::all_of(row_ok.begin(), row_ok.end(), [](bool b) { return b; });
}

SxProductReport sx_from_cluster_products(const CssCode& code, const ClusterGraph& g) {
  SxProductReport report;
  const std::size_t nv = g.num_vertices();
  for (const auto& row : code.bx) {
    bool ok = true;
    for (std::size_t v = code.n; v < nv && ok; ++v) {
      std::size_t meets = 0;
      for (std::size_t u : g.neighbors(v)) meets += (u < code.n && row.get(u)) ? 1 : 0;
      ok = meets % 2 == 0;
    }
    if (ok) {
      PauliString product(nv);
      for (std::size_t j : row.support()) product *= g.stabilizer(j);
      BitVector target(nv);
      for (std::size_t j : row.support()) target.set(j);
      ok = product == PauliString::x_type(target);
    }
    report.row_ok.push_back(ok);
  }
  return report;
}

AncillaMeasurement measure_out_ancillas(const ClusterGraph& g, const std::optional<std::vector<int>>& forced,
                                        StabilizerTableau::Rng* rng) {
  std::vector<std::size_t> ancillas;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex(v).kind == VertexKind::kAncilla) ancillas.push_back(v);
  }
  if (forced && forced->size() != ancillas.size()) {
    throw std::invalid_argument("measure_out_ancillas: need one forced outcome per ancilla");
  }
  AncillaMeasurement out{{}, cluster_state_tableau(g)};
  for (std::size_t i = 0; i < ancillas.size(); ++i) {
    std::optional<int> f;
    if (forced) f = (*forced)[i];
    out.outcomes.push_back(out.state.measure_x(ancillas[i], f, rng).value);
  }
  return out;
}

bool CodestateReport::matches(const std::vector<int>& ancilla_outcomes) const {
  if (ancilla_outcomes.size() != z_signs.size()) return false;
  for (std::size_t a = 0; a < z_signs.size(); ++a) {
    if (z_signs[a] != std::optional<int>(ancilla_outcomes[a])) return false;
  }
  auto all_plus = [](const std::vector<std::optional<int>>& v) {
    return std::all_of(v.begin(), v.end(), [](const std::optional<int>& s) { return s == std::optional<int>(1); });
  };
  return all_plus(x_signs) && all_plus(xbar_signs);
}

CodestateReport codestate_report(const CssCode& code, const AncillaMeasurement& m) {
  const std::size_t nv = m.state.num_qubits();
  auto embed = [&](const BitVector& v) {
    BitVector out(nv);
    for (std::size_t j : v.support()) out.set(j);
    return out;
  };
  const StabilizerGroup group = m.state.group();
  CodestateReport r;
  for (const auto& row : code.bz) r.z_signs.push_back(group.contains(PauliString::z_type(embed(row))));
  for (const auto& row : code.bx) r.x_signs.push_back(group.contains(PauliString::x_type(embed(row))));
  if (code.k() > 0) {
    for (const auto& row : logical_operators(code).xbars) {
      r.xbar_signs.push_back(group.contains(PauliString::x_type(embed(row))));
    }
  }
  return r;
}

}  // namespace fqec
