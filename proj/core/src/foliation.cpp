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

#include "fqec/foliation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace fqec {

std::string_view to_string(Sector s) { return s == Sector::kPrimal ? "primal" : "dual"; }

FoliatedCluster::FoliatedCluster(CssCode code, std::size_t layers)
    : code_(std::move(code)), dual_(dual(code_)), layers_(layers) {
  if (layers_ == 0) throw std::invalid_argument("foliate: need at least one layer");
  const ValidationReport report = validate(code_);
  if (!report.ok()) throw CodeError("foliate: invalid code: " + report.describe());
  const ClusterGraph primal = progenitor(code_);
  const ClusterGraph dual_sheet = progenitor(dual_);
  for (std::size_t m = 1; m <= num_sheets(); ++m) {
    const ClusterGraph& g = is_primal(m) ? primal : dual_sheet;
    offsets_.push_back(graph_.num_vertices());
    for (const Vertex& v : g.vertices()) graph_.add_vertex({v.kind, v.label, m});
    for (auto [a, b] : g.edges()) graph_.add_edge(offsets_.back() + a, offsets_.back() + b);
    sheets_.push_back(g);
  }
  for (std::size_t m = 1; m < num_sheets(); ++m) {
    for (std::size_t j = 0; j < code_.n; ++j) {
      graph_.add_edge(code_qubit(m, j), code_qubit(m + 1, j));
      inter_edges_.emplace_back(code_qubit(m, j), code_qubit(m + 1, j));
    }
  }
}

Sector FoliatedCluster::sector_of(std::size_t q) const {
  const Vertex& v = locate(q);
  const bool primal_sheet = is_primal(*v.sheet);
  return (v.kind == VertexKind::kCode) == primal_sheet ? Sector::kPrimal : Sector::kDual;
}

FoliatedCluster foliate(const CssCode& code, std::size_t layers) { return FoliatedCluster(code, layers); }

CheckMatrix parity_checks(const FoliatedCluster& f) {
  CheckMatrix out;
  out.h = BitMatrix(0, f.num_qubits());
  for (std::size_t m = 1; m <= f.num_sheets(); ++m) {
    const BitMatrix& bx = f.sheet_code(m).bx;
    for (std::size_t c = 0; c < bx.rows(); ++c) {
      BitVector row(f.num_qubits());
      for (std::size_t j : bx[c].support()) row.set(f.code_qubit(m, j));
      if (m > 1) row.set(f.ancilla(m - 1, c));
      if (m < f.num_sheets()) row.set(f.ancilla(m + 1, c));
      out.h.append_row(std::move(row));
      out.centers.push_back({m, c, FoliatedCluster::is_primal(m) ? Sector::kPrimal : Sector::kDual});
    }
  }
  return out;
}

BitMatrix check_free_logicals(const CssCode& code) {
  const BitMatrix xbars = logical_operators(code).xbars;
  if (code.bx.empty()) return xbars;
  const BitMatrix gram = multiply_transpose(code.bx, code.bx);
  BitMatrix out(0, code.n);
  for (const auto& x : xbars) {
    auto y = solve(gram, code.bx.multiply(x));
    if (!y) throw CodeError("logical_correlators: no logical X representative of '" + code.label + "' lies in ker(bx)");
    BitVector shifted = x;
    shifted ^= code.bx.combine_rows(*y);
    out.append_row(std::move(shifted));
  }
  return out;
}

namespace {

// Lightest |e| + |checks e| over e with x·e = 1 and |e| ≤ cap, or cap + 1.
std::size_t boundary_chain_weight(const std::vector<std::uint64_t>& cols, const BitVector& x, std::size_t cap) {
  const std::size_t n = cols.size();
  std::size_t best = cap + 1;
  std::vector<std::size_t> idx;
  // Depth-first over increasing index sets, carrying syndrome and parity.
  auto visit = [&](auto&& self, std::size_t start, std::uint64_t s, bool parity) -> void {
    const std::size_t w = idx.size();
    if (w > 0 && parity) best = std::min(best, w + static_cast<std::size_t>(std::popcount(s)));
    if (w + 1 >= best || w == cap) return;
    for (std::size_t j = start; j < n; ++j) {
      idx.push_back(j);
      self(self, j + 1, s ^ cols[j], parity != x.get(j));
      idx.pop_back();
    }
  };
  visit(visit, 0, 0, false);
  return best;
}

}  // namespace

BitMatrix boundary_safe_logicals(const CssCode& code, std::size_t w_cap) {
  BitMatrix xbars = check_free_logicals(code);
  if (code.bx.empty() || code.bx.rows() > 64) return xbars;
  const BitMatrix shifts_y = nullspace(multiply_transpose(code.bx, code.bx));
  constexpr std::size_t kMaxShiftDim = 10;
  if (shifts_y.empty() || shifts_y.rows() > kMaxShiftDim) return xbars;
  std::vector<BitVector> shifts;
  for (const auto& y : shifts_y) shifts.push_back(code.bx.combine_rows(y));
  std::vector<std::uint64_t> cols(code.n, 0);
  for (std::size_t r = 0; r < code.bx.rows(); ++r) {
    for (std::size_t j : code.bx[r].support()) cols[j] |= std::uint64_t{1} << r;
  }
  for (std::size_t i_row = 0; i_row < xbars.rows(); ++i_row) {
    BitVector& x = xbars.row(i_row);
    BitVector best = x;
    std::size_t best_score = boundary_chain_weight(cols, x, w_cap);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << shifts.size()) && best_score <= w_cap; ++mask) {
      BitVector cand = x;
      for (std::size_t i = 0; i < shifts.size(); ++i) {
        if ((mask >> i) & 1) cand ^= shifts[i];
      }
      const std::size_t score = boundary_chain_weight(cols, cand, w_cap);
      if (score > best_score) {
        best_score = score;
        best = std::move(cand);
      }
    }
    x = std::move(best);
  }
  return xbars;
}

namespace {

void require_check_free(const CssCode& code, const BitMatrix& xbars, const char* which) {
  for (const auto& x : xbars) {
    if (x.size() != code.n) throw CodeError(fmt::format("logical_correlators: {} row has wrong length", which));
    if (code.bz.multiply(x).any() || code.bx.multiply(x).any()) {
      throw CodeError(fmt::format("logical_correlators: {} representative must lie in ker(bz) and ker(bx)", which));
    }
  }
}

}  // namespace

LogicalCorrelatorMatrix logical_correlators(const FoliatedCluster& f, const BitMatrix& primal_xbars,
                                            const BitMatrix& dual_xbars) {
  require_check_free(f.code(), primal_xbars, "primal");
  require_check_free(f.dual_code(), dual_xbars, "dual");
  LogicalCorrelatorMatrix out;
  out.lambda = BitMatrix(0, f.num_qubits());
  auto add_rows = [&](const BitMatrix& xbars, std::size_t first_sheet, Sector sector) {
    for (const auto& x : xbars) {
      BitVector row(f.num_qubits());
      for (std::size_t m = first_sheet; m <= f.num_sheets(); m += 2) {
        for (std::size_t j : x.support()) row.set(f.code_qubit(m, j));
      }
      out.lambda.append_row(std::move(row));
      out.sectors.push_back(sector);
    }
  };
  add_rows(primal_xbars, 1, Sector::kPrimal);
  add_rows(dual_xbars, 2, Sector::kDual);
  return out;
}

LogicalCorrelatorMatrix logical_correlators(const FoliatedCluster& f) {
  return logical_correlators(f, check_free_logicals(f.code()), boundary_safe_logicals(f.dual_code()));
}

std::string FoliatedDistance::describe() const {
  return exact ? fmt::format("d = {}", value) : fmt::format("d >= {}", value);
}

FoliatedDistance foliated_distance(const FoliatedCluster& f, std::size_t w_max) {
  if (w_max < 1) throw std::invalid_argument("foliated_distance: w_max must be at least 1");
  const CheckMatrix checks = parity_checks(f);
  const LogicalCorrelatorMatrix lam = logical_correlators(f);
  FoliatedDistance out;
  for (Sector sector : {Sector::kPrimal, Sector::kDual}) {
    std::vector<std::size_t> cols;
    for (std::size_t q = 0; q < f.num_qubits(); ++q) {
      if (f.sector_of(q) == sector) cols.push_back(q);
    }
    BitMatrix h(0, cols.size()), l(0, cols.size());
    for (std::size_t r = 0; r < checks.h.rows(); ++r) {
      if (checks.centers[r].sector == sector) h.append_row(checks.h[r].gather(cols));
    }
    for (std::size_t r = 0; r < lam.lambda.rows(); ++r) {
      if (lam.sectors[r] == sector) l.append_row(lam.lambda[r].gather(cols));
    }
    const std::size_t w = lightest_undetected(h, l, w_max);
    (sector == Sector::kPrimal ? out.primal_weight : out.dual_weight) = w;
  }
  std::size_t best = 0;
  for (std::size_t w : {out.primal_weight, out.dual_weight}) {
    if (w != 0 && (best == 0 || w < best)) best = w;
  }
  out.exact = best != 0;
  out.value = out.exact ? best : w_max + 1;
  return out;
}

StabilizerTableau foliated_cluster_tableau(const FoliatedCluster& f) { return cluster_state_tableau(f.graph()); }

std::vector<std::size_t> bell_measured_qubits(const FoliatedCluster& f) {
  std::vector<std::size_t> out;
  const std::size_t last = f.num_sheets();
  for (std::size_t q = 0; q < f.num_qubits(); ++q) {
    const Vertex& v = f.locate(q);
    if (v.kind == VertexKind::kCode && (*v.sheet == 1 || *v.sheet == last)) continue;
    out.push_back(q);
  }
  return out;
}

bool BellPairReport::ok() const {
  auto all_ok = [](const std::vector<OperatorCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const OperatorCheck& c) { return c.ok(); });
  };
  return all_ok(stabilizers) && all_ok(xx) && all_ok(zz);
}

BellPairReport bell_pair_reduction(const FoliatedCluster& f, const std::optional<std::vector<int>>& forced,
                                   StabilizerTableau::Rng* rng) {
  if (forced && forced->size() != f.num_qubits()) {
    throw std::invalid_argument("bell_pair_reduction: forced outcomes must cover every qubit");
  }
  StabilizerTableau state = foliated_cluster_tableau(f);
  BellPairReport report;
  report.outcomes.assign(f.num_qubits(), 0);
  for (std::size_t q : bell_measured_qubits(f)) {
    std::optional<int> fo;
    if (forced) fo = (*forced)[q];
    report.outcomes[q] = state.measure_x(q, fo, rng).value;
  }
  const StabilizerGroup group = state.group();
  const std::size_t N = f.num_qubits();
  const std::size_t last = f.num_sheets();
  const std::vector<int>& o = report.outcomes;
  auto on_sheet = [&](std::size_t m, const BitVector& v) {
    BitVector out(N);
    for (std::size_t j : v.support()) out.set(f.code_qubit(m, j));
    return out;
  };
  auto check = [&](const PauliString& p, int expected) { return OperatorCheck{expected, group.contains(p)}; };

  const CssCode& code = f.code();
  for (std::size_t m : {std::size_t{1}, last}) {
    for (std::size_t b = 0; b < code.bz.rows(); ++b) {
      report.stabilizers.push_back(check(PauliString::z_type(on_sheet(m, code.bz[b])), o[f.ancilla(m, b)]));
    }
    const std::size_t neighbour = m == 1 ? 2 : last - 1;
    for (std::size_t c = 0; c < code.bx.rows(); ++c) {
      report.stabilizers.push_back(
          check(PauliString::x_type(on_sheet(m, code.bx[c])), o[f.ancilla(neighbour, c)]));
    }
  }
  // Products of C over a logical support on every other sheet telescope to
  // boundary operators times X on the measured interior qubits.
  for (const auto& x : check_free_logicals(code)) {
    int sign = 1;
    for (std::size_t m = 3; m < last; m += 2) {
      for (std::size_t j : x.support()) sign *= o[f.code_qubit(m, j)];
    }
    BitVector support = on_sheet(1, x);
    support ^= on_sheet(last, x);
    report.xx.push_back(check(PauliString::x_type(support), sign));
  }
  for (const auto& z : check_free_logicals(f.dual_code())) {
    int sign = 1;
    for (std::size_t m = 2; m < last; m += 2) {
      for (std::size_t j : z.support()) sign *= o[f.code_qubit(m, j)];
    }
    BitVector support = on_sheet(1, z);
    support ^= on_sheet(last, z);
    report.zz.push_back(check(PauliString::z_type(support), sign));
  }
  return report;
}

}  // namespace fqec
