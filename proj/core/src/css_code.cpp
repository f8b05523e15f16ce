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

#include "fqec/css_code.hpp"

#include <fmt/format.h>

namespace fqec {

CssCode CssCode::checked(std::size_t n, BitMatrix bz, BitMatrix bx, std::string label) {
  CssCode code{n, std::move(bz), std::move(bx), std::move(label)};
  const ValidationReport report = validate(code);
  if (!report.ok()) {
    throw CodeError(fmt::format("invalid CSS code '{}': {}", code.label, report.describe()));
  }
  return code;
}

long CssCode::k() const {
  return static_cast<long>(n) - static_cast<long>(rank(bz)) - static_cast<long>(rank(bx));
}

std::string ValidationReport::describe() const {
  return fmt::format("k={} commutation={} independence={} dimensions={}", k,
                     commutation_ok ? "ok" : "FAIL", independence_ok ? "ok" : "FAIL",
                     dimensions_ok ? "ok" : "FAIL");
}

ValidationReport validate(const CssCode& code) {
  ValidationReport r;
  r.dimensions_ok = (code.bz.empty() || code.bz.cols() == code.n) &&
                    (code.bx.empty() || code.bx.cols() == code.n);
  if (!r.dimensions_ok) return r;
  const std::size_t rz = rank(code.bz);
  const std::size_t rx = rank(code.bx);
  r.k = static_cast<long>(code.n) - static_cast<long>(rz) - static_cast<long>(rx);
  r.independence_ok = rz == code.bz.rows() && rx == code.bx.rows();
  r.commutation_ok = code.bz.empty() || code.bx.empty() || multiply_transpose(code.bx, code.bz).is_zero();
  return r;
}

CssCode dual(const CssCode& code) {
  return CssCode{code.n, code.bx, code.bz, code.label.empty() ? "" : "dual(" + code.label + ")"};
}

namespace {

BitMatrix with_cols(const BitMatrix& m, std::size_t n) { return m.empty() ? BitMatrix(0, n) : m; }

// Canonical basis of ker(checks) modulo rowspace(stabilizers).
BitMatrix quotient_basis(const BitMatrix& checks, const BitMatrix& stabilizers, std::size_t n) {
  const BitMatrix kernel = nullspace(with_cols(checks, n));
  const RowEchelon stab = row_reduce(with_cols(stabilizers, n));
  BitMatrix reduced(0, n);
  for (const auto& v : kernel) {
    BitVector r = stab.reduce(v);
    if (r.any()) reduced.append_row(std::move(r));
  }
  return row_reduce(reduced).reduced;
}

BitMatrix invert(const BitMatrix& g) {
  const std::size_t k = g.rows();
  BitMatrix inv_t(0, k);  // rows are the columns of g⁻¹
  for (std::size_t j = 0; j < k; ++j) {
    auto col = solve(g, BitVector::from_support(k, {j}));
    if (!col) throw CodeError("logical_operators: pairing matrix is singular");
    inv_t.append_row(std::move(*col));
  }
  return inv_t.transpose();
}

}  // namespace

LogicalOperators logical_operators(const CssCode& code) {
  if (code.k() <= 0) throw CodeError("logical_operators: code '" + code.label + "' has k = 0");
  LogicalOperators out;
  out.xbars = quotient_basis(code.bz, code.bx, code.n);
  BitMatrix zs = quotient_basis(code.bx, code.bz, code.n);
  if (out.xbars.rows() != zs.rows()) throw CodeError("logical_operators: X/Z logical count mismatch");
  // Z' = (G⁻¹)ᵀ Z makes X Z'ᵀ = G G⁻¹ = I.
  const BitMatrix g = multiply_transpose(out.xbars, zs);
  const BitMatrix ginv = invert(g);
  const BitMatrix mix = ginv.transpose();
  out.zbars = BitMatrix(0, code.n);
  for (std::size_t j = 0; j < mix.rows(); ++j) out.zbars.append_row(zs.combine_rows(mix[j]));
  return out;
}

namespace {

struct UndetectedSearch {
  std::vector<BitVector> col_syndrome;
  std::vector<BitVector> col_logical;
  std::vector<BitVector> syn_stack;
  std::vector<BitVector> log_stack;
  std::size_t n = 0;

  bool dfs(std::size_t depth, std::size_t target, std::size_t start) {
    for (std::size_t j = start; j + (target - depth) <= n; ++j) {
      syn_stack[depth + 1] = syn_stack[depth];
      syn_stack[depth + 1] ^= col_syndrome[j];
      log_stack[depth + 1] = log_stack[depth];
      log_stack[depth + 1] ^= col_logical[j];
      if (depth + 1 == target) {
        if (syn_stack[depth + 1].none() && log_stack[depth + 1].any()) return true;
      } else if (dfs(depth + 1, target, j + 1)) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::size_t lightest_undetected(const BitMatrix& checks, const BitMatrix& logicals, std::size_t w_max) {
  if (logicals.empty()) return 0;
  const std::size_t n = logicals.cols();
  UndetectedSearch s;
  s.n = n;
  const BitMatrix ct = with_cols(checks, n).transpose();
  const BitMatrix lt = logicals.transpose();
  for (std::size_t j = 0; j < n; ++j) {
    s.col_syndrome.push_back(checks.empty() ? BitVector(0) : ct[j]);
    s.col_logical.push_back(lt[j]);
  }
  s.syn_stack.assign(w_max + 1, BitVector(checks.rows()));
  s.log_stack.assign(w_max + 1, BitVector(logicals.rows()));
  for (std::size_t w = 1; w <= w_max && w <= n; ++w) {
    if (s.dfs(0, w, 0)) return w;
  }
  return 0;
}

std::string DistanceResult::describe() const {
  return exact ? fmt::format("d = {}", value) : fmt::format("d >= {}", value);
}

DistanceResult min_distance(const CssCode& code, std::size_t w_max) {
  if (w_max < 1) throw std::invalid_argument("min_distance: w_max must be at least 1");
  const LogicalOperators logicals = logical_operators(code);
  DistanceResult r;
  // X-type logical: commutes with bz, anticommutes with some z̄.
  r.x_weight = lightest_undetected(code.bz, logicals.zbars, w_max);
  r.z_weight = lightest_undetected(code.bx, logicals.xbars, w_max);
  std::size_t best = 0;
  for (std::size_t w : {r.x_weight, r.z_weight}) {
    if (w != 0 && (best == 0 || w < best)) best = w;
  }
  r.exact = best != 0;
  r.value = r.exact ? best : w_max + 1;
  return r;
}

}  // namespace fqec
