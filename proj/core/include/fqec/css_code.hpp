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
#include <stdexcept>
#include <string>
#include <vector>

#include "fqec/gf2.hpp"

namespace fqec {

class CodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSS code on n qubits. Rows of bz are the Z-type stabilizers (Z_b) and rows
/// of bx the X-type stabilizers (X_c). Only `checked` enforces validity, so a
/// raw value can also describe a broken candidate for validate() to diagnose.
struct CssCode {
  std::size_t n = 0;
  BitMatrix bz;
  BitMatrix bx;
  std::string label;

  /// Builds a code and throws CodeError unless validate() passes.
  static CssCode checked(std::size_t n, BitMatrix bz, BitMatrix bx, std::string label);

  /// n - rank(bz) - rank(bx).
  long k() const;

  bool operator==(const CssCode& other) const = default;
};

struct ValidationReport {
  long k = 0;
  bool commutation_ok = false;   // bx · bzᵀ = 0
  bool independence_ok = false;  // rows of each matrix independent
  bool dimensions_ok = false;    // both matrices have n columns
  bool ok() const { return commutation_ok && independence_ok && dimensions_ok && k >= 0; }
  std::string describe() const;
};

ValidationReport validate(const CssCode& code);

/// Exchanges the roles of X and Z.
CssCode dual(const CssCode& code);

/// Symplectic logical basis: xbars[i] · zbars[j] = δ_ij.
struct LogicalOperators {
  BitMatrix xbars;  // k × n, each in ker(bz) \ rowspace(bx)
  BitMatrix zbars;  // k × n, each in ker(bx) \ rowspace(bz)
  std::size_t k() const { return xbars.rows(); }
};

/// Canonical logicals. X logicals are the reduced row echelon basis of
/// ker(bz) modulo rowspace(bx), each reduced against rref(bx) (so they vanish
/// on its pivot columns). Z logicals are built the same way from ker(bx) and
/// rref(bz), then re-paired so that xbars · zbarsᵀ = I. Throws CodeError when
/// k = 0.
LogicalOperators logical_operators(const CssCode& code);

struct DistanceResult {
  bool exact = false;
  std::size_t value = 0;  // d when exact, else the lower bound w_max + 1
  std::size_t x_weight = 0;  // lightest X logical found (0 if none within cap)
  std::size_t z_weight = 0;  // lightest Z logical found (0 if none within cap)
  std::string describe() const;
};

/// Exhaustive search for the lightest logical operator of weight ≤ w_max over
/// both X and Z sectors.
DistanceResult min_distance(const CssCode& code, std::size_t w_max);

/// Lightest vector of weight ≤ w_max with checks · v = 0 and
/// logicals · v ≠ 0, or 0 if none. `checks` and `logicals` share columns.
/// Shared by the code- and cluster-level distance searches.
std::size_t lightest_undetected(const BitMatrix& checks, const BitMatrix& logicals,
                                std::size_t w_max);

}  // namespace fqec
