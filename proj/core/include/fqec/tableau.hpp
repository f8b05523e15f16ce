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
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fqec/gf2.hpp"

namespace fqec {

/// Pauli operator i^phase · X^x · Z^z (X factors to the left of Z factors on
/// every qubit). The phase is kept mod 4 so products are exact; Hermitian
/// strings expose a ±1 sign relative to the canonical form i^{x·z} X^x Z^z.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}
  PauliString(BitVector x, BitVector z, int sign = +1);

  static PauliString x_type(const BitVector& support, int sign = +1);
  static PauliString z_type(const BitVector& support, int sign = +1);
  /// Parses e.g. "+XZI_Y" ('_' and 'I' are identity); a leading sign is optional.
  static PauliString parse(std::string_view text);

  std::size_t size() const { return x_.size(); }
  const BitVector& x() const { return x_; }
  const BitVector& z() const { return z_; }
  BitVector& x() { return x_; }
  BitVector& z() { return z_; }

  /// ±1 for Hermitian strings. Throws std::logic_error otherwise.
  int sign() const;
  bool is_hermitian() const;
  void negate() { phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3); }
  std::uint8_t phase() const { return phase_; }

  bool commutes_with(const PauliString& other) const;
  bool is_identity() const { return x_.none() && z_.none(); }
  std::size_t weight() const { return (x_ | z_).weight(); }

  /// this = this · other, with exact phase.
  PauliString& operator*=(const PauliString& other);
  friend PauliString operator*(PauliString a, const PauliString& b) { return a *= b; }

  /// Equality including phase.
  bool operator==(const PauliString& other) const = default;
  /// Equal as unsigned Pauli operators (ignoring phase).
  bool same_support(const PauliString& other) const { return x_ == other.x_ && z_ == other.z_; }

  std::string to_string() const;

 private:
  BitVector x_;
  BitVector z_;
  std::uint8_t phase_ = 0;
};

/// The group generated by a set of commuting Paulis, held in symplectic
/// reduced row echelon form so that membership queries are a single pass.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(const std::vector<PauliString>& generators);

  /// +1 if p is in the group, -1 if -p is, nullopt if neither.
  std::optional<int> contains(const PauliString& p) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> rows_;
  std::vector<std::size_t> pivots_;  // symplectic column: [0, n) x-part, [n, 2n) z-part
};

struct MeasurementOutcome {
  int value = +1;           // ±1
  bool deterministic = false;
};

/// Pure stabilizer state on N qubits held as N independent, mutually
/// commuting generators. Supports X-basis measurement and Pauli application.
class StabilizerTableau {
 public:
  using Rng = std::mt19937_64;

  StabilizerTableau() = default;
  /// Throws std::invalid_argument unless the generators are N commuting,
  /// independent, Hermitian Paulis on N qubits.
  explicit StabilizerTableau(std::vector<PauliString> generators);

  /// Product state |+>^n.
  static StabilizerTableau plus_state(std::size_t n);
  /// Product state |0>^n.
  static StabilizerTableau zero_state(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  /// Measures X on qubit q. A random outcome is taken from `forced` when set,
  /// otherwise drawn from `rng`; a deterministic outcome ignores `rng` and
  /// throws std::runtime_error if `forced` contradicts it. Throws
  /// std::logic_error when the outcome is random and neither source is given.
  MeasurementOutcome measure_x(std::size_t q, std::optional<int> forced = std::nullopt,
                               Rng* rng = nullptr);

  /// Multiplies the state by a Pauli (flips the sign of anticommuting generators).
  void apply(const PauliString& p);
  void apply_z(std::size_t q);

  /// +1 / -1 / nullopt, as in StabilizerGroup::contains.
  std::optional<int> contains(const PauliString& p) const;
  StabilizerGroup group() const { return StabilizerGroup(gens_); }

  /// True when the generators still satisfy the pure-state invariants.
  bool is_valid() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> gens_;
};

}  // namespace fqec
