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

#include "fqec/tableau.hpp"

#include <stdexcept>

namespace fqec {

namespace {

std::uint8_t mod4(long v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

}  // namespace

PauliString::PauliString(BitVector x, BitVector z, int sign) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw std::invalid_argument("PauliString: x/z size mismatch");
  if (sign != 1 && sign != -1) throw std::invalid_argument("PauliString: sign must be +1 or -1");
  phase_ = mod4(static_cast<long>(x_.overlap(z_)) + (sign < 0 ? 2 : 0));
}

PauliString PauliString::x_type(const BitVector& support, int sign) {
  return PauliString(support, BitVector(support.size()), sign);
}

PauliString PauliString::z_type(const BitVector& support, int sign) {
  return PauliString(BitVector(support.size()), support, sign);
}

PauliString PauliString::parse(std::string_view text) {
  int sign = +1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  BitVector x(text.size()), z(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'X': x.set(i); break;
      case 'Z': z.set(i); break;
      case 'Y': x.set(i); z.set(i); break;
      case 'I':
      case '_': break;
      default: throw std::invalid_argument("PauliString::parse: bad character");
    }
  }
  return PauliString(std::move(x), std::move(z), sign);
}

bool PauliString::is_hermitian() const {
  return ((phase_ - static_cast<long>(x_.overlap(z_))) & 1) == 0;
}

int PauliString::sign() const {
  const std::uint8_t d = mod4(static_cast<long>(phase_) - static_cast<long>(x_.overlap(z_)));
  if (d == 0) return +1;
  if (d == 2) return -1;
  throw std::logic_error("PauliString::sign: operator is not Hermitian");
}

bool PauliString::commutes_with(const PauliString& other) const {
  return x_.dot(other.z_) == z_.dot(other.x_);
}

PauliString& PauliString::operator*=(const PauliString& other) {
  // Z^{z1} X^{x2} = (-1)^{|z1 & x2|} X^{x2} Z^{z1}
  const long swap_sign = 2 * static_cast<long>(z_.overlap(other.x_));
  phase_ = mod4(static_cast<long>(phase_) + other.phase_ + swap_sign);
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

std::string PauliString::to_string() const {
  std::string s = sign() > 0 ? "+" : "-";
  for (std::size_t i = 0; i < size(); ++i) {
    const bool xi = x_.get(i), zi = z_.get(i);
    s += xi ? (zi ? 'Y' : 'X') : (zi ? 'Z' : '_');
  }
  return s;
}

StabilizerGroup::StabilizerGroup(const std::vector<PauliString>& generators) {
  if (generators.empty()) return;
  n_ = generators.front().size();
  std::vector<PauliString> rows = generators;
  auto bit = [this](const PauliString& p, std::size_t c) {
    return c < n_ ? p.x().get(c) : p.z().get(c - n_);
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < 2 * n_ && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && bit(rows[i], c)) rows[i] *= rows[r];
    }
    pivots_.push_back(c);
    ++r;
  }
  rows.resize(r);
  rows_ = std::move(rows);
}

std::optional<int> StabilizerGroup::contains(const PauliString& p) const {
  if (rows_.empty()) {
    if (!p.is_identity()) return std::nullopt;
    return p.sign();
  }
  if (p.size() != n_) throw std::invalid_argument("StabilizerGroup::contains: size mismatch");
  PauliString acc(n_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    const bool target = c < n_ ? p.x().get(c) : p.z().get(c - n_);
    if (target) acc *= rows_[i];
  }
  if (!acc.same_support(p)) return std::nullopt;
  const int d = (acc.phase() - p.phase() + 4) % 4;
  if (d == 0) return +1;
  if (d == 2) return -1;
  throw std::logic_error("StabilizerGroup::contains: query is not Hermitian");
}

StabilizerTableau::StabilizerTableau(std::vector<PauliString> generators)
    : n_(generators.size()), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.size() != n_) {
      throw std::invalid_argument("StabilizerTableau: generator count must equal qubit count");
    }
    if (!g.is_hermitian()) throw std::invalid_argument("StabilizerTableau: non-Hermitian generator");
  }
  if (!is_valid()) {
    throw std::invalid_argument("StabilizerTableau: generators must commute and be independent");
  }
}

StabilizerTableau StabilizerTableau::plus_state(std::size_t n) {
  std::vector<PauliString> gens;
  for (std::size_t q = 0; q < n; ++q) gens.push_back(PauliString::x_type(BitVector::from_support(n, {q})));
  StabilizerTableau t;
  t.n_ = n;
  t.gens_ = std::move(gens);
  return t;
}

StabilizerTableau StabilizerTableau::zero_state(std::size_t n) {
  std::vector<PauliString> gens;
  for (std::size_t q = 0; q < n; ++q) gens.push_back(PauliString::z_type(BitVector::from_support(n, {q})));
  StabilizerTableau t;
  t.n_ = n;
  t.gens_ = std::move(gens);
  return t;
}

bool StabilizerTableau::is_valid() const {
  if (gens_.size() != n_) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (!gens_[i].commutes_with(gens_[j])) return false;
    }
  }
  return StabilizerGroup(gens_).rank() == n_;
}

MeasurementOutcome StabilizerTableau::measure_x(std::size_t q, std::optional<int> forced, Rng* rng) {
  if (q >= n_) throw std::out_of_range("StabilizerTableau::measure_x: qubit out of range");
  if (forced && *forced != 1 && *forced != -1) {
    throw std::invalid_argument("StabilizerTableau::measure_x: forced outcome must be ±1");
  }
  std::size_t pivot = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (gens_[i].z().get(q)) {
      pivot = i;
      break;
    }
  }
  const PauliString xq = PauliString::x_type(BitVector::from_support(n_, {q}));
  if (pivot == n_) {
    const auto sign = contains(xq);
    if (!sign) throw std::logic_error("StabilizerTableau::measure_x: state is not pure");
    if (forced && *forced != *sign) {
      throw std::runtime_error("StabilizerTableau::measure_x: forced outcome " +
                               std::to_string(*forced) + " contradicts deterministic outcome " +
                               std::to_string(*sign) + " on qubit " + std::to_string(q));
    }
    return {*sign, true};
  }
  int value;
  if (forced) {
    value = *forced;
  } else if (rng != nullptr) {
    value = ((*rng)() >> 63) ? -1 : +1;
  } else {
    throw std::logic_error("StabilizerTableau::measure_x: random outcome needs a forced value or rng");
  }
  for (std::size_t i = pivot + 1; i < n_; ++i) {
    if (gens_[i].z().get(q)) gens_[i] *= gens_[pivot];
  }
  gens_[pivot] = value > 0 ? xq : PauliString::x_type(xq.x(), -1);
  return {value, false};
}

void StabilizerTableau::apply(const PauliString& p) {
  for (auto& g : gens_) {
    if (!g.commutes_with(p)) g.negate();
  }
}

void StabilizerTableau::apply_z(std::size_t q) {
  for (auto& g : gens_) {
    if (g.x().get(q)) g.negate();
  }
}

std::optional<int> StabilizerTableau::contains(const PauliString& p) const {
  return StabilizerGroup(gens_).contains(p);
}

}  // namespace fqec
