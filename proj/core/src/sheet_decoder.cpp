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

#include "fqec/sheet_decoder.hpp"

#include <algorithm>

namespace fqec {

namespace {

double clamp_probability(double p) { return std::clamp(p, kProbabilityFloor, 1.0 - kProbabilityFloor); }

}  // namespace

SheetMarginals SheetDecoder::marginals(std::span<const double> qubit_priors, std::span<const double> flip_priors,
                                       const BitVector& syndrome) const {
  if (qubit_priors.size() != num_qubits() || flip_priors.size() != num_checks() ||
      syndrome.size() != num_checks()) {
    throw std::invalid_argument("SheetDecoder::marginals: input lengths do not match the check matrix");
  }
  std::vector<double> p(qubit_priors.begin(), qubit_priors.end());
  std::vector<double> q(flip_priors.begin(), flip_priors.end());
  std::transform(p.begin(), p.end(), p.begin(), clamp_probability);
  std::transform(q.begin(), q.end(), q.begin(), clamp_probability);
  return compute(p, q, syndrome);
}

}  // namespace fqec
