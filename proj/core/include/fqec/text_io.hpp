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

#include <iosfwd>
#include <string>

#include "fqec/cluster.hpp"
#include "fqec/gf2.hpp"

namespace fqec {

/// One edge per line, "kind:label kind:label", with "@sheet" appended to
/// each endpoint of a sheeted vertex (e.g. "code:3@2 ancilla:0@1").
void write_edge_list(std::ostream& out, const ClusterGraph& g);
std::string vertex_name(const Vertex& v);

/// Coordinate format: header "rows cols nnz", then one zero-based "row col"
/// line per set entry in row-major order.
void write_coordinate_matrix(std::ostream& out, const BitMatrix& m);
/// Throws std::runtime_error on malformed input.
BitMatrix read_coordinate_matrix(std::istream& in);

}  // namespace fqec
