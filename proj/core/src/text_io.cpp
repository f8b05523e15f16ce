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

#include "fqec/text_io.hpp"

#include <fmt/format.h>

#include <istream>
#include <ostream>
#include <stdexcept>

namespace fqec {

std::string vertex_name(const Vertex& v) {
  std::string s = fmt::format("{}:{}", to_string(v.kind), v.label);
  if (v.sheet) s += fmt::format("@{}", *v.sheet);
  return s;
}

void write_edge_list(std::ostream& out, const ClusterGraph& g) {
  for (auto [a, b] : g.edges()) out << vertex_name(g.vertex(a)) << ' ' << vertex_name(g.vertex(b)) << '\n';
}

void write_coordinate_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c : m[r].support()) out << r << ' ' << c << '\n';
  }
}

BitMatrix read_coordinate_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw std::runtime_error("coordinate matrix: missing header");
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < nnz; ++i) {
    std::size_t r = 0, c = 0;
    if (!(in >> r >> c)) throw std::runtime_error("coordinate matrix: truncated entry list");
    if (r >= rows || c >= cols) throw std::runtime_error("coordinate matrix: entry out of range");
    if (m.get(r, c)) throw std::runtime_error("coordinate matrix: duplicate entry");
    m.set(r, c);
  }
  return m;
}

}  // namespace fqec
