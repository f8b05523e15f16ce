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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fqec/codes.hpp"
#include "fqec/foliation.hpp"
#include "test_support.hpp"

namespace fqec {
namespace {

TEST(VertexName, Formats) {
  EXPECT_EQ(vertex_name({VertexKind::kCode, 3, std::nullopt}), "code:3");
  EXPECT_EQ(vertex_name({VertexKind::kAncilla, 0, 2}), "ancilla:0@2");
}

TEST(EdgeList, OneLinePerEdge) {
  const ClusterGraph g = progenitor(steane_code());
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  std::string a, b;
  std::size_t lines = 0;
  while (in >> a >> b) {
    ++lines;
    EXPECT_NE(a, b);
  }
  EXPECT_EQ(lines, g.num_edges());
}

TEST(CoordinateMatrix, HeaderAndEntries) {
  std::ostringstream out;
  write_coordinate_matrix(out, BitMatrix::from_strings({"101", "010"}));
  EXPECT_EQ(out.str(), "2 3 3\n0 0\n0 2\n1 1\n");
}

// Property: write then read is the identity.
TEST(Property, CoordinateRoundTrip) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix m = testing::random_matrix(rng() % 9, 1 + rng() % 90, rng, 0.2);
    std::stringstream io;
    write_coordinate_matrix(io, m);
    EXPECT_EQ(read_coordinate_matrix(io), m);
  }
  const FoliatedCluster f(make_surface(3), 2);
  std::stringstream io;
  write_coordinate_matrix(io, parity_checks(f).h);
  EXPECT_EQ(read_coordinate_matrix(io), parity_checks(f).h);
}

TEST(CoordinateMatrix, MalformedInput) {
  for (const char* text : {"", "2 2", "2 2 1\n5 0\n", "1 2 2\n0 0\n0 0\n", "1 1 2\n0 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_coordinate_matrix(in), std::runtime_error) << text;
  }
}

}  // namespace
}  // namespace fqec
