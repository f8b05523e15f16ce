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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fqec/codes.hpp"
#include "test_support.hpp"

namespace fqec {
namespace {

// Joint sum over every (e, f) pair with H e ⊕ f = s, written without any
// shortcuts: the flip vector is enumerated too and filtered.
SheetMarginals brute_marginals(const BitMatrix& h, const std::vector<double>& p, const std::vector<double>& q,
                               const BitVector& s) {
  const std::size_t n = h.cols(), c = h.rows();
  const auto dh = testing::to_dense(h);
  std::vector<double> qubit(n, 0.0), flip(c, 0.0);
  double z = 0.0;
  for (std::uint64_t em = 0; em < (std::uint64_t{1} << n); ++em) {
    std::vector<int> e(n);
    double we = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = (em >> j) & 1;
      we *= e[j] ? p[j] : 1 - p[j];
    }
    const auto he = testing::naive_multiply(dh, e);
    for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << c); ++fm) {
      bool ok = true;
      double w = we;
      for (std::size_t r = 0; r < c && ok; ++r) {
        const int fr = (fm >> r) & 1;
        ok = ((he[r] ^ fr) == static_cast<int>(s.get(r)));
        w *= fr ? q[r] : 1 - q[r];
      }
      if (!ok) continue;
      z += w;
      for (std::size_t j = 0; j < n; ++j) qubit[j] += e[j] * w;
      for (std::size_t r = 0; r < c; ++r) flip[r] += ((fm >> r) & 1) * w;
    }
  }
  for (auto& v : qubit) v /= z;
  for (auto& v : flip) v /= z;
  return {qubit, flip};
}

std::vector<double> random_probs(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void expect_close(const SheetMarginals& a, const SheetMarginals& b, double tol) {
  ASSERT_EQ(a.qubit.size(), b.qubit.size());
  ASSERT_EQ(a.flip.size(), b.flip.size());
  for (std::size_t j = 0; j < a.qubit.size(); ++j) EXPECT_NEAR(a.qubit[j], b.qubit[j], tol) << "qubit " << j;
  for (std::size_t r = 0; r < a.flip.size(); ++r) EXPECT_NEAR(a.flip[r], b.flip[r], tol) << "flip " << r;
}

TEST(Enumeration, ReliableTrivialSyndromeLowersBeliefs) {
  const EnumerationSheetDecoder dec(steane_code().bx);
  const std::vector<double> p(7, 0.05), q(3, kProbabilityFloor);
  const SheetMarginals m = dec.marginals(p, q, BitVector(3));
  for (double v : m.qubit) EXPECT_LT(v, 0.05);
}

TEST(Enumeration, UninformativeFlipsReturnPriors) {
  std::mt19937_64 rng(61);
  const EnumerationSheetDecoder dec(steane_code().bx);
  const auto p = random_probs(7, rng, 0.01, 0.4);
  const std::vector<double> q(3, 0.5);
  const SheetMarginals m = dec.marginals(p, q, BitVector::from_string("101"));
  for (std::size_t j = 0; j < 7; ++j) EXPECT_NEAR(m.qubit[j], p[j], 1e-12);
  // Each flip then carries the odd-parity probability of its row.
  const BitMatrix h = steane_code().bx;
  for (std::size_t r = 0; r < 3; ++r) {
    double bias = 1.0;
    for (std::size_t j : h[r].support()) bias *= 1 - 2 * p[j];
    const double odd = (1 - bias) / 2;
    EXPECT_NEAR(m.flip[r], r == 1 ? odd : 1 - odd, 1e-12) << r;
  }
}

TEST(Enumeration, SingleErrorArgmax) {
  const CssCode c = steane_code();
  const EnumerationSheetDecoder dec(c.bx);
  BitVector e(7);
  e.set(6);
  const BitVector s = c.bx.multiply(e);
  const SheetMarginals m = dec.marginals(std::vector<double>(7, 0.01), std::vector<double>(3, 1e-6), s);
  EXPECT_EQ(std::max_element(m.qubit.begin(), m.qubit.end()) - m.qubit.begin(), 6);
}

TEST(Enumeration, CapacityAndShapeErrors) {
  EXPECT_THROW(EnumerationSheetDecoder(BitMatrix(1, 21)), CapacityError);
  const EnumerationSheetDecoder dec(steane_code().bx);
  EXPECT_THROW(dec.marginals(std::vector<double>(6, 0.1), std::vector<double>(3, 0.1), BitVector(3)),
               std::invalid_argument);
}

TEST(Trellis, WidthAndCapacity) {
  EXPECT_EQ(trellis_width(BitMatrix::from_strings({"1100", "0011"})), 1u);
  EXPECT_EQ(trellis_width(BitMatrix::from_strings({"1001", "0110"})), 2u);
  EXPECT_THROW(TrellisSheetDecoder(make_surface(5).bx, 4), CapacityError);
}

// Property: both exact decoders agree with the joint-enumeration oracle on
// random small check matrices, including empty and repeated-support rows.
TEST(Property, ExactDecodersMatchOracle) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 8, c = rng() % 5;
    const BitMatrix h = testing::random_matrix(c, n, rng, 0.4);
    const auto p = random_probs(n, rng, 0.01, 0.6);
    const auto q = random_probs(c, rng, 0.001, 0.5);
    const BitVector s = testing::random_vector(c, rng);
    const SheetMarginals want = brute_marginals(h, p, q, s);
    expect_close(EnumerationSheetDecoder(h).marginals(p, q, s), want, 1e-9);
    expect_close(TrellisSheetDecoder(h).marginals(p, q, s), want, 1e-9);
  }
}

TEST(Trellis, SingleTranslateMatchesEnumeration) {
  const ConvolutionalKernel kernel = example_convolutional_kernel();
  const CssCode c = make_convolutional(kernel, kernel.span, Termination::kOpen);
  std::mt19937_64 rng(63);
  const EnumerationSheetDecoder en(c.bx);
  const TrellisSheetDecoder tr(c.bx);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_probs(c.n, rng, 0.001, 0.3);
    const auto q = random_probs(c.bx.rows(), rng, 0.001, 0.3);
    const BitVector s = testing::random_vector(c.bx.rows(), rng);
    expect_close(tr.marginals(p, q, s), en.marginals(p, q, s), 1e-9);
  }
}

TEST(Trellis, ExampleConvolutionalCodeMatchesEnumeration) {
  const CssCode c = code_from_name("conv");
  ASSERT_EQ(c.n, 18u);
  std::mt19937_64 rng(64);
  const EnumerationSheetDecoder en(c.bx);
  const TrellisSheetDecoder tr(c.bx);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_probs(c.n, rng, 0.001, 0.2);
    const auto q = random_probs(c.bx.rows(), rng, 0.001, 0.2);
    const BitVector s = testing::random_vector(c.bx.rows(), rng);
    expect_close(tr.marginals(p, q, s), en.marginals(p, q, s), 1e-9);
  }
  const SheetMarginals u =
      tr.marginals(std::vector<double>(18, 0.07), std::vector<double>(c.bx.rows(), 0.5), BitVector(c.bx.rows()));
  for (double v : u.qubit) EXPECT_NEAR(v, 0.07, 1e-12);
}

TEST(SheetDecoder, PriorsAreClamped) {
  const EnumerationSheetDecoder dec(BitMatrix::from_strings({"11"}));
  const SheetMarginals m = dec.marginals(std::vector<double>{0.0, 1.0}, std::vector<double>{0.0}, BitVector(1));
  for (double v : m.qubit) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  const double lo = kProbabilityFloor, hi = 1 - kProbabilityFloor;
  const SheetMarginals want = brute_marginals(BitMatrix::from_strings({"11"}), {lo, hi}, {lo}, BitVector(1));
  expect_close(m, want, 1e-9);
}

}  // namespace
}  // namespace fqec
