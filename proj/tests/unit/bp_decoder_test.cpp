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

#include "fqec/bp_decoder.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "fqec/codes.hpp"
#include "fqec/decoder.hpp"
#include "fqec/noise.hpp"
#include "test_support.hpp"

namespace fqec {
namespace {

struct Fixture {
  FoliatedCluster f;
  CheckMatrix checks;
  LogicalCorrelatorMatrix lambda;
  std::array<SectorProblem, 2> split;
  Fixture(const CssCode& c, std::size_t layers)
      : f(c, layers), checks(parity_checks(f)), lambda(logical_correlators(f)),
        split(sector_split(f, checks, lambda)) {}
};

BpDecoder make_bp(const SectorProblem& sp, DecoderKind kind = DecoderKind::kBpEnum) {
  return BpDecoder(sp, std::shared_ptr<const SheetDecoder>(make_sheet_decoder(kind, sp.sheet_checks)));
}

TEST(Combination, SerialAndParallel) {
  EXPECT_DOUBLE_EQ(serial(0.1, 0.2), 0.1 * 0.8 + 0.2 * 0.9);
  EXPECT_DOUBLE_EQ(serial(0.5, 0.3), 0.5);
  EXPECT_NEAR(parallel(0.1, 0.2), 0.02 / (0.02 + 0.72), 1e-15);
  EXPECT_NEAR(parallel(0.5, 0.3), 0.3, 1e-15);
}

TEST(Bp, TrivialSyndrome) {
  const Fixture fx(steane_code(), 2);
  for (const SectorProblem& sp : fx.split) {
    const BpDecoder bp = make_bp(sp);
    const SectorDecodeResult r = bp.decode(std::vector<double>(sp.num_columns(), 0.05), BitVector(sp.h.rows()));
    EXPECT_TRUE(r.correction.none());
    EXPECT_TRUE(r.ancilla_flips.none());
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 1u);
  }
}

// Dual sector at L = 1 has one sheet, so BP is a single sheet-decoder call
// whose flip priors combine the two boundary ancillas serially.
TEST(Bp, SingleSheetReducesToOneCall) {
  const Fixture fx(steane_code(), 1);
  const SectorProblem& sp = fx.split[1];
  ASSERT_EQ(sp.sheets.size(), 1u);
  std::mt19937_64 rng(81);
  const EnumerationSheetDecoder direct(sp.sheet_checks);
  const BpDecoder bp = make_bp(sp);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> u(0.01, 0.2);
    std::vector<double> priors(sp.num_columns());
    for (auto& x : priors) x = u(rng);
    const BitVector s = testing::random_vector(sp.h.rows(), rng);
    if (s.none()) continue;
    const SectorSheet& sheet = sp.sheets[0];
    std::vector<double> p(sheet.code_cols.size()), q(sheet.check_rows.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = priors[sheet.code_cols[j]];
    BitVector ss(q.size());
    for (std::size_t c = 0; c < q.size(); ++c) {
      const auto [lo, hi] = sheet.check_ancillas[c];
      ASSERT_NE(lo, kNone);
      ASSERT_NE(hi, kNone);
      q[c] = serial(priors[sp.ancillas[lo].col], priors[sp.ancillas[hi].col]);
      ss.set(c, s.get(sheet.check_rows[c]));
    }
    const SheetMarginals want = direct.marginals(p, q, ss);
    const SectorDecodeResult r = bp.decode(priors, s);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_TRUE(r.converged);
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_NEAR(r.posterior[sheet.code_cols[j]], want.qubit[j], 1e-12);
  }
}

// Property: on a one-sheet sector every ancilla meets a single check, so with
// uninformative ancillas the code-qubit posteriors are the priors.
TEST(Property, UninformativeLimit) {
  std::mt19937_64 rng(82);
  for (const CssCode& c : {steane_code(), shor_code(), make_surface(3)}) {
    const Fixture fx(c, 1);
    const SectorProblem& sp = fx.split[1];
    ASSERT_EQ(sp.sheets.size(), 1u);
    const BpDecoder bp = make_bp(sp, DecoderKind::kBpTrellis);
    std::vector<double> priors(sp.num_columns());
    for (std::size_t j = 0; j < priors.size(); ++j) priors[j] = sp.column_is_code[j] ? 0.01 + 0.3 * (j % 5) / 5 : 0.5;
    for (int trial = 0; trial < 10; ++trial) {
      BitVector s = testing::random_vector(sp.h.rows(), rng);
      s.set(0);
      const SectorDecodeResult r = bp.decode(priors, s);
      for (std::size_t j = 0; j < priors.size(); ++j) {
        if (sp.column_is_code[j]) {
          EXPECT_NEAR(r.posterior[j], priors[j], 1e-12) << c.label;
        }
      }
    }
  }
}

// Property: corrections always reproduce the syndrome and stay on their
// column types.
TEST(Property, DecoderSoundness) {
  std::mt19937_64 rng(83);
  for (const CssCode& c : {steane_code(), shor_code(), make_surface(3)}) {
    for (std::size_t layers : {1u, 2u, 3u}) {
      const Fixture fx(c, layers);
      for (const SectorProblem& sp : fx.split) {
        const BpDecoder bp = make_bp(sp);
        const std::vector<double> priors(sp.num_columns(), 0.05);
        for (int trial = 0; trial < 40; ++trial) {
          const BitVector e = testing::random_vector(sp.num_columns(), rng, 0.08);
          const BitVector s = sp.h.multiply(e);
          const SectorDecodeResult r = bp.decode(priors, s);
          EXPECT_EQ(sp.h.multiply(r.correction ^ r.ancilla_flips), s) << c.label << " L=" << layers;
          for (std::size_t j : r.correction.support()) EXPECT_TRUE(sp.column_is_code[j]);
          for (std::size_t j : r.ancilla_flips.support()) EXPECT_FALSE(sp.column_is_code[j]);
        }
      }
    }
  }
}

// Property: the enumeration and trellis back ends give the same decisions.
TEST(Property, EnumAndTrellisBackEndsAgree) {
  std::mt19937_64 rng(84);
  const Fixture fx(steane_code(), 2);
  for (const SectorProblem& sp : fx.split) {
    const BpDecoder a = make_bp(sp, DecoderKind::kBpEnum), b = make_bp(sp, DecoderKind::kBpTrellis);
    const std::vector<double> priors(sp.num_columns(), 0.03);
    for (int trial = 0; trial < 40; ++trial) {
      const BitVector s = sp.h.multiply(testing::random_vector(sp.num_columns(), rng, 0.05));
      const SectorDecodeResult ra = a.decode(priors, s), rb = b.decode(priors, s);
      EXPECT_EQ(ra.correction, rb.correction);
      EXPECT_EQ(ra.iterations, rb.iterations);
      for (std::size_t j = 0; j < ra.posterior.size(); ++j) EXPECT_NEAR(ra.posterior[j], rb.posterior[j], 1e-9);
    }
  }
}

TEST(Bp, SingleErrorsAreCorrected) {
  const Fixture fx(steane_code(), 2);
  for (const SectorProblem& sp : fx.split) {
    const BpDecoder bp = make_bp(sp);
    const std::vector<double> priors(sp.num_columns(), 0.01);
    for (std::size_t j = 0; j < sp.num_columns(); ++j) {
      BitVector e(sp.num_columns());
      e.set(j);
      const SectorDecodeResult r = bp.decode(priors, sp.h.multiply(e));
      EXPECT_TRUE(sp.lambda.multiply(e ^ r.correction ^ r.ancilla_flips).none()) << "column " << j;
    }
  }
}

TEST(TrialDecoder, NamesAndSelection) {
  EXPECT_EQ(decoder_kind_from_string("bp+trellis"), DecoderKind::kBpTrellis);
  EXPECT_EQ(to_string(DecoderKind::kMapOracle), "map-oracle");
  EXPECT_EQ(sector_selection_from_string("dual"), SectorSelection::kDual);
  EXPECT_THROW(decoder_kind_from_string("magic"), std::invalid_argument);
  const FoliatedCluster f(steane_code(), 1);
  EXPECT_EQ(TrialDecoder(f, DecoderKind::kBpEnum, 0.01).counted_rows().size(), 2u);
  EXPECT_EQ(TrialDecoder(f, DecoderKind::kBpEnum, 0.01, SectorSelection::kPrimal).counted_rows().size(), 1u);
  EXPECT_THROW(TrialDecoder(FoliatedCluster(steane_code(), 3), DecoderKind::kMapOracle, 0.01), CapacityError);
}

TEST(TrialDecoder, RunMatchesDecodeThenClassify) {
  const FoliatedCluster f(make_surface(3), 1);
  for (DecoderKind kind : {DecoderKind::kBpEnum, DecoderKind::kBpTrellis}) {
    const TrialDecoder dec(f, kind, 0.02);
    EXPECT_TRUE(dec.run(BitVector(f.num_qubits())).failures.none());
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng = trial_rng(3, 0, t);
      const BitVector e = sample_iid_z(f, 0.03, rng);
      const DecodeResult r = dec.run(e);
      const BitVector s = syndrome(dec.checks(), e);
      EXPECT_EQ(syndrome(dec.checks(), r.correction ^ r.ancilla_flips), s);
      EXPECT_EQ(r.failures, dec.classify(e, dec.decode(s)));
      EXPECT_EQ(r.failures.size(), 2u);
    }
  }
}

TEST(TrialDecoder, MapOracleNeverWorseOnAverage) {
  const FoliatedCluster f(steane_code(), 1);
  const TrialDecoder map(f, DecoderKind::kMapOracle, 0.03, SectorSelection::kPrimal);
  const TrialDecoder bp(f, DecoderKind::kBpEnum, 0.03, SectorSelection::kPrimal);
  std::size_t map_fail = 0, bp_fail = 0;
  for (std::uint64_t t = 0; t < 3000; ++t) {
    Rng rng = trial_rng(9, 0, t);
    const BitVector e = sample_iid_z(f, 0.03, rng);
    map_fail += map.run(e).failures.any();
    bp_fail += bp.run(e).failures.any();
  }
  EXPECT_LE(map_fail, bp_fail + 10);
}

}  // namespace
}  // namespace fqec
