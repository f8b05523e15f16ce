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
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fqec/bp_decoder.hpp"
#include "fqec/decoder.hpp"

namespace fqec {

enum class OutputFormat { kCsv, kJson };

/// Monte Carlo sweep over codes × layers × p.
///
/// Config files are "key = value" lines ('#' starts a comment, lists are
/// comma-separated):
///
///   code     = steane, surface3   # registry names or code-spec paths
///   layers   = 1, 2
///   p        = 0.005, 0.01, 0.02
///   trials   = 10000
///   seed     = 1
///   decoder  = bp+enum            # bp+enum | bp+trellis | map-oracle
///   sectors  = both               # primal | dual | both
///   output   = results.csv        # empty: standard output
///   format   = csv                # csv | json
///   threads  = 0                  # 0: FOLIATE_QEC_THREADS, else all cores
///   min_failures = 0              # > 0 enables early stopping
///   max_trials   = 0              # early-stopping cap (0: 10 × trials)
///   batch        = 1000           # early-stopping batch size
///   bp.max_iters = 50
///   bp.tol       = 1e-6
///   bp.damping   = 0
struct CampaignConfig {
  std::vector<std::string> codes{"steane"};
  std::vector<std::size_t> layers{1};
  std::vector<double> ps{0.001, 0.002, 0.005, 0.01, 0.02, 0.05};
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  DecoderKind decoder = DecoderKind::kBpEnum;
  SectorSelection sectors = SectorSelection::kBoth;
  std::string output;
  OutputFormat format = OutputFormat::kCsv;
  std::size_t threads = 0;
  std::size_t min_failures = 0;
  std::size_t max_trials = 0;
  std::size_t batch = 1000;
  BpConfig bp;
};

/// Throws std::invalid_argument for unknown keys or malformed values.
CampaignConfig parse_campaign_config(std::string_view text);
CampaignConfig load_campaign_config(const std::string& path);
/// Throws std::invalid_argument when the config violates its invariants.
void validate(const CampaignConfig& cfg);

/// Worker count: cfg.threads if nonzero, else FOLIATE_QEC_THREADS, else the
/// hardware concurrency (at least 1).
std::size_t resolve_threads(const CampaignConfig& cfg);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval at z standard deviations. Throws
/// std::invalid_argument when trials = 0 or successes > trials.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.0);

struct SummaryRecord {
  std::string code;
  long k = 0;
  std::size_t layers = 0;
  double p = 0.0;
  std::size_t trials = 0;
  double wer = 0.0, wer_lo = 0.0, wer_hi = 0.0;
  double ber = 0.0, ber_lo = 0.0, ber_hi = 0.0;
  std::string decoder;
  std::uint64_t seed = 0;
  bool operator==(const SummaryRecord&) const = default;
};

/// Raw tallies for one grid point.
struct PointCounts {
  std::size_t trials = 0;
  std::size_t word_failures = 0;
  std::size_t bit_failures = 0;
  std::size_t bits_per_trial = 0;
  std::size_t unconverged = 0;
  PointCounts& operator+=(const PointCounts& o);
};

/// Runs trials [first, first + count) of one grid point on `threads` workers.
/// Each trial draws its error from trial_rng(seed, grid_index, t).
PointCounts run_trials(const FoliatedCluster& f, const TrialDecoder& decoder, double p, std::uint64_t seed,
                       std::uint64_t grid_index, std::size_t first, std::size_t count, std::size_t threads);

SummaryRecord summarize(const std::string& code, long k, std::size_t layers, double p, const PointCounts& counts,
                        DecoderKind decoder, std::uint64_t seed);

using ProgressFn = std::function<void(const SummaryRecord&)>;

/// One record per (code, L, p) in config order. Grid points are numbered in
/// that order for seeding, so results do not depend on the worker count.
std::vector<SummaryRecord> run_campaign(const CampaignConfig& cfg, const ProgressFn& progress = {});

inline constexpr std::string_view kCsvHeader = "code,k,L,p,trials,wer,wer_lo,wer_hi,ber,ber_lo,ber_hi,decoder,seed";

void write_csv(std::ostream& out, const std::vector<SummaryRecord>& records);
/// Throws std::invalid_argument on a bad header or row.
std::vector<SummaryRecord> parse_csv(std::istream& in);
void write_json(std::ostream& out, const std::vector<SummaryRecord>& records);
/// Writes to cfg-style destination: `path` empty means standard output.
void emit_results(const std::vector<SummaryRecord>& records, OutputFormat format, const std::string& path);

}  // namespace fqec
