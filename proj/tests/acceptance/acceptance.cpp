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

// Acceptance run: prints one PASS/FAIL line per criterion and exits 0 unless
// the run itself breaks. Verdicts live in the printed lines.

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fqec/campaign.hpp"
#include "fqec/cluster.hpp"
#include "fqec/codes.hpp"
#include "fqec/decoder.hpp"
#include "fqec/foliation.hpp"
#include "fqec/map_decoder.hpp"
#include "fqec/noise.hpp"
#include "fqec/sector.hpp"
#include "fqec/sheet_decoder.hpp"
#include "test_support.hpp"

namespace fqec {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_s, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, fmt::format("exception: {}", e.what()));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs <= budget_s, fmt::format("took {:.1f} s, budget {:.0f} s", secs, budget_s));
  if (!v.pass) ++failures;
  fmt::print("{} {} {} [{:.2f} s]{}{}\n", v.pass ? "PASS" : "FAIL", id, title, secs, v.detail.empty() ? "" : ": ",
             v.detail);
  std::fflush(stdout);
}

BitVector one_based(std::size_t n, std::initializer_list<std::size_t> support) {
  BitVector v(n);
  for (std::size_t j : support) v.set(j - 1);
  return v;
}

bool has_row(const BitMatrix& m, const BitVector& row) {
  for (const auto& r : m) {
    if (r == row) return true;
  }
  return false;
}

std::vector<CssCode> small_codes() { return {steane_code(), shor_code(), make_surface(3)}; }

void construction(Verdict& v) {
  const CssCode steane = steane_code(), shor = shor_code(), surf = make_surface(3);
  for (const CssCode* c : {&steane, &shor, &surf}) {
    const ValidationReport r = validate(*c);
    v.require(r.ok() && r.k == 1, fmt::format("{} {}", c->label, r.describe()));
  }
  for (const auto& row : {one_based(7, {1, 2, 6, 7}), one_based(7, {2, 3, 4, 7}), one_based(7, {4, 5, 6, 7})}) {
    v.require(has_row(steane.bz, row), "Steane S_Z row " + row.to_string() + " missing");
  }
  for (std::size_t a : {1u, 2u, 4u, 5u, 7u, 8u}) {
    v.require(has_row(shor.bz, one_based(9, {a, a + 1})), fmt::format("Shor Z{}Z{} missing", a, a + 1));
  }
  v.require(has_row(surf.bz, one_based(surf.n, {2, 4, 5, 7})), "surface Z2Z4Z5Z7 missing");
  v.require(has_row(surf.bx, one_based(surf.n, {4, 6, 7, 9})), "surface X4X6X7X9 missing");
  const DistanceResult d = min_distance(steane, 3);
  v.require(d.exact && d.value == 3, "Steane " + d.describe());
  v.note("Steane " + d.describe());
}

void clusterization(Verdict& v) {
  for (const CssCode& c : small_codes()) {
    const ClusterGraph g = progenitor(c);
    const std::vector<int> plus(c.bz.rows(), +1);
    const CodestateReport base = codestate_report(c, measure_out_ancillas(g, plus));
    v.require(base.matches(plus), c.label + ": forced +1 outcomes do not give the codestate");
    for (std::size_t a = 0; a < plus.size(); ++a) {
      std::vector<int> flipped = plus;
      flipped[a] = -1;
      const CodestateReport r = codestate_report(c, measure_out_ancillas(g, flipped));
      bool only_a = r.matches(flipped);
      for (std::size_t b = 0; b < plus.size(); ++b) only_a = only_a && (r.z_signs[b] == std::optional<int>(b == a ? -1 : +1));
      v.require(only_a, fmt::format("{}: flipping ancilla {} is not a single S_Z sign flip", c.label, a));
    }
    v.require(sx_from_cluster_products(c, g).all_ok(), c.label + ": S_X cluster products");
  }
  const CssCode steane = steane_code();
  const ClusterGraph g = progenitor(steane);
  const StabilizerTableau t = cluster_state_tableau(g);
  PauliString prod(g.num_vertices());
  for (std::size_t j : {0u, 1u, 5u, 6u}) prod *= t.generators()[j];
  BitVector want(g.num_vertices());
  for (std::size_t j : {0u, 1u, 5u, 6u}) want.set(j);
  v.require(prod == PauliString::x_type(want), "C1C2C6C7 = " + prod.to_string());
}

void foliation_algebra(Verdict& v) {
  std::size_t instances = 0, tableau_checked = 0;
  for (const auto& name : registry_names()) {
    const CssCode c = code_from_name(name);
    for (std::size_t layers : {1u, 2u, 3u}) {
      const FoliatedCluster f(c, layers);
      const CheckMatrix checks = parity_checks(f);
      const LogicalCorrelatorMatrix lambda = logical_correlators(f);
      const std::string where = fmt::format("{} L={}", name, layers);
      v.require(multiply_transpose(lambda.lambda, checks.h).is_zero(), where + ": lambda h^T != 0");
      BitVector primal(f.num_qubits()), dual(f.num_qubits());
      for (std::size_t r = 0; r < checks.h.rows(); ++r) {
        const CheckCenter& ctr = checks.centers[r];
        (ctr.sector == Sector::kPrimal ? primal : dual) |= checks.h[r];
        const bool boundary = ctr.sheet == 1 || ctr.sheet == f.num_sheets();
        const std::size_t w = f.sheet_code(ctr.sheet).bx[ctr.row].weight() + (boundary ? 1 : 2);
        v.require(checks.h[r].weight() == w, fmt::format("{}: check {} has weight {}, want {}", where, r,
                                                         checks.h[r].weight(), w));
      }
      v.require(primal.overlap(dual) == 0, where + ": sector supports overlap");
      if (f.num_qubits() <= 256) {
        const StabilizerTableau t = foliated_cluster_tableau(f);
        for (const auto& row : checks.h) {
          v.require(t.contains(PauliString::x_type(row)) == std::optional<int>(+1), where + ": check not a +1 member");
        }
        ++tableau_checked;
      }
      ++instances;
    }
  }
  v.note(fmt::format("{} instances, {} with tableau membership", instances, tableau_checked));
}

void bell_pair(Verdict& v) {
  StabilizerTableau::Rng rng(2026);
  for (const CssCode& c : {steane_code(), make_surface(3)}) {
    for (std::size_t layers : {1u, 2u}) {
      const FoliatedCluster f(c, layers);
      const std::vector<int> plus(f.num_qubits(), +1);
      v.require(bell_pair_reduction(f, plus).ok(), fmt::format("{} L={} all-plus", c.label, layers));
      for (int trial = 0; trial < 5; ++trial) {
        v.require(bell_pair_reduction(f, std::nullopt, &rng).ok(),
                  fmt::format("{} L={} random outcomes #{}", c.label, layers, trial));
      }
    }
  }
}

void distance(Verdict& v) {
  for (const CssCode& c : small_codes()) {
    for (std::size_t layers : {1u, 2u}) {
      const FoliatedDistance d = foliated_distance(FoliatedCluster(c, layers), 3);
      const std::string line =
          fmt::format("{} L={} {} (primal {}, dual {})", c.label, layers, d.describe(), d.primal_weight, d.dual_weight);
      v.require(d.exact && d.value == 3, line);
      if (d.exact && d.value == 3) v.note(line);
    }
  }
}

void decoder_equivalence(Verdict& v) {
  const CssCode conv = code_from_name("conv");
  v.require(conv.n <= 18, fmt::format("example convolutional code has n = {}", conv.n));
  const EnumerationSheetDecoder en(conv.bx);
  const TrellisSheetDecoder tr(conv.bx);
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> pu(0.001, 0.4), qu(0.001, 0.5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(conv.n), q(conv.bx.rows());
    for (auto& x : p) x = pu(rng);
    for (auto& x : q) x = qu(rng);
    const BitVector s = testing::random_vector(q.size(), rng);
    const SheetMarginals a = en.marginals(p, q, s), b = tr.marginals(p, q, s);
    for (std::size_t j = 0; j < a.qubit.size(); ++j) worst = std::max(worst, std::abs(a.qubit[j] - b.qubit[j]));
    for (std::size_t r = 0; r < a.flip.size(); ++r) worst = std::max(worst, std::abs(a.flip[r] - b.flip[r]));
  }
  v.require(worst <= 1e-9, fmt::format("trellis vs enumeration max diff {:.3g}", worst));
  v.note(fmt::format("100 instances, max diff {:.3g}", worst));

  // Uninformative flips: the one-sheet (dual, L = 1) sectors, where every
  // check's flip prior is built from ancilla priors alone.
  double leak = 0.0;
  for (const auto& name : registry_names()) {
    const FoliatedCluster f(code_from_name(name), 1);
    const CheckMatrix checks = parity_checks(f);
    const SectorProblem sp = sector_problem(f, checks, logical_correlators(f), Sector::kDual);
    const DecoderKind kind = sp.sheet_checks.cols() <= 20 ? DecoderKind::kBpEnum : DecoderKind::kBpTrellis;
    const BpDecoder bp(sp, std::shared_ptr<const SheetDecoder>(make_sheet_decoder(kind, sp.sheet_checks)));
    std::vector<double> priors(sp.num_columns());
    for (std::size_t j = 0; j < priors.size(); ++j) priors[j] = sp.column_is_code[j] ? pu(rng) : 0.5;
    for (int trial = 0; trial < 10; ++trial) {
      BitVector s = testing::random_vector(sp.h.rows(), rng);
      s.set(0);
      const SectorDecodeResult r = bp.decode(priors, s);
      for (std::size_t j = 0; j < priors.size(); ++j) {
        if (sp.column_is_code[j]) leak = std::max(leak, std::abs(r.posterior[j] - priors[j]));
      }
    }
  }
  // Rounding in the 2^18-term enumeration sums is the only allowed shift.
  v.require(leak <= 1e-9, fmt::format("bp uninformative posterior shift {:.3g}", leak));
  v.note(fmt::format("uninformative shift {:.3g}", leak));
}

// Bell-mode simulation: everything except the boundary code qubits is
// measured in X after the error. Primal correlators are then read against the
// residual X̄X̄ sign and dual correlators against the residual Z̄Z̄ sign.
void classification(Verdict& v) {
  const FoliatedCluster f(steane_code(), 1);
  const std::size_t n = f.num_qubits(), last = f.num_sheets();
  const TrialDecoder dec(f, DecoderKind::kBpEnum, 0.05);
  const LogicalCorrelatorMatrix& lambda = dec.correlators();
  const std::size_t k = lambda.k();
  BitVector measured(n);
  for (std::size_t q : bell_measured_qubits(f)) measured.set(q);
  const BitVector kept = measured ^ BitVector::from_string(std::string(n, '1'));
  const StabilizerTableau clean = foliated_cluster_tableau(f);

  // Sign of X on `support` in `state`, as a bit; nullopt when it is not a stabilizer.
  auto x_bit = [](const StabilizerTableau& state, const BitVector& support) -> std::optional<bool> {
    if (support.none()) return false;
    const auto sign = state.contains(PauliString::x_type(support));
    if (!sign) return std::nullopt;
    return *sign < 0;
  };
  // Z̄ ⊗ Z̄ on the boundary sheets, read off a dual correlator row.
  auto zz = [&](const BitVector& row) {
    BitVector z(n);
    for (std::size_t j = 0; j < f.code().n; ++j) {
      if (row.get(f.code_qubit(2, j))) {
        z.set(f.code_qubit(1, j));
        z.set(f.code_qubit(last, j));
      }
    }
    return PauliString::z_type(z);
  };

  StabilizerTableau::Rng outcome_rng(707);
  std::size_t disagreements = 0, undetermined = 0, failing = 0;
  const std::size_t patterns = 1000;
  for (std::uint64_t t = 0; t < patterns; ++t) {
    Rng rng = trial_rng(7, 0, t);
    const BitVector e = sample_iid_z(f, 0.08, rng);
    StabilizerTableau state = clean;
    for (std::size_t q : e.support()) state.apply_z(q);
    BitVector minus(n);
    for (std::size_t q : measured.support()) {
      if (state.measure_x(q, std::nullopt, &outcome_rng).value < 0) minus.set(q);
    }
    BitVector s(dec.checks().h.rows());
    for (std::size_t r = 0; r < s.size(); ++r) {
      const BitVector& row = dec.checks().h[r];
      const auto rest = x_bit(state, row & kept);
      if (!rest) {
        ++undetermined;
        continue;
      }
      if (row.dot(minus) != *rest) s.set(r);
    }
    if (s != syndrome(dec.checks(), e)) ++disagreements;

    const DecodeResult r = dec.decode(s);
    const BitVector fix = r.correction ^ r.ancilla_flips;
    for (std::size_t q : (fix & kept).support()) state.apply_z(q);
    const BitVector bits = dec.classify(e, r);
    for (std::size_t i = 0; i < dec.counted_rows().size(); ++i) {
      const std::size_t row_id = dec.counted_rows()[i];
      const BitVector& row = lambda.lambda[row_id];
      const bool predicted = (row & measured).dot(minus ^ fix);
      std::optional<bool> actual;
      if (row_id < k) {
        actual = x_bit(state, row & kept);
      } else if (const auto sign = state.contains(zz(row))) {
        actual = *sign < 0;
      }
      if (!actual) {
        ++undetermined;
      } else if ((*actual != predicted) != bits.get(i)) {
        ++disagreements;
      }
    }
    failing += bits.any();
  }
  v.require(disagreements == 0 && undetermined == 0,
            fmt::format("{} disagreements, {} undetermined signs", disagreements, undetermined));
  v.note(fmt::format("{} patterns, {} logical failures", patterns, failing));
}

// Exact class-failure probability of the MAP rule, from coset sums.
double exact_map_failure(const SectorProblem& sp, double p) {
  const std::size_t n = sp.num_columns();
  std::vector<std::uint64_t> hcol(n, 0), lcol(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < sp.h.rows(); ++r) hcol[j] |= std::uint64_t{sp.h.get(r, j)} << r;
    for (std::size_t r = 0; r < sp.lambda.rows(); ++r) lcol[j] |= std::uint64_t{sp.lambda.get(r, j)} << r;
  }
  const std::size_t classes = std::size_t{1} << sp.lambda.rows();
  std::vector<std::vector<double>> weight(std::size_t{1} << sp.h.rows(), std::vector<double>(classes, 0.0));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::uint64_t s = 0, l = 0;
    double w = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const bool bit = (m >> j) & 1;
      w *= bit ? p : 1 - p;
      if (bit) {
        s ^= hcol[j];
        l ^= lcol[j];
      }
    }
    weight[s][l] += w;
  }
  double fail = 0.0;
  for (const auto& by_class : weight) {
    double total = 0.0, best = 0.0;
    for (double w : by_class) {
      total += w;
      best = std::max(best, w);
    }
    fail += total - best;
  }
  return fail;
}

void monte_carlo_vs_exact(Verdict& v) {
  const FoliatedCluster f(steane_code(), 1);
  const SectorProblem sp = sector_problem(f, parity_checks(f), logical_correlators(f), Sector::kPrimal);
  const std::size_t trials = 100000;
  std::uint64_t grid = 0;
  for (double p : {0.005, 0.01, 0.02}) {
    const double exact = exact_map_failure(sp, p);
    const TrialDecoder dec(f, DecoderKind::kMapOracle, p, SectorSelection::kPrimal);
    const PointCounts counts = run_trials(f, dec, p, 8, grid++, 0, trials, 1);
    const double wer = static_cast<double>(counts.word_failures) / counts.trials;
    const double sigma = std::sqrt(exact * (1 - exact) / trials);
    const std::string line = fmt::format("p={} WER {:.5f} exact {:.5f} ({:.2f} sigma)", p, wer, exact,
                                         sigma > 0 ? std::abs(wer - exact) / sigma : 0.0);
    v.require(std::abs(wer - exact) <= 3 * sigma, line);
    if (std::abs(wer - exact) <= 3 * sigma) v.note(line);
  }
}

SummaryRecord point(const CssCode& c, std::size_t layers, double p, DecoderKind kind, std::size_t trials,
                    std::uint64_t grid, SectorSelection sectors = SectorSelection::kBoth) {
  const FoliatedCluster f(c, layers);
  const TrialDecoder dec(f, kind, p, sectors);
  const PointCounts counts = run_trials(f, dec, p, 9, grid, 0, trials, 1);
  return summarize(c.label, c.k(), layers, p, counts, kind, 9);
}

double sigma_of(const SummaryRecord& r) { return std::sqrt(std::max(r.wer * (1 - r.wer), 1e-12) / r.trials); }

void pseudo_threshold(Verdict& v, std::vector<SummaryRecord>& all) {
  // (a) surface d = 3 and 5 with L = d. Sheets of d = 5 exceed the
  // enumeration cap, so both curves use the trellis back end.
  const std::vector<double> ps = {0.005, 0.01, 0.02, 0.03, 0.04, 0.05};
  std::vector<double> diff;
  std::string curve;
  std::uint64_t grid = 100;
  for (double p : ps) {
    const SummaryRecord a = point(make_surface(3), 3, p, DecoderKind::kBpTrellis, 2000, grid++);
    const SummaryRecord b = point(make_surface(5), 5, p, DecoderKind::kBpTrellis, 1000, grid++);
    all.push_back(a);
    all.push_back(b);
    diff.push_back(b.wer - a.wer);
    curve += fmt::format(" p={}:{:.3f}/{:.3f}", p, a.wer, b.wer);
  }
  bool crossing = false;
  for (std::size_t i = 0; i + 1 < diff.size(); ++i) crossing = crossing || (diff[i] <= 0) != (diff[i + 1] <= 0);
  v.require(crossing, "(a) no d=3/d=5 crossing in [0.5%, 5%]");
  v.note("(a) WER d3/d5" + curve);
  // Diagnostic only: the same curves counting the primal sector alone.
  std::string primal_curve;
  for (double p : {0.005, 0.02, 0.05}) {
    const SummaryRecord a =
        point(make_surface(3), 3, p, DecoderKind::kBpTrellis, 2000, grid++, SectorSelection::kPrimal);
    const SummaryRecord b =
        point(make_surface(5), 5, p, DecoderKind::kBpTrellis, 1000, grid++, SectorSelection::kPrimal);
    all.push_back(a);
    all.push_back(b);
    primal_curve += fmt::format(" p={}:{:.3f}/{:.3f}", p, a.wer, b.wer);
  }
  v.note("(a) primal-only d3/d5" + primal_curve);

  // (b) Steane at p = 1%, WER non-decreasing in L within 3 sigma.
  std::vector<SummaryRecord> byl;
  for (std::size_t layers = 1; layers <= 4; ++layers) {
    byl.push_back(point(steane_code(), layers, 0.01, DecoderKind::kBpEnum, 20000, grid++));
    all.push_back(byl.back());
  }
  std::string trend;
  for (std::size_t i = 0; i < byl.size(); ++i) {
    trend += fmt::format(" L={}:{:.4f}", i + 1, byl[i].wer);
    if (i == 0) continue;
    const double slack = 3 * std::hypot(sigma_of(byl[i]), sigma_of(byl[i - 1]));
    v.require(byl[i].wer >= byl[i - 1].wer - slack, fmt::format("(b) WER drops from L={} to L={}", i, i + 1));
  }
  v.note("(b)" + trend);

  // (c) over every record produced above.
  for (const auto& r : all) {
    v.require(r.ber <= r.wer, fmt::format("(c) BER > WER for {} L={} p={}", r.code, r.layers, r.p));
  }
}

void reproducibility(Verdict& v) {
  CampaignConfig cfg;
  cfg.codes = {"steane", "surface3"};
  cfg.layers = {1, 2};
  cfg.ps = {0.01, 0.03};
  cfg.trials = 1500;
  cfg.seed = 10;
  cfg.threads = 1;
  std::ostringstream one, eight;
  write_csv(one, run_campaign(cfg));
  cfg.threads = 8;
  write_csv(eight, run_campaign(cfg));
  v.require(one.str() == eight.str(), "CSV differs between 1 and 8 workers");
  v.note(fmt::format("{} bytes of CSV identical", one.str().size()));
}

}  // namespace
}  // namespace fqec

int main() {
  using namespace fqec;
  criterion("1", "construction suite", 1, construction);
  criterion("2", "clusterization oracle", 10, clusterization);
  criterion("3", "foliation algebra", 10, foliation_algebra);
  criterion("4", "Bell-pair property", 60, bell_pair);
  criterion("5", "distance inheritance", 600, distance);
  criterion("6", "decoder equivalences", 60, decoder_equivalence);
  criterion("7", "classification oracle", 60, classification);
  criterion("8", "Monte Carlo vs exact", 600, monte_carlo_vs_exact);
  std::vector<SummaryRecord> records;
  criterion("9", "pseudo-threshold behaviour", 1200, [&](Verdict& v) { pseudo_threshold(v, records); });
  criterion("10", "reproducibility", 120, reproducibility);
  fmt::print("{} of 10 criteria failed\n", failures);
  return 0;
}
