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

// foliate_qec: construction, inspection and simulation front end.
//
// Exit codes: 0 ok, 1 validation or capacity failure, 2 usage error.

#include <fmt/core.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "fqec/campaign.hpp"
#include "fqec/cluster.hpp"
#include "fqec/code_io.hpp"
#include "fqec/codes.hpp"
#include "fqec/css_code.hpp"
#include "fqec/decoder.hpp"
#include "fqec/foliation.hpp"
#include "fqec/noise.hpp"
#include "fqec/text_io.hpp"

namespace {

using namespace fqec;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_matrix(const char* name, const BitMatrix& m) {
  fmt::print("{} ({} x {}):\n", name, m.rows(), m.cols());
  for (const auto& row : m) fmt::print("  {}\n", row.to_string());
}

// Opens `path` for writing, or returns nullptr for "-" (standard output).
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path == "-") return nullptr;
  auto out = std::make_unique<std::ofstream>(path);
  if (!*out) throw UsageError("cannot open " + path + " for writing");
  return out;
}

template <typename Fn>
void emit_to(const std::string& path, Fn&& write) {
  auto file = open_output(path);
  write(file ? static_cast<std::ostream&>(*file) : std::cout);
}

int cmd_code_validate(const std::string& ref) {
  const CssCode code = resolve_code(ref);
  const ValidationReport r = validate(code);
  fmt::print("{}: n={} {}\n", code.label, code.n, r.describe());
  return r.ok() ? kExitOk : kExitInvalid;
}

int cmd_code_show(const std::string& ref, bool json) {
  const CssCode code = resolve_code(ref);
  if (json) {
    fmt::print("{}\n", to_code_spec(code));
    return kExitOk;
  }
  fmt::print("{}: n={} k={}\n", code.label, code.n, code.k());
  print_matrix("S_Z", code.bz);
  print_matrix("S_X", code.bx);
  const LogicalOperators logicals = logical_operators(code);
  print_matrix("logical X", logicals.xbars);
  print_matrix("logical Z", logicals.zbars);
  return kExitOk;
}

int cmd_code_distance(const std::string& ref, std::size_t w_max) {
  const CssCode code = resolve_code(ref);
  const DistanceResult d = min_distance(code, w_max);
  fmt::print("{}: {} (lightest X logical {}, Z logical {})\n", code.label, d.describe(), d.x_weight, d.z_weight);
  return kExitOk;
}

int cmd_clusterize(const std::string& ref, const std::string& emit, const std::string& output) {
  const CssCode code = resolve_code(ref);
  const ClusterGraph g = progenitor(code);
  if (emit == "edges") {
    emit_to(output, [&](std::ostream& out) { write_edge_list(out, g); });
  } else if (emit == "tableau") {
    const StabilizerTableau t = cluster_state_tableau(g);
    emit_to(output, [&](std::ostream& out) {
      for (const auto& gen : t.generators()) out << gen.to_string() << '\n';
    });
  } else {
    StabilizerTableau::Rng rng(0);
    const AncillaMeasurement m = measure_out_ancillas(g, std::vector<int>(code.bz.rows(), +1), &rng);
    const CodestateReport r = codestate_report(code, m);
    const bool ok = r.matches(std::vector<int>(code.bz.rows(), +1));
    fmt::print("{}: {} code qubits, {} ancillas, {} edges; forced +1 outcomes give the codestate: {}\n", code.label,
               code.n, code.bz.rows(), g.num_edges(), ok ? "yes" : "no");
    return ok ? kExitOk : kExitInvalid;
  }
  return kExitOk;
}

int cmd_foliate(const std::string& ref, std::size_t layers, const std::string& emit, const std::string& emit_h,
                const std::string& emit_lambda) {
  const FoliatedCluster f = foliate(resolve_code(ref), layers);
  const CheckMatrix checks = parity_checks(f);
  const LogicalCorrelatorMatrix lambda = logical_correlators(f);
  if (!emit.empty()) emit_to(emit, [&](std::ostream& out) { write_edge_list(out, f.graph()); });
  if (!emit_h.empty()) emit_to(emit_h, [&](std::ostream& out) { write_coordinate_matrix(out, checks.h); });
  if (!emit_lambda.empty()) emit_to(emit_lambda, [&](std::ostream& out) { write_coordinate_matrix(out, lambda.lambda); });
  if (emit.empty() && emit_h.empty() && emit_lambda.empty()) {
    fmt::print("{} L={}: {} sheets, {} qubits, {} edges ({} inter-sheet), {} checks, {} correlators\n",
               f.code().label, layers, f.num_sheets(), f.num_qubits(), f.graph().num_edges(), f.inter_edges().size(),
               checks.h.rows(), lambda.lambda.rows());
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& output, std::size_t threads, bool quiet) {
  CampaignConfig cfg = load_campaign_config(config_path);
  if (!output.empty()) cfg.output = output == "-" ? "" : output;
  if (threads > 0) cfg.threads = threads;
  validate(cfg);
  ProgressFn progress;
  if (!quiet) {
    progress = [](const SummaryRecord& r) {
      fmt::print(stderr, "{} L={} p={} trials={} wer={:.4g} ber={:.4g}\n", r.code, r.layers, r.p, r.trials, r.wer,
                 r.ber);
    };
  }
  emit_results(run_campaign(cfg, progress), cfg.format, cfg.output);
  return kExitOk;
}

struct DecodeOneArgs {
  std::string code = "steane";
  std::size_t layers = 1;
  double p = 0.01;
  std::uint64_t seed = 1;
  std::string decoder = "bp+enum";
  std::string sectors = "both";
  bool verbose = false;
};

int cmd_decode_one(const DecodeOneArgs& a) {
  if (a.p < 0.0 || a.p > 0.5) throw UsageError("--p must lie in [0, 0.5]");
  const FoliatedCluster f = foliate(resolve_code(a.code), a.layers);
  const TrialDecoder dec(f, decoder_kind_from_string(a.decoder), a.p, sector_selection_from_string(a.sectors));
  Rng rng = trial_rng(a.seed, 0, 0);
  const BitVector e = sample_iid_z(f, a.p, rng);
  const DecodeResult r = dec.run(e);
  if (a.verbose) {
    fmt::print("error      {}\n", e.to_string());
    fmt::print("syndrome   {}\n", syndrome(dec.checks(), e).to_string());
    fmt::print("correction {}\n", r.correction.to_string());
    fmt::print("flips      {}\n", r.ancilla_flips.to_string());
  }
  fmt::print("{} L={} p={} seed={} decoder={}: |e|={} failures={} converged={} iterations={}{}\n", f.code().label,
             a.layers, a.p, a.seed, a.decoder, e.weight(), r.failures.to_string(), r.converged ? "yes" : "no",
             r.iterations, r.repaired ? " repaired" : "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foliated quantum code construction and simulation"};
  app.require_subcommand(1);

  std::string code_ref = "steane";
  std::size_t w_max = 3;
  bool json = false;
  auto* code = app.add_subcommand("code", "Inspect a CSS code")->require_subcommand(1);
  auto* validate_cmd = code->add_subcommand("validate", "Check commutation, independence and k");
  auto* show = code->add_subcommand("show", "Print stabilizers and logical operators");
  auto* dist = code->add_subcommand("distance", "Exhaustive minimum distance up to --wmax");
  for (auto* sub : {validate_cmd, show, dist}) {
    sub->add_option("--code", code_ref, "Registry name or code-spec file")->capture_default_str();
  }
  show->add_flag("--json", json, "Print the code-spec document");
  dist->add_option("--wmax", w_max, "Weight cap")->capture_default_str()->check(CLI::PositiveNumber);

  std::string emit = "summary", output = "-";
  auto* clusterize = app.add_subcommand("clusterize", "Progenitor cluster of a code");
  clusterize->add_option("--code", code_ref, "Registry name or code-spec file")->capture_default_str();
  clusterize->add_option("--emit", emit, "summary | edges | tableau")
      ->capture_default_str()
      ->check(CLI::IsMember({"summary", "edges", "tableau"}));
  clusterize->add_option("--output", output, "Output file, - for stdout")->capture_default_str();

  std::size_t layers = 1;
  std::string emit_graph, emit_h, emit_lambda;
  auto* foliate_cmd = app.add_subcommand("foliate", "Foliated cluster, checks and correlators");
  foliate_cmd->add_option("--code", code_ref, "Registry name or code-spec file")->capture_default_str();
  foliate_cmd->add_option("--layers,-L", layers, "Number of layers L")->capture_default_str()->check(
      CLI::PositiveNumber);
  foliate_cmd->add_option("--emit", emit_graph, "Write the edge list to this file (- for stdout)");
  foliate_cmd->add_option("--emit-h", emit_h, "Write the check matrix (coordinate format)");
  foliate_cmd->add_option("--emit-lambda", emit_lambda, "Write the correlator matrix (coordinate format)");

  std::string config_path, sweep_output;
  std::size_t threads = 0;
  bool quiet = false;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo campaign from a config file");
  sweep->add_option("--config", config_path, "Campaign config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--output", sweep_output, "Override the config's output path (- for stdout)");
  sweep->add_option("--threads", threads, "Worker count (0: config or FOLIATE_QEC_THREADS)");
  sweep->add_flag("--quiet", quiet, "No per-point progress on stderr");

  DecodeOneArgs one;
  auto* decode_one = app.add_subcommand("decode-one", "Sample, decode and classify one trial");
  decode_one->add_option("--code", one.code, "Registry name or code-spec file")->capture_default_str();
  decode_one->add_option("--layers,-L", one.layers, "Number of layers L")->capture_default_str()->check(
      CLI::PositiveNumber);
  decode_one->add_option("--p", one.p, "Z error probability")->capture_default_str();
  decode_one->add_option("--seed", one.seed, "Trial seed")->capture_default_str();
  decode_one->add_option("--decoder", one.decoder, "bp+enum | bp+trellis | map-oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"bp+enum", "bp+trellis", "map-oracle"}));
  decode_one->add_option("--sectors", one.sectors, "primal | dual | both")
      ->capture_default_str()
      ->check(CLI::IsMember({"primal", "dual", "both"}));
  decode_one->add_flag("--verbose,-v", one.verbose, "Print error, syndrome and correction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_code_validate(code_ref);
    if (*show) return cmd_code_show(code_ref, json);
    if (*dist) return cmd_code_distance(code_ref, w_max);
    if (*clusterize) return cmd_clusterize(code_ref, emit, output);
    if (*foliate_cmd) return cmd_foliate(code_ref, layers, emit_graph, emit_h, emit_lambda);
    if (*sweep) return cmd_sweep(config_path, sweep_output, threads, quiet);
    if (*decode_one) return cmd_decode_one(one);
  } catch (const UsageError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInvalid;
  }
  return kExitUsage;
}
