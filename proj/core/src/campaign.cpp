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

#include "fqec/campaign.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fqec/code_io.hpp"
#include "fqec/noise.hpp"
#include "json.hpp"

namespace fqec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <typename T>
T parse_integer(std::string_view text, std::string_view key) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(fmt::format("config: '{}' expects an integer, got '{}'", key, text));
  }
  return v;
}

double parse_double(std::string_view text, std::string_view key) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument(fmt::format("config: '{}' expects a number, got '{}'", key, text));
  }
  return v;
}

}  // namespace

CampaignConfig parse_campaign_config(std::string_view text) {
  CampaignConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(fmt::format("config line {}: expected 'key = value'", line_no));
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "code" || key == "codes") {
      cfg.codes.clear();
      for (auto v : split_list(value)) cfg.codes.emplace_back(v);
    } else if (key == "layers" || key == "L") {
      cfg.layers.clear();
      for (auto v : split_list(value)) cfg.layers.push_back(parse_integer<std::size_t>(v, key));
    } else if (key == "p") {
      cfg.ps.clear();
      for (auto v : split_list(value)) cfg.ps.push_back(parse_double(v, key));
    } else if (key == "trials") {
      cfg.trials = parse_integer<std::size_t>(value, key);
    } else if (key == "seed") {
      cfg.seed = parse_integer<std::uint64_t>(value, key);
    } else if (key == "decoder") {
      cfg.decoder = decoder_kind_from_string(value);
    } else if (key == "sectors") {
      cfg.sectors = sector_selection_from_string(value);
    } else if (key == "output") {
      cfg.output = std::string(value);
    } else if (key == "format") {
      if (value == "csv") {
        cfg.format = OutputFormat::kCsv;
      } else if (value == "json") {
        cfg.format = OutputFormat::kJson;
      } else {
        throw std::invalid_argument(fmt::format("config: unknown format '{}'", value));
      }
    } else if (key == "threads") {
      cfg.threads = parse_integer<std::size_t>(value, key);
    } else if (key == "min_failures") {
      cfg.min_failures = parse_integer<std::size_t>(value, key);
    } else if (key == "max_trials") {
      cfg.max_trials = parse_integer<std::size_t>(value, key);
    } else if (key == "batch") {
      cfg.batch = parse_integer<std::size_t>(value, key);
    } else if (key == "bp.max_iters") {
      cfg.bp.max_iters = parse_integer<std::size_t>(value, key);
    } else if (key == "bp.tol") {
      cfg.bp.tol = parse_double(value, key);
    } else if (key == "bp.damping") {
      cfg.bp.damping = parse_double(value, key);
    } else {
      throw std::invalid_argument(fmt::format("config line {}: unknown key '{}'", line_no, key));
    }
  }
  validate(cfg);
  return cfg;
}

CampaignConfig load_campaign_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_campaign_config(ss.str());
}

void validate(const CampaignConfig& cfg) {
  if (cfg.codes.empty()) throw std::invalid_argument("config: no codes");
  if (cfg.layers.empty()) throw std::invalid_argument("config: no layers");
  if (cfg.ps.empty()) throw std::invalid_argument("config: empty p grid");
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be at least 1");
  for (std::size_t L : cfg.layers) {
    if (L < 1) throw std::invalid_argument("config: layers must be at least 1");
  }
  for (double p : cfg.ps) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument(fmt::format("config: p = {} outside [0, 0.5]", p));
  }
  if (cfg.min_failures > 0 && cfg.batch < 1) throw std::invalid_argument("config: batch must be at least 1");
  if (cfg.max_trials != 0 && cfg.max_trials < cfg.trials) {
    throw std::invalid_argument("config: max_trials must be at least trials");
  }
}

std::size_t resolve_threads(const CampaignConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("FOLIATE_QEC_THREADS"); env != nullptr && *env != '\0') {
    return std::max<std::size_t>(1, parse_integer<std::size_t>(env, "FOLIATE_QEC_THREADS"));
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be positive");
  if (successes > trials) throw std::invalid_argument("wilson_interval: successes exceed trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  Interval iv{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) iv.lo = 0.0;
  if (successes == trials) iv.hi = 1.0;
  return iv;
}

PointCounts& PointCounts::operator+=(const PointCounts& o) {
  trials += o.trials;
  word_failures += o.word_failures;
  bit_failures += o.bit_failures;
  unconverged += o.unconverged;
  bits_per_trial = std::max(bits_per_trial, o.bits_per_trial);
  return *this;
}

PointCounts run_trials(const FoliatedCluster& f, const TrialDecoder& decoder, double p, std::uint64_t seed,
                       std::uint64_t grid_index, std::size_t first, std::size_t count, std::size_t threads) {
  PointCounts total;
  total.bits_per_trial = decoder.counted_rows().size();
  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr error;
  auto worker = [&] {
    PointCounts local;
    try {
      while (true) {
        const std::size_t begin = next.fetch_add(kChunk);
        if (begin >= count) break;
        const std::size_t end = std::min(count, begin + kChunk);
        for (std::size_t t = first + begin; t < first + end; ++t) {
          Rng rng = trial_rng(seed, grid_index, t);
          const BitVector e = sample_iid_z(f, p, rng);
          const DecodeResult r = decoder.run(e);
          const std::size_t w = r.failures.weight();
          ++local.trials;
          local.bit_failures += w;
          local.word_failures += w > 0 ? 1 : 0;
          local.unconverged += r.converged ? 0 : 1;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
      next = count;
    }
    std::lock_guard lock(mu);
    total += local;
  };
  const std::size_t n_workers = std::max<std::size_t>(1, std::min(threads, (count + kChunk - 1) / kChunk));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return total;
}

SummaryRecord summarize(const std::string& code, long k, std::size_t layers, double p, const PointCounts& counts,
                        DecoderKind decoder, std::uint64_t seed) {
  SummaryRecord r;
  r.code = code;
  r.k = k;
  r.layers = layers;
  r.p = p;
  r.trials = counts.trials;
  r.decoder = std::string(to_string(decoder));
  r.seed = seed;
  if (counts.trials == 0) return r;
  r.wer = static_cast<double>(counts.word_failures) / static_cast<double>(counts.trials);
  const Interval w = wilson_interval(counts.word_failures, counts.trials);
  r.wer_lo = w.lo;
  r.wer_hi = w.hi;
  const std::size_t bits = counts.trials * std::max<std::size_t>(1, counts.bits_per_trial);
  r.ber = static_cast<double>(counts.bit_failures) / static_cast<double>(bits);
  const Interval b = wilson_interval(counts.bit_failures, bits);
  r.ber_lo = b.lo;
  r.ber_hi = b.hi;
  return r;
}

std::vector<SummaryRecord> run_campaign(const CampaignConfig& cfg, const ProgressFn& progress) {
  validate(cfg);
  const std::size_t threads = resolve_threads(cfg);
  const std::size_t cap = cfg.max_trials != 0 ? cfg.max_trials : 10 * cfg.trials;
  std::vector<SummaryRecord> out;
  std::uint64_t grid_index = 0;
  for (const std::string& ref : cfg.codes) {
    const CssCode code = resolve_code(ref);
    for (std::size_t L : cfg.layers) {
      const FoliatedCluster f = foliate(code, L);
      for (double p : cfg.ps) {
        const TrialDecoder decoder(f, cfg.decoder, p, cfg.sectors, cfg.bp);
        PointCounts counts = run_trials(f, decoder, p, cfg.seed, grid_index, 0, cfg.trials, threads);
        while (cfg.min_failures > 0 && counts.word_failures < cfg.min_failures && counts.trials < cap) {
          const std::size_t more = std::min(cfg.batch, cap - counts.trials);
          counts += run_trials(f, decoder, p, cfg.seed, grid_index, counts.trials, more, threads);
        }
        out.push_back(summarize(code.label, code.k(), L, p, counts, cfg.decoder, cfg.seed));
        if (progress) progress(out.back());
        ++grid_index;
      }
    }
  }
  return out;
}

namespace {

std::string number(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

void write_csv(std::ostream& out, const std::vector<SummaryRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.code, r.k, r.layers, number(r.p), r.trials,
                       number(r.wer), number(r.wer_lo), number(r.wer_hi), number(r.ber), number(r.ber_lo),
                       number(r.ber_hi), r.decoder, r.seed);
  }
}

std::vector<SummaryRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCsvHeader) throw std::invalid_argument("csv: unexpected header");
  std::vector<SummaryRecord> out;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      f.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 13) throw std::invalid_argument("csv: expected 13 fields, got " + std::to_string(f.size()));
    SummaryRecord r;
    r.code = std::string(f[0]);
    r.k = parse_integer<long>(f[1], "k");
    r.layers = parse_integer<std::size_t>(f[2], "L");
    r.p = parse_double(f[3], "p");
    r.trials = parse_integer<std::size_t>(f[4], "trials");
    r.wer = parse_double(f[5], "wer");
    r.wer_lo = parse_double(f[6], "wer_lo");
    r.wer_hi = parse_double(f[7], "wer_hi");
    r.ber = parse_double(f[8], "ber");
    r.ber_lo = parse_double(f[9], "ber_lo");
    r.ber_hi = parse_double(f[10], "ber_hi");
    r.decoder = std::string(f[11]);
    r.seed = parse_integer<std::uint64_t>(f[12], "seed");
    out.push_back(std::move(r));
  }
  return out;
}

void write_json(std::ostream& out, const std::vector<SummaryRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"code", r.code},     {"k", r.k},           {"L", r.layers},     {"p", r.p},
                   {"trials", r.trials}, {"wer", r.wer},       {"wer_lo", r.wer_lo}, {"wer_hi", r.wer_hi},
                   {"ber", r.ber},       {"ber_lo", r.ber_lo}, {"ber_hi", r.ber_hi}, {"decoder", r.decoder},
                   {"seed", r.seed}});
  }
  out << arr.dump(2) << '\n';
}

void emit_results(const std::vector<SummaryRecord>& records, OutputFormat format, const std::string& path) {
  auto emit = [&](std::ostream& os) {
    if (format == OutputFormat::kCsv) {
      write_csv(os, records);
    } else {
      write_json(os, records);
    }
  };
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  emit(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace fqec
