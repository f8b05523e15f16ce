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

#include "fqec/codes.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <map>

namespace fqec {

namespace {

using Supports = std::vector<std::vector<std::size_t>>;

// One-based supports as printed for the standard codes.
BitMatrix one_based(std::size_t n, const Supports& supports) {
  Supports zero;
  for (const auto& s : supports) {
    auto& z = zero.emplace_back();
    for (std::size_t q : s) z.push_back(q - 1);
  }
  return BitMatrix::from_supports(n, zero);
}

}  // namespace

CssCode steane_code() {
  const Supports rows = {{1, 2, 6, 7}, {2, 3, 4, 7}, {4, 5, 6, 7}};
  return CssCode::checked(7, one_based(7, rows), one_based(7, rows), "steane");
}

CssCode shor_code() {
  const Supports z = {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9}};
  const Supports x = {{1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9}};
  return CssCode::checked(9, one_based(9, z), one_based(9, x), "shor");
}

CssCode make_surface(std::size_t d) {
  if (d < 3 || d % 2 == 0) throw CodeError(fmt::format("make_surface: distance must be odd and >= 3, got {}", d));
  const long side = static_cast<long>(2 * d - 1);
  std::map<std::pair<long, long>, std::size_t> index;
  for (long r = 0; r < side; ++r) {
    for (long c = 0; c < side; ++c) {
      if ((r + c) % 2 == 0) index.emplace(std::pair{r, c}, index.size());
    }
  }
  const std::size_t n = index.size();
  Supports z, x;
  for (long r = 0; r < side; ++r) {
    for (long c = 0; c < side; ++c) {
      if ((r + c) % 2 == 0) continue;
      std::vector<std::size_t> support;
      for (auto [dr, dc] : {std::pair{-1L, 0L}, {0L, -1L}, {0L, 1L}, {1L, 0L}}) {
        auto it = index.find({r + dr, c + dc});
        if (it != index.end()) support.push_back(it->second);
      }
      std::sort(support.begin(), support.end());
      (r % 2 == 1 ? z : x).push_back(std::move(support));
    }
  }
  return CssCode::checked(n, BitMatrix::from_supports(n, z), BitMatrix::from_supports(n, x),
                          fmt::format("surface{}", d));
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kOpen: return "open";
    case Termination::kTruncated: return "truncated";
    case Termination::kTailBiting: return "tailbiting";
  }
  return "?";
}

Termination termination_from_string(std::string_view text) {
  if (text == "open") return Termination::kOpen;
  if (text == "truncated") return Termination::kTruncated;
  if (text == "tailbiting" || text == "tail-biting") return Termination::kTailBiting;
  throw CodeError(fmt::format("unknown termination '{}'", text));
}

ConvolutionalKernel example_convolutional_kernel() {
  ConvolutionalKernel k;
  k.frame_length = 3;
  k.span = 3;
  k.z_rows = BitMatrix::from_supports(9, {{0, 1, 2, 3, 6, 7}});
  k.x_rows = k.z_rows;
  return k;
}

namespace {

BitMatrix translate_rows(const BitMatrix& kernel_rows, const ConvolutionalKernel& k, std::size_t frames,
                         Termination termination) {
  const std::size_t n = frames * k.frame_length;
  const long f = static_cast<long>(k.frame_length);
  const long span = static_cast<long>(k.span);
  const long frames_l = static_cast<long>(frames);
  long first = 0, last = 0;
  switch (termination) {
    case Termination::kOpen: first = 0; last = frames_l - span; break;
    case Termination::kTruncated: first = -(span - 1); last = frames_l - 1; break;
    case Termination::kTailBiting: first = 0; last = frames_l - 1; break;
  }
  BitMatrix out(0, n);
  for (long t = first; t <= last; ++t) {
    for (const auto& row : kernel_rows) {
      BitVector v(n);
      for (std::size_t i : row.support()) {
        long col = static_cast<long>(i) + t * f;
        if (termination == Termination::kTailBiting) {
          col = ((col % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
          v.flip(static_cast<std::size_t>(col));
        } else if (col >= 0 && col < static_cast<long>(n)) {
          v.set(static_cast<std::size_t>(col));
        }
      }
      if (v.any()) out.append_row(std::move(v));
    }
  }
  return out;
}

}  // namespace

CssCode make_convolutional(const ConvolutionalKernel& kernel, std::size_t frames, Termination termination,
                           std::string label) {
  const std::size_t width = kernel.frame_length * kernel.span;
  if (kernel.frame_length == 0 || kernel.span == 0) throw CodeError("make_convolutional: empty kernel");
  if ((!kernel.z_rows.empty() && kernel.z_rows.cols() != width) ||
      (!kernel.x_rows.empty() && kernel.x_rows.cols() != width)) {
    throw CodeError(fmt::format("make_convolutional: kernel rows must be {} columns wide", width));
  }
  if (frames < kernel.span) {
    throw CodeError(fmt::format("make_convolutional: need at least {} frames, got {}", kernel.span, frames));
  }
  const std::size_t n = frames * kernel.frame_length;
  BitMatrix bz = translate_rows(kernel.z_rows, kernel, frames, termination);
  BitMatrix bx = translate_rows(kernel.x_rows, kernel, frames, termination);
  if (label.empty()) label = fmt::format("conv{}-{}", frames, to_string(termination));
  CssCode code{n, std::move(bz), std::move(bx), std::move(label)};
  const ValidationReport report = validate(code);
  if (!report.commutation_ok) throw CodeError("make_convolutional: kernel translates do not commute");
  if (!report.ok()) throw CodeError("make_convolutional: " + report.describe());
  return code;
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CodeError(fmt::format("bad {} '{}' in code name", what, text));
  }
  return v;
}

}  // namespace

CssCode code_from_name(std::string_view name) {
  if (name == "steane") return steane_code();
  if (name == "shor") return shor_code();
  if (name == "conv") return make_convolutional(example_convolutional_kernel(), 6, Termination::kTailBiting, "conv6");
  if (name.starts_with("surface")) {
    std::string_view rest = name.substr(7);
    if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
    if (rest.empty()) throw CodeError("surface code name needs a distance, e.g. surface3");
    return make_surface(parse_count(rest, "distance"));
  }
  if (name.starts_with("conv:")) {
    std::string_view rest = name.substr(5);
    Termination term = Termination::kTailBiting;
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
      term = termination_from_string(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const std::size_t frames = parse_count(rest, "frame count");
    std::string label = fmt::format("conv{}", frames);
    if (term != Termination::kTailBiting) label += fmt::format("-{}", to_string(term));
    return make_convolutional(example_convolutional_kernel(), frames, term, label);
  }
  throw CodeError(fmt::format("unknown code '{}'", name));
}

std::vector<std::string> registry_names() { return {"steane", "shor", "surface3", "conv"}; }

}  // namespace fqec
