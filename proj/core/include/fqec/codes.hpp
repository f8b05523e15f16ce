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
#include <string>
#include <string_view>
#include <vector>

#include "fqec/css_code.hpp"

namespace fqec {

/// [[7,1,3]] Steane code; self-dual. Qubits numbered 0..6.
CssCode steane_code();

/// [[9,1,3]] Shor code.
CssCode shor_code();

/// Planar surface code of odd distance d ≥ 3 on d² + (d−1)² qubits.
///
/// Qubits sit on the even-parity sites (r + c even) of a (2d−1)×(2d−1) grid
/// and are numbered row-major. Z checks sit on sites with odd r and even c,
/// X checks on even r and odd c, each acting on its (up to four) grid
/// neighbours; checks are listed row-major. For d = 3 this puts Z on {1,3,4,6}
/// and X on {3,5,6,8} (zero-based), i.e. Z₂Z₄Z₅Z₇ and X₄X₆X₇X₉ one-based.
/// Throws CodeError for even or small d.
CssCode make_surface(std::size_t d);

enum class Termination {
  kOpen,        // only translates that fit entirely
  kTruncated,   // every translate that touches the block, clipped to it
  kTailBiting,  // translates wrap cyclically around the block
};

std::string_view to_string(Termination t);
Termination termination_from_string(std::string_view text);

/// Stabilizer rows over `span` consecutive frames of `frame_length` qubits,
/// copied to every whole-frame offset.
struct ConvolutionalKernel {
  std::size_t frame_length = 0;
  std::size_t span = 0;
  BitMatrix z_rows;  // each span · frame_length wide
  BitMatrix x_rows;
};

/// Weight-6, self-dual, frame-length-3 kernel over three frames with support
/// {0,1,2,3,6,7}. Tail-biting on F ≥ 5 frames gives [[3F, F, 3]].
ConvolutionalKernel example_convolutional_kernel();

/// Code on frames · frame_length qubits built from whole-frame translates of
/// the kernel. Throws CodeError if translates fail to commute, rows become
/// dependent, or no translate fits.
CssCode make_convolutional(const ConvolutionalKernel& kernel, std::size_t frames,
                           Termination termination, std::string label = "");

/// Registry lookup: "steane", "shor", "surface3", "surface:D", "conv" (six
/// tail-biting frames of the example kernel), "conv:F[:open|truncated|tailbiting]".
/// Throws CodeError for unknown names.
CssCode code_from_name(std::string_view name);

/// Names accepted by code_from_name for the built-in set used in tests and docs.
std::vector<std::string> registry_names();

}  // namespace fqec
