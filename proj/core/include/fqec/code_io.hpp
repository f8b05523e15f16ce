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

#include <string>
#include <string_view>

#include "fqec/css_code.hpp"

namespace fqec {

// Code-spec files are JSON objects:
//
//   { "label": "steane", "n": 7, "index_base": 1,
//     "sz": [[1,2,6,7], [2,3,4,7], [4,5,6,7]],
//     "sx": [[1,2,6,7], [2,3,4,7], [4,5,6,7]] }
//
// or, for a convolutional code,
//
//   { "label": "conv6",
//     "kernel": { "frame_length": 3, "span": 3, "frames": 6,
//                 "termination": "tailbiting",
//                 "z_rows": [[0,1,2,3,6,7]], "x_rows": [[0,1,2,3,6,7]] } }
//
// "index_base" (0 or 1, default 0) applies to every support list in the file.
// "label" is optional.

/// Parses a code-spec document. Throws CodeError on schema or validity errors.
CssCode parse_code_spec(std::string_view json_text);
CssCode load_code_file(const std::string& path);
/// Zero-based "n"/"sz"/"sx" document for `code`.
std::string to_code_spec(const CssCode& code);

/// A path to an existing file is loaded as a code spec; anything else is
/// looked up with code_from_name.
CssCode resolve_code(const std::string& ref);

}  // namespace fqec
