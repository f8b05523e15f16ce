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

#include "fqec/code_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fqec/codes.hpp"
#include "json.hpp"

namespace fqec {

namespace {

using nlohmann::json;

BitMatrix supports_to_matrix(const json& rows, std::size_t cols, std::size_t base, const char* field) {
  if (!rows.is_array()) throw CodeError(std::string("code spec: '") + field + "' must be a list of lists");
  BitMatrix m(0, cols);
  for (const auto& row : rows) {
    if (!row.is_array()) throw CodeError(std::string("code spec: entries of '") + field + "' must be lists");
    BitVector v(cols);
    for (const auto& q : row) {
      const long idx = q.get<long>() - static_cast<long>(base);
      if (idx < 0 || idx >= static_cast<long>(cols)) {
        throw CodeError(std::string("code spec: index out of range in '") + field + "'");
      }
      if (v.get(static_cast<std::size_t>(idx))) {
        throw CodeError(std::string("code spec: repeated index in '") + field + "'");
      }
      v.set(static_cast<std::size_t>(idx));
    }
    m.append_row(std::move(v));
  }
  return m;
}

}  // namespace

CssCode parse_code_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw CodeError(std::string("code spec: ") + e.what());
  }
  if (!doc.is_object()) throw CodeError("code spec: top level must be an object");
  try {
    const std::size_t base = doc.value("index_base", 0u);
    if (base > 1) throw CodeError("code spec: index_base must be 0 or 1");
    std::string label = doc.value("label", std::string{});
    if (doc.contains("kernel")) {
      const json& k = doc.at("kernel");
      ConvolutionalKernel kernel;
      kernel.frame_length = k.at("frame_length").get<std::size_t>();
      kernel.span = k.at("span").get<std::size_t>();
      const std::size_t width = kernel.frame_length * kernel.span;
      kernel.z_rows = supports_to_matrix(k.at("z_rows"), width, base, "z_rows");
      kernel.x_rows = supports_to_matrix(k.at("x_rows"), width, base, "x_rows");
      const std::size_t frames = k.at("frames").get<std::size_t>();
      const Termination term = termination_from_string(k.value("termination", std::string("tailbiting")));
      return make_convolutional(kernel, frames, term, label);
    }
    const std::size_t n = doc.at("n").get<std::size_t>();
    BitMatrix bz = supports_to_matrix(doc.value("sz", json::array()), n, base, "sz");
    BitMatrix bx = supports_to_matrix(doc.value("sx", json::array()), n, base, "sx");
    return CssCode::checked(n, std::move(bz), std::move(bx), label.empty() ? "custom" : label);
  } catch (const json::exception& e) {
    throw CodeError(std::string("code spec: ") + e.what());
  }
}

CssCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodeError("cannot open code file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  CssCode code = parse_code_spec(ss.str());
  if (code.label == "custom") code.label = std::filesystem::path(path).stem().string();
  return code;
}

std::string to_code_spec(const CssCode& code) {
  auto rows = [](const BitMatrix& m) {
    json out = json::array();
    for (const auto& r : m) out.push_back(r.support());
    return out;
  };
  json doc = {{"label", code.label}, {"n", code.n}, {"index_base", 0}, {"sz", rows(code.bz)}, {"sx", rows(code.bx)}};
  return doc.dump(2);
}

CssCode resolve_code(const std::string& ref) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) return load_code_file(ref);
  return code_from_name(ref);
}

}  // namespace fqec
