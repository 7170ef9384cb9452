// Copyright 2026 The permutwirl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permutwirl/cli/state_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "permutwirl/error.hpp"

namespace permutwirl::cli {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& source, const std::string& field,
                              const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ": field '" + field + "': " + what);
}

}  // namespace

StateFile parse_state(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C" in the message.
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
  if (!doc.is_object()) field_error(source, "<root>", "expected a JSON object");

  StateFile state;
  const auto dims = doc.find("dims");
  if (dims == doc.end()) field_error(source, "dims", "missing");
  if (!dims->is_array() || dims->empty() || dims->size() > 2)
    field_error(source, "dims", "expected an array of one or two positive integers");
  std::size_t n = 1;
  for (std::size_t k = 0; k < dims->size(); ++k) {
    const auto& v = (*dims)[k];
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
      field_error(source, "dims[" + std::to_string(k) + "]", "expected a positive integer");
    state.dims.push_back(v.get<std::size_t>());
    n *= state.dims.back();
  }

  const auto matrix = doc.find("matrix");
  if (matrix == doc.end()) field_error(source, "matrix", "missing");
  if (!matrix->is_array() || matrix->size() != n * n)
    field_error(source, "matrix",
                "expected " + std::to_string(n * n) + " [re, im] pairs for dims product " +
                    std::to_string(n));
  state.matrix = ComplexMatrix(n, n);
  auto out = state.matrix.entries().begin();
  for (std::size_t k = 0; k < matrix->size(); ++k, ++out) {
    const auto& z = (*matrix)[k];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      field_error(source, "matrix[" + std::to_string(k) + "]",
                  "expected a [re, im] pair of numbers");
    *out = cplx(z[0].get<double>(), z[1].get<double>());
  }

  if (const auto label = doc.find("label"); label != doc.end()) {
    if (!label->is_string()) field_error(source, "label", "expected a string");
    state.label = label->get<std::string>();
  }
  return state;
}

std::string dump_state(const StateFile& state, int indent) {
  json doc;
  doc["dims"] = state.dims;
  json entries = json::array();
  for (const auto& z : state.matrix.entries()) entries.push_back({z.real(), z.imag()});
  doc["matrix"] = std::move(entries);
  if (state.label) doc["label"] = *state.label;
  return doc.dump(indent) + "\n";
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::ValidationError, "write to '" + path + "' failed");
}

StateFile read_state(const std::string& path) {
  return parse_state(read_text(path), path == "-" ? "<stdin>" : path);
}

DensityMatrix to_density(const StateFile& state) {
  return validate_density(state.matrix, state.dims);
}

}  // namespace permutwirl::cli
