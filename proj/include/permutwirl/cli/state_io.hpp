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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "permutwirl/linalg.hpp"
#include "permutwirl/states.hpp"

namespace permutwirl::cli {

/// On-disk state: `{"dims": [...], "matrix": [[re, im], ...], "label": "..."}`
/// with the matrix flattened row-major. Parsing checks the schema only; density
/// validation is left to the caller so operator (`--raw`) mode can skip it.
struct StateFile {
  Dims dims;
  ComplexMatrix matrix;
  std::optional<std::string> label;
};

/// Throws ParseError naming the line/column or the offending field.
/// `source` is only used in messages.
StateFile parse_state(const std::string& text, const std::string& source = "<input>");

/// Serializes with shortest round-trip doubles, so re-parsing is bit-exact.
std::string dump_state(const StateFile& state, int indent = 2);

/// Reads the whole of `path`, or stdin when `path` is "-".
std::string read_text(const std::string& path);
/// Writes to `path`, or stdout when `path` is "-".
void write_text(const std::string& path, const std::string& text);

StateFile read_state(const std::string& path);

DensityMatrix to_density(const StateFile& state);

}  // namespace permutwirl::cli
