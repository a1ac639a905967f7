// Copyright 2026 The tightspan Authors
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

#include <string>
#include <string_view>

#include "tightspan/metric.hpp"
#include "tightspan/splits.hpp"

namespace tightspan {

// Text formats. Both start with `taxa: a b c ...`; `#` starts a comment.
//   splits:  one line per split, `<weight> : <comma-separated labels of one side>`
//   matrix:  n rows of n whitespace-separated entries
// Numbers are decimals or `p/q`.
enum class InputKind { Matrix, Splits };

std::string_view to_string(InputKind kind);
// Throws InputError for anything other than "matrix" or "splits".
InputKind parse_input_kind(std::string_view name);

// Decided by the first body line: a `:` marks a splits file. A file with no
// body lines is a splits file with no splits.
InputKind detect_kind(std::string_view text);

// Parse errors are InputError and carry the 1-based line number.
WeightedSplitSystem parse_splits(std::string_view text);
DistanceMatrix parse_matrix(std::string_view text);

std::string write_splits(const WeightedSplitSystem& sys);
std::string write_matrix(const DistanceMatrix& m);

// Throws InputError if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace tightspan
