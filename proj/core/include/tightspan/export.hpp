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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tightspan/buneman.hpp"
#include "tightspan/kappa.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/oracle.hpp"
#include "tightspan/tight_span.hpp"

namespace tightspan {

struct ExportOptions {
  // Adds k-digit decimal approximations next to the exact values.
  std::optional<int> decimal_digits;
};

// "16V/32E/24F/8C3/1C4"
std::string format_counts(const std::vector<std::size_t>& counts);

// "1-cube", "3-cube", "rhombic dodecahedron", "consistent block"
std::string describe_block(const TightSpanBlock& block);

std::string buneman_summary(const BunemanComplex& complex);
std::string tight_span_summary(const PolytopalComplex& complex);

std::string buneman_json(const BunemanComplex& complex);
std::string tight_span_json(const PolytopalComplex& complex, const ExportOptions& options = {});
std::string tight_point_json(const TightPoint& point, const GroundSet& ground, const ExportOptions& options = {});
std::string report_json(const ComparisonReport& report);

std::string buneman_text(const BunemanComplex& complex);
std::string tight_span_text(const PolytopalComplex& complex, const ExportOptions& options = {});
std::string report_text(const ComparisonReport& report);

// 1-skeleta; edges are labelled with split ids.
std::string buneman_dot(const BunemanComplex& complex);
std::string tight_span_dot(const PolytopalComplex& complex);

}  // namespace tightspan
