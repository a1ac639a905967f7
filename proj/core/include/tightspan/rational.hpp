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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tightspan {

// Exact rational scalar used for every distance, weight and coordinate.
using Rational = mpq_class;

// Parses "p/q", an integer, or a plain decimal ("0.25", "-3.5") into a
// canonical rational. Exponent notation is rejected. Throws InputError.
Rational parse_rational(std::string_view text);

// Canonical exact form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Decimal approximation rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace tightspan
