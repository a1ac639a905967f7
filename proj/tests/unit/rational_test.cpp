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

#include "tightspan/rational.hpp"

#include <gtest/gtest.h>

#include "tightspan/errors.hpp"

namespace tightspan {
namespace {

TEST(ParseRational, AcceptsFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-3.5"), Rational(-7, 2));
  EXPECT_EQ(parse_rational("12."), Rational(12));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
}

TEST(ParseRational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1e3", "1/2/3", "--1", "1.2.3", "/3", "3/", " "}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(RationalFormat, ExactAndDecimal) {
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_decimal(Rational(1, 3), 3), "0.333");
  EXPECT_EQ(to_decimal(Rational(2, 3), 2), "0.67");
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(Rational(5), 0), "5");
  EXPECT_EQ(abs(Rational(-3, 2)), Rational(3, 2));
}

}  // namespace
}  // namespace tightspan
