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

#include "tightspan/linalg.hpp"

#include <gtest/gtest.h>

namespace tightspan::linalg {
namespace {

Matrix make(std::size_t r, std::size_t c, std::vector<int> values) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < values.size(); ++i) m.a[i] = values[i];
  return m;
}

TEST(Linalg, RankAndNullspace) {
  const Matrix m = make(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += m(i, j) * ns[0][j];
    EXPECT_EQ(dot, 0);
  }
}

TEST(Linalg, RowReduceGivesPivots) {
  Matrix m = make(2, 3, {0, 2, 4, 1, 1, 1});
  EXPECT_EQ(row_reduce(m), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(m(1, 1), 1);
  EXPECT_EQ(m(0, 1), 0);
}

TEST(Linalg, IntegerRankMatchesRationalRank) {
  std::vector<std::vector<mpz_class>> rows = {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}, {2, 0, 0}};
  EXPECT_EQ(integer_rank(rows), 3u);
  EXPECT_EQ(integer_rank({{2, 4}, {1, 2}}), 1u);
  EXPECT_EQ(integer_rank({}), 0u);
}

TEST(Linalg, AffineDimension) {
  EXPECT_EQ(affine_dimension({{0, 0}}), 0u);
  EXPECT_EQ(affine_dimension({{0, 0}, {1, 1}, {2, 2}}), 1u);
  EXPECT_EQ(affine_dimension({{0, 0}, {1, 0}, {0, 1}}), 2u);
}

}  // namespace
}  // namespace tightspan::linalg
