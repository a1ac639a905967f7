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

#include "tightspan/metric.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tightspan/errors.hpp"

namespace tightspan {
namespace {

DistanceMatrix matrix(std::vector<std::vector<Rational>> rows) {
  std::vector<Rational> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return DistanceMatrix(fixtures::numbered_taxa(rows.size()), flat);
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

TEST(DistanceMatrix, NamesTheOffendingEntry) {
  const auto asym = error_of([] { matrix({{0, 1, 2}, {1, 0, 3}, {2, 4, 0}}); });
  EXPECT_NE(asym.find("(2,3)"), std::string::npos) << asym;
  const auto diag = error_of([] { matrix({{0, 1}, {1, 5}}); });
  EXPECT_NE(diag.find("(2,2)"), std::string::npos) << diag;
  EXPECT_THROW(DistanceMatrix(fixtures::numbered_taxa(3), std::vector<Rational>(4, Rational(0))), InputError);
}

TEST(FiniteMetric, ReportsTheViolatedTriangle) {
  const auto msg = error_of([] { FiniteMetric(matrix({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})); });
  EXPECT_NE(msg.find("triangle inequality violated"), std::string::npos) << msg;
  EXPECT_NE(msg.find("d(1,3)=5"), std::string::npos) << msg;
  EXPECT_THROW(FiniteMetric(matrix({{0, -1}, {-1, 0}})), InputError);
  EXPECT_TRUE(FiniteMetric(matrix({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}})).is_pseudometric());
}

TEST(Synthesize, OctahedralDistances) {
  // Frozen from the Python brute force: d(1,4) = 4, d(1,2) = 2.
  const FiniteMetric d = synthesize(fixtures::octahedral());
  EXPECT_EQ(d(0, 3), 4);
  EXPECT_EQ(d(0, 1), 2);
  EXPECT_EQ(d(2, 5), 4);
  EXPECT_FALSE(d.is_pseudometric());
}

TEST(IsolationIndex, KnownValues) {
  const FiniteMetric oct = synthesize(fixtures::octahedral());
  EXPECT_EQ(isolation_index(oct, Split(0b000111, 6)), 1);
  EXPECT_EQ(isolation_index(oct, Split(0b000011, 6)), 0);
  // Path a - b - c with d(a,b) = 1, d(b,c) = 2.
  const FiniteMetric path(matrix({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}));
  EXPECT_EQ(isolation_index(path, Split(0b010, 3)), 0);
  EXPECT_EQ(isolation_index(path, Split(0b100, 3)), 2);
  EXPECT_EQ(isolation_index(path, Split(0b001, 3)), 1);
}

TEST(Decompose, OctahedralRoundTrip) {
  const auto sys = fixtures::octahedral();
  const auto r = decompose(synthesize(sys));
  EXPECT_TRUE(r.totally_split_decomposable);
  EXPECT_TRUE(r.residual.is_zero());
  EXPECT_EQ(r.system, sys);
}

TEST(Decompose, CompleteBipartiteK23HasResidual) {
  // Graph metric of K_{2,3}: parts {1,2} and {3,4,5}.
  std::vector<std::vector<Rational>> rows(5, std::vector<Rational>(5, Rational(0)));
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = 0; y < 5; ++y) {
      if (x != y) rows[x][y] = ((x < 2) == (y < 2)) ? 2 : 1;
    }
  }
  const auto r = decompose(FiniteMetric(matrix(rows)));
  EXPECT_FALSE(r.totally_split_decomposable);
  EXPECT_FALSE(r.residual.is_zero());
  EXPECT_EQ(synthesize(r.system).matrix() + r.residual, matrix(rows));
}

TEST(Decompose, RandomCircularRoundTrips) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sys = fixtures::random_circular(rng, 4 + trial % 5, 8);
    const auto r = decompose(synthesize(sys));
    ASSERT_EQ(r.system, sys);
    ASSERT_TRUE(r.residual.is_zero());
  }
}

TEST(Decompose, RefusesLargeInputs) {
  const std::size_t n = kMaxDecomposeTaxa + 1;
  DistanceMatrix m(fixtures::numbered_taxa(n));
  EXPECT_THROW(decompose(FiniteMetric(m)), LimitError);
}

TEST(SplitMetric, ZeroOneEntries) {
  const auto m = split_metric(fixtures::numbered_taxa(3), Split(0b001, 3));
  EXPECT_EQ(m(0, 1), 1);
  EXPECT_EQ(m(1, 2), 0);
  EXPECT_EQ((m - m).is_zero(), true);
}

}  // namespace
}  // namespace tightspan
