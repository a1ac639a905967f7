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

#include "tightspan/graph.hpp"

#include <gtest/gtest.h>

namespace tightspan {
namespace {

TEST(Biconnected, TrianglePlusPendant) {
  // 0-1-2-0 and 2-3.
  const auto b = biconnected_components(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  ASSERT_EQ(b.edge_blocks.size(), 2u);
  EXPECT_EQ(b.edge_blocks[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(b.edge_blocks[1], (std::vector<std::size_t>{3}));
  EXPECT_EQ(b.vertex_blocks[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(b.vertex_blocks[1], (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(b.is_articulation[2]);
  EXPECT_FALSE(b.is_articulation[0]);
  EXPECT_EQ(b.connected_components, 1u);
}

TEST(Biconnected, TwoSquaresSharingAVertexAndIsolatedPoint) {
  const auto b = biconnected_components(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  ASSERT_EQ(b.edge_blocks.size(), 2u);
  EXPECT_TRUE(b.is_articulation[3]);
  EXPECT_EQ(b.connected_components, 2u);
}

TEST(Biconnected, LongPathDoesNotRecurse) {
  const std::size_t n = 200000;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  const auto b = biconnected_components(n, edges);
  EXPECT_EQ(b.edge_blocks.size(), n - 1);
}

}  // namespace
}  // namespace tightspan
