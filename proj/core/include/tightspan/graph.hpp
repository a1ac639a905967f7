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
#include <utility>
#include <vector>

namespace tightspan {

using Edge = std::pair<std::size_t, std::size_t>;

// Biconnected components (blocks) of a simple undirected graph.
struct BlockDecomposition {
  // Edge indices per block, each sorted; blocks ordered by smallest edge index.
  std::vector<std::vector<std::size_t>> edge_blocks;
  // Vertex ids per block, sorted.
  std::vector<std::vector<std::size_t>> vertex_blocks;
  std::vector<bool> is_articulation;
  std::size_t connected_components = 0;
};

BlockDecomposition biconnected_components(std::size_t vertex_count, const std::vector<Edge>& edges);

}  // namespace tightspan
