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

#include <algorithm>
#include <stack>

namespace tightspan {

// Iterative Hopcroft-Tarjan with an edge stack.
BlockDecomposition biconnected_components(std::size_t vertex_count, const std::vector<Edge>& edges) {
  BlockDecomposition out;
  out.is_articulation.assign(vertex_count, false);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertex_count);  // (neighbour, edge)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(vertex_count, kNone), low(vertex_count, 0);
  std::vector<std::size_t> edge_stack;
  std::size_t timer = 0;

  struct Frame {
    std::size_t v;
    std::size_t parent_edge;
    std::size_t next = 0;
    std::size_t children = 0;
  };

  for (std::size_t root = 0; root < vertex_count; ++root) {
    if (disc[root] != kNone) continue;
    ++out.connected_components;
    std::vector<Frame> frames;
    frames.push_back({root, kNone});
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == kNone) {
          edge_stack.push_back(e);
          ++f.children;
          disc[w] = low[w] = timer++;
          frames.push_back({w, e});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) {
        if (done.children > 1) out.is_articulation[done.v] = true;
        continue;
      }
      Frame& parent = frames.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (frames.size() > 1) out.is_articulation[parent.v] = true;
        std::vector<std::size_t> block;
        while (true) {
          const std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.edge_blocks.push_back(std::move(block));
      }
    }
  }

  std::sort(out.edge_blocks.begin(), out.edge_blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& block : out.edge_blocks) {
    std::vector<std::size_t> verts;
    for (std::size_t e : block) {
      verts.push_back(edges[e].first);
      verts.push_back(edges[e].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.vertex_blocks.push_back(std::move(verts));
  }
  return out;
}

}  // namespace tightspan
