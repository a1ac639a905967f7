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
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tightspan/rational.hpp"
#include "tightspan/splits.hpp"

namespace tightspan {

// Bit i set <=> split i. Systems are limited to 64 splits.
using SplitMask = std::uint64_t;
inline constexpr std::size_t kMaxSplits = 64;
inline constexpr std::size_t kDefaultSplitBound = 24;

inline constexpr SplitMask split_bit(std::size_t i) { return SplitMask{1} << i; }

// A point phi of the weight box H(S, alpha), stored by its value on the
// canonical side A_i of each split; phi(complement) = alpha_i/2 - value.
struct BunemanPoint {
  std::vector<Rational> side_value;

  bool operator==(const BunemanPoint& other) const = default;
};

// Vertex encoding: bit i set <=> the chosen side psi(S_i) (the side where
// phi vanishes) is the canonical side A_i. The chosen sides must pairwise
// intersect.
SplitMask taxon_choice(const WeightedSplitSystem& sys, std::size_t x);
bool is_buneman_vertex(const WeightedSplitSystem& sys, SplitMask choice);
BunemanPoint vertex_point(const WeightedSplitSystem& sys, SplitMask choice);

// phi_x: alpha/2 on every set avoiding x, 0 on sets containing x.
BunemanPoint taxon_point(const WeightedSplitSystem& sys, std::size_t x);

// Membership in B(S, alpha): the box constraints plus the support condition
// (A1, A2 in supp(phi) and A1 | A2 = X imply A1 & A2 = 0).
bool is_buneman_point(const WeightedSplitSystem& sys, const BunemanPoint& p);

// The minimal cell [phi]: splits where phi is strictly inside (0, alpha/2),
// and the vertex choice on the remaining splits (free bits cleared).
struct CellSupport {
  SplitMask free = 0;
  SplitMask base = 0;
};
CellSupport minimal_cell(const WeightedSplitSystem& sys, const BunemanPoint& p);

// Breadth-first flip expansion from the taxon vertices. Throws LimitError
// when the system has more than `split_bound` splits.
std::vector<SplitMask> enumerate_vertices(const WeightedSplitSystem& sys,
                                          std::size_t split_bound = kDefaultSplitBound);

struct BunemanEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t split = 0;
};

// Hypercube cell spanned by flipping the `free` splits at `base`. The base is
// the member vertex whose free bits are all clear.
struct BunemanCell {
  std::size_t base = 0;
  SplitMask free = 0;
  std::size_t dim = 0;
  // Codimension-one faces.
  std::vector<std::size_t> facets;
  bool maximal = false;
};

struct BunemanBlock {
  std::vector<std::size_t> component;
  // Present when the system is weakly compatible.
  std::optional<ComponentClass> component_class;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  // Cells of positive dimension plus the 0-cells of `vertices`.
  std::vector<std::size_t> cells;
  std::vector<std::size_t> cut_vertices;
};

class BunemanComplex {
 public:
  const WeightedSplitSystem& system() const { return sys_; }
  const IncompatibilityGraph& incompatibility() const { return incompat_; }

  const std::vector<SplitMask>& vertices() const { return vertices_; }
  std::optional<std::size_t> vertex_id(SplitMask choice) const;
  const std::vector<BunemanEdge>& edges() const { return edges_; }
  const std::vector<BunemanCell>& cells() const { return cells_; }
  const std::vector<BunemanBlock>& blocks() const { return blocks_; }
  std::optional<std::size_t> cell_id(SplitMask base_choice, SplitMask free) const;

  std::size_t taxon_vertex(std::size_t x) const { return taxon_vertex_.at(x); }
  // Vertices lying in two or more blocks.
  const std::vector<std::size_t>& cut_vertices() const { return cut_vertices_; }

  // All 2^dim member vertex ids, sorted.
  std::vector<std::size_t> cell_vertices(std::size_t cell) const;
  // Cell counts by dimension, for the whole complex or one block.
  std::vector<std::size_t> cell_counts() const;
  std::vector<std::size_t> cell_counts(std::size_t block) const;

  // Geometric membership: [p] is a cell of the block.
  bool block_contains(std::size_t block, const BunemanPoint& p) const;

 private:
  friend BunemanComplex enumerate_cells(const WeightedSplitSystem& sys, std::vector<SplitMask> vertices);

  WeightedSplitSystem sys_;
  IncompatibilityGraph incompat_;
  std::vector<SplitMask> vertices_;
  std::unordered_map<SplitMask, std::size_t> vertex_index_;
  std::vector<BunemanEdge> edges_;
  std::vector<BunemanCell> cells_;
  std::unordered_map<SplitMask, std::unordered_map<SplitMask, std::size_t>> cell_index_;
  std::vector<BunemanBlock> blocks_;
  std::vector<std::size_t> taxon_vertex_;
  std::vector<std::size_t> cut_vertices_;
};

// Builds cells, edges and blocks from a complete vertex list. Blocks are
// taken from the biconnected components of the Buneman graph and checked to
// coincide with the incompatibility components (one block per component).
BunemanComplex enumerate_cells(const WeightedSplitSystem& sys, std::vector<SplitMask> vertices);

BunemanComplex build_buneman_complex(const WeightedSplitSystem& sys,
                                     std::size_t split_bound = kDefaultSplitBound);

// Splits on which two points differ.
std::vector<std::size_t> delta(const BunemanPoint& p1, const BunemanPoint& p2);

// Delta(p1, p2) is contained in `component`.
bool same_block(const BunemanPoint& p1, const BunemanPoint& p2, const std::vector<std::size_t>& component);

// Gate of taxon x in a cell: phi_x's side on the free splits, the cell's
// common values elsewhere.
BunemanPoint gate(const BunemanComplex& complex, std::size_t cell, std::size_t x);

// Interior point of a cell: alpha/4 on each free split.
BunemanPoint generator(const BunemanComplex& complex, std::size_t cell);

}  // namespace tightspan
