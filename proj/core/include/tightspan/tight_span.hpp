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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tightspan/buneman.hpp"
#include "tightspan/kappa.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/splits.hpp"

namespace tightspan {

struct TightSpanVertex {
  std::vector<Rational> coords;
  // Buneman vertices mapped here by kappa.
  std::vector<std::size_t> preimages;
  // Taxa x with h_x at this vertex.
  std::vector<std::size_t> taxa;
};

struct TightSpanCell {
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> facets;
  std::size_t block = 0;
  // Edges only: the split the edge crosses.
  std::optional<std::size_t> split;
  // The Buneman cell this cell is the image of, when there is one.
  std::optional<std::size_t> buneman_cell;
};

enum class BlockShape { Consistent, RhombicDodecahedron };
std::string_view to_string(BlockShape shape);

struct TightSpanBlock {
  std::vector<std::size_t> component;
  ComponentClass component_class;
  BlockShape shape = BlockShape::Consistent;
  std::size_t buneman_block = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> cells;
  std::vector<std::size_t> cut_vertices;
  // Rhombic dodecahedra: kappa images of the two 4-cube vertices that are not
  // vertices of the block, and those Buneman vertices.
  std::vector<std::vector<Rational>> interior_points;
  std::vector<std::size_t> hidden_preimages;
};

// T(d) for d = d_{S,alpha}. Vertices are sorted by coordinates, cells by
// dimension and then by vertex ids.
struct PolytopalComplex {
  BunemanComplex buneman;
  FiniteMetric metric;
  std::vector<TightSpanVertex> vertices;
  std::vector<TightSpanCell> cells;
  std::vector<TightSpanBlock> blocks;

  const GroundSet& ground() const { return metric.ground(); }
  std::optional<std::size_t> vertex_id(const std::vector<Rational>& coords) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> cut_vertices() const;
  std::vector<std::size_t> cell_counts() const;
  std::vector<std::size_t> cell_counts(std::size_t block) const;
};

// Combinatorics of a rhombic dodecahedron as a 4-cube with an antipodal
// vertex pair h, ~h removed. Slots are 4-bit offsets from h (1..14); bit j
// flips the split in pattern position j.
struct RhombicDodecahedronTemplate {
  std::array<unsigned, 14> slots{};
  // Slot index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Rhombi, each as four slot indices in cyclic order.
  std::vector<std::array<std::size_t, 4>> faces;

  std::size_t degree(std::size_t slot) const;

  static const RhombicDodecahedronTemplate& get();
};

// Hidden 4-cube vertex of an octahedral block, in pattern coordinates (bit j
// is the vertex bit of split order[j]); its antipode is the other one. Taken
// from the sign pattern of the kernel of kappa's linear part on the block.
unsigned hidden_vertex_pattern(const WeightedSplitSystem& sys, const ComponentClass& octahedral);

struct OctahedralBlock {
  // 14 Buneman vertex ids by template slot.
  std::array<std::size_t, 14> slot_vertex{};
  std::array<std::vector<Rational>, 14> coords;
  std::array<std::size_t, 2> hidden{};
  std::array<std::vector<Rational>, 2> hidden_coords;
  // Buneman vertex of the gate of part X_{k+1}, k = 0..5.
  std::array<std::size_t, 6> gates{};
};

// Throws PreconditionError unless `block` of `complex` has an octahedral
// component.
OctahedralBlock octahedral_block(const BunemanComplex& complex, const KappaMap& kappa, std::size_t block);

// Throws InputError for an empty or non weakly compatible system and
// LimitError above `split_bound` splits.
PolytopalComplex assemble(const WeightedSplitSystem& sys, std::size_t split_bound = kDefaultSplitBound);

struct BlockCorrespondence {
  std::size_t buneman_block = 0;
  std::size_t tight_span_block = 0;
  // Consistent blocks: (Buneman cell, tight-span cell) for every cell.
  std::vector<std::pair<std::size_t, std::size_t>> cell_map;
};

// The bijection between blocks of B(S, alpha) and of T(d). Throws
// std::logic_error if the cell maps of consistent blocks fail to preserve
// dimension or facets.
std::vector<BlockCorrespondence> block_map(const PolytopalComplex& complex);

}  // namespace tightspan
