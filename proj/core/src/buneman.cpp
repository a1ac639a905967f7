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

#include "tightspan/buneman.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <tuple>

#include "tightspan/errors.hpp"
#include "tightspan/graph.hpp"

namespace tightspan {

namespace {

TaxonMask chosen_side(const Split& s, bool canonical) { return canonical ? s.side() : s.complement(); }

// Flipping split i at a valid vertex keeps it valid iff the new side meets
// every other chosen side.
bool can_flip(const WeightedSplitSystem& sys, SplitMask choice, std::size_t i) {
  const TaxonMask flipped = chosen_side(sys.split(i), !(choice & split_bit(i)));
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j == i) continue;
    if ((flipped & chosen_side(sys.split(j), choice & split_bit(j))) == 0) return false;
  }
  return true;
}

void check_split_count(const WeightedSplitSystem& sys, std::size_t bound) {
  const std::size_t limit = std::min(bound, kMaxSplits);
  if (sys.size() > limit) {
    throw LimitError("Buneman complex construction supports at most " + std::to_string(limit) +
                     " splits, got " + std::to_string(sys.size()));
  }
}

SplitMask mask_of(const std::vector<std::size_t>& indices) {
  SplitMask m = 0;
  for (std::size_t i : indices) m |= split_bit(i);
  return m;
}

}  // namespace

SplitMask taxon_choice(const WeightedSplitSystem& sys, std::size_t x) {
  if (x >= sys.taxon_count()) throw InputError("unknown taxon index " + std::to_string(x));
  SplitMask m = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys.split(i).in_side(x)) m |= split_bit(i);
  }
  return m;
}

bool is_buneman_vertex(const WeightedSplitSystem& sys, SplitMask choice) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const TaxonMask a = chosen_side(sys.split(i), choice & split_bit(i));
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      if ((a & chosen_side(sys.split(j), choice & split_bit(j))) == 0) return false;
    }
  }
  return true;
}

BunemanPoint vertex_point(const WeightedSplitSystem& sys, SplitMask choice) {
  BunemanPoint p;
  p.side_value.reserve(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    p.side_value.push_back((choice & split_bit(i)) ? Rational(0) : Rational(sys.weight(i) / 2));
  }
  return p;
}

BunemanPoint taxon_point(const WeightedSplitSystem& sys, std::size_t x) {
  return vertex_point(sys, taxon_choice(sys, x));
}

bool is_buneman_point(const WeightedSplitSystem& sys, const BunemanPoint& p) {
  if (p.side_value.size() != sys.size()) return false;
  std::vector<TaxonMask> support;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Rational half = sys.weight(i) / 2;
    const Rational& v = p.side_value[i];
    if (v < 0 || v > half) return false;
    if (v != 0) support.push_back(sys.split(i).side());
    if (v != half) support.push_back(sys.split(i).complement());
  }
  const TaxonMask all = sys.ground().all();
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      if ((support[a] | support[b]) == all && (support[a] & support[b]) != 0) return false;
    }
  }
  return true;
}

CellSupport minimal_cell(const WeightedSplitSystem& sys, const BunemanPoint& p) {
  CellSupport c;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Rational& v = p.side_value.at(i);
    if (v == 0) {
      c.base |= split_bit(i);
    } else if (v != sys.weight(i) / 2) {
      c.free |= split_bit(i);
    }
  }
  return c;
}

std::vector<SplitMask> enumerate_vertices(const WeightedSplitSystem& sys, std::size_t split_bound) {
  check_split_count(sys, split_bound);
  std::unordered_map<SplitMask, bool> seen;
  std::deque<SplitMask> queue;
  for (std::size_t x = 0; x < sys.taxon_count(); ++x) {
    const SplitMask seed = taxon_choice(sys, x);
    if (seen.emplace(seed, true).second) queue.push_back(seed);
  }
  std::vector<SplitMask> out;
  while (!queue.empty()) {
    const SplitMask v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const SplitMask w = v ^ split_bit(i);
      if (seen.count(w) || !can_flip(sys, v, i)) continue;
      seen.emplace(w, true);
      queue.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// BunemanComplex

std::optional<std::size_t> BunemanComplex::vertex_id(SplitMask choice) const {
  auto it = vertex_index_.find(choice);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BunemanComplex::cell_id(SplitMask base_choice, SplitMask free) const {
  auto it = cell_index_.find(free);
  if (it == cell_index_.end()) return std::nullopt;
  auto jt = it->second.find(base_choice & ~free);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::vector<std::size_t> BunemanComplex::cell_vertices(std::size_t cell) const {
  const BunemanCell& c = cells_.at(cell);
  const SplitMask base = vertices_[c.base];
  std::vector<std::size_t> out;
  SplitMask sub = 0;
  do {
    out.push_back(vertex_index_.at(base | sub));
    sub = (sub - c.free) & c.free;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> BunemanComplex::cell_counts() const {
  std::vector<std::size_t> counts;
  for (const auto& c : cells_) {
    if (counts.size() <= c.dim) counts.resize(c.dim + 1, 0);
    ++counts[c.dim];
  }
  return counts;
}

std::vector<std::size_t> BunemanComplex::cell_counts(std::size_t block) const {
  std::vector<std::size_t> counts;
  for (std::size_t id : blocks_.at(block).cells) {
    const auto& c = cells_[id];
    if (counts.size() <= c.dim) counts.resize(c.dim + 1, 0);
    ++counts[c.dim];
  }
  return counts;
}

bool BunemanComplex::block_contains(std::size_t block, const BunemanPoint& p) const {
  const BunemanBlock& b = blocks_.at(block);
  const CellSupport support = minimal_cell(sys_, p);
  if (support.free == 0) {
    auto v = vertex_id(support.base);
    return v && std::binary_search(b.vertices.begin(), b.vertices.end(), *v);
  }
  return (support.free & ~mask_of(b.component)) == 0 && cell_id(support.base, support.free).has_value();
}

BunemanComplex enumerate_cells(const WeightedSplitSystem& sys, std::vector<SplitMask> vertices) {
  check_split_count(sys, kMaxSplits);
  BunemanComplex cx;
  cx.sys_ = sys;
  cx.incompat_ = incompatibility_graph(sys);
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  cx.vertices_ = std::move(vertices);
  for (std::size_t id = 0; id < cx.vertices_.size(); ++id) cx.vertex_index_.emplace(cx.vertices_[id], id);

  const std::size_t m = sys.size();
  std::vector<SplitMask> incompatible_with(m, 0);
  for (auto [i, j] : cx.incompat_.edges) {
    incompatible_with[i] |= split_bit(j);
    incompatible_with[j] |= split_bit(i);
  }

  // Edges run from the vertex with the split bit clear to the one with it set.
  for (std::size_t u = 0; u < cx.vertices_.size(); ++u) {
    const SplitMask v = cx.vertices_[u];
    for (std::size_t i = 0; i < m; ++i) {
      if (v & split_bit(i)) continue;
      if (auto w = cx.vertex_id(v | split_bit(i))) cx.edges_.push_back({u, *w, i});
    }
  }

  // Cells: cliques of the incompatibility graph among the splits that can be
  // flipped at a base vertex whose bits on them are clear.
  struct RawCell {
    std::size_t base;
    SplitMask free;
  };
  std::vector<RawCell> raw;
  for (std::size_t u = 0; u < cx.vertices_.size(); ++u) {
    const SplitMask v = cx.vertices_[u];
    SplitMask flippable = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(v & split_bit(i)) && cx.vertex_index_.count(v | split_bit(i))) flippable |= split_bit(i);
    }
    // Depth-first clique extension in increasing split order.
    std::vector<std::pair<SplitMask, SplitMask>> stack = {{0, flippable}};
    while (!stack.empty()) {
      auto [free, candidates] = stack.back();
      stack.pop_back();
      raw.push_back({u, free});
      while (candidates) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(candidates));
        candidates &= candidates - 1;
        stack.emplace_back(free | split_bit(i), candidates & incompatible_with[i]);
      }
    }
  }
  std::sort(raw.begin(), raw.end(), [](const RawCell& a, const RawCell& b) {
    const int da = std::popcount(a.free), db = std::popcount(b.free);
    return std::tie(da, a.base, a.free) < std::tie(db, b.base, b.free);
  });
  cx.cells_.reserve(raw.size());
  for (const RawCell& r : raw) {
    cx.cell_index_[r.free][cx.vertices_[r.base]] = cx.cells_.size();
    BunemanCell c;
    c.base = r.base;
    c.free = r.free;
    c.dim = static_cast<std::size_t>(std::popcount(r.free));
    cx.cells_.push_back(std::move(c));
  }
  std::vector<bool> is_facet(cx.cells_.size(), false);
  for (auto& c : cx.cells_) {
    const SplitMask base = cx.vertices_[c.base];
    for (SplitMask rest = c.free; rest; rest &= rest - 1) {
      const SplitMask bit = rest & (~rest + 1);
      for (SplitMask b : {base, base | bit}) {
        const std::size_t f = *cx.cell_id(b, c.free & ~bit);
        c.facets.push_back(f);
        is_facet[f] = true;
      }
    }
    std::sort(c.facets.begin(), c.facets.end());
  }
  for (std::size_t id = 0; id < cx.cells_.size(); ++id) cx.cells_[id].maximal = !is_facet[id];

  cx.taxon_vertex_.resize(sys.taxon_count());
  for (std::size_t x = 0; x < sys.taxon_count(); ++x) {
    auto id = cx.vertex_id(taxon_choice(sys, x));
    if (!id) throw std::logic_error("taxon vertex missing from the vertex list");
    cx.taxon_vertex_[x] = *id;
  }

  // Blocks: biconnected components of the 1-skeleton, each of which must carry
  // exactly the splits of one incompatibility component.
  std::vector<Edge> graph_edges;
  graph_edges.reserve(cx.edges_.size());
  for (const auto& e : cx.edges_) graph_edges.emplace_back(e.u, e.v);
  const BlockDecomposition bic = biconnected_components(cx.vertices_.size(), graph_edges);
  if (!cx.vertices_.empty() && bic.connected_components > 1) {
    throw std::logic_error("Buneman graph is disconnected; the vertex list is incomplete");
  }
  const auto& comps = cx.incompat_.components;
  if (bic.edge_blocks.size() != comps.size()) {
    throw std::logic_error("Buneman graph has " + std::to_string(bic.edge_blocks.size()) + " blocks but " +
                           std::to_string(comps.size()) + " incompatibility components");
  }
  cx.blocks_.resize(comps.size());
  std::vector<bool> assigned(comps.size(), false);
  for (std::size_t k = 0; k < bic.edge_blocks.size(); ++k) {
    SplitMask labels = 0;
    for (std::size_t e : bic.edge_blocks[k]) labels |= split_bit(cx.edges_[e].split);
    const std::size_t comp = cx.incompat_.component_of(static_cast<std::size_t>(std::countr_zero(labels)));
    if (labels != mask_of(comps[comp]) || assigned[comp]) {
      throw std::logic_error("Buneman graph block does not match an incompatibility component");
    }
    assigned[comp] = true;
    BunemanBlock& b = cx.blocks_[comp];
    b.component = comps[comp];
    b.vertices = bic.vertex_blocks[k];
    b.edges = bic.edge_blocks[k];
  }
  const bool weakly_compatible = is_weakly_compatible(sys);
  std::vector<std::size_t> membership(cx.vertices_.size(), 0);
  for (std::size_t k = 0; k < cx.blocks_.size(); ++k) {
    BunemanBlock& b = cx.blocks_[k];
    const SplitMask comp_mask = mask_of(b.component);
    for (std::size_t v : b.vertices) {
      b.cells.push_back(*cx.cell_id(cx.vertices_[v], 0));
      ++membership[v];
    }
    for (std::size_t id = 0; id < cx.cells_.size(); ++id) {
      const auto& c = cx.cells_[id];
      if (c.free != 0 && (c.free & ~comp_mask) == 0) b.cells.push_back(id);
    }
    std::sort(b.cells.begin(), b.cells.end());
    if (weakly_compatible) b.component_class = classify_component(sys, b.component);
  }
  for (std::size_t v = 0; v < membership.size(); ++v) {
    if (membership[v] >= 2) cx.cut_vertices_.push_back(v);
  }
  for (auto& b : cx.blocks_) {
    for (std::size_t v : b.vertices) {
      if (membership[v] >= 2) b.cut_vertices.push_back(v);
    }
  }
  return cx;
}

BunemanComplex build_buneman_complex(const WeightedSplitSystem& sys, std::size_t split_bound) {
  return enumerate_cells(sys, enumerate_vertices(sys, split_bound));
}

// ---------------------------------------------------------------------------
// Predicates

std::vector<std::size_t> delta(const BunemanPoint& p1, const BunemanPoint& p2) {
  if (p1.side_value.size() != p2.side_value.size()) {
    throw PreconditionError("delta: points belong to different split systems");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p1.side_value.size(); ++i) {
    if (p1.side_value[i] != p2.side_value[i]) out.push_back(i);
  }
  return out;
}

bool same_block(const BunemanPoint& p1, const BunemanPoint& p2, const std::vector<std::size_t>& component) {
  for (std::size_t i : delta(p1, p2)) {
    if (!std::binary_search(component.begin(), component.end(), i)) return false;
  }
  return true;
}

BunemanPoint gate(const BunemanComplex& complex, std::size_t cell, std::size_t x) {
  const BunemanCell& c = complex.cells().at(cell);
  const SplitMask base = complex.vertices()[c.base];
  const SplitMask choice = (base & ~c.free) | (taxon_choice(complex.system(), x) & c.free);
  return vertex_point(complex.system(), choice);
}

BunemanPoint generator(const BunemanComplex& complex, std::size_t cell) {
  const BunemanCell& c = complex.cells().at(cell);
  const WeightedSplitSystem& sys = complex.system();
  BunemanPoint p = vertex_point(sys, complex.vertices()[c.base]);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (c.free & split_bit(i)) p.side_value[i] = sys.weight(i) / 4;
  }
  return p;
}

}  // namespace tightspan
