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

#include "tightspan/tight_span.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>

#include "tightspan/errors.hpp"
#include "tightspan/linalg.hpp"

namespace tightspan {

std::string_view to_string(BlockShape shape) {
  switch (shape) {
    case BlockShape::Consistent:
      return "consistent";
    case BlockShape::RhombicDodecahedron:
      return "rhombic-dodecahedron";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> counts_by_dim(const std::vector<TightSpanCell>& cells, const std::vector<std::size_t>& ids) {
  std::vector<std::size_t> counts;
  for (std::size_t id : ids) {
    const std::size_t dim = cells[id].dim;
    if (counts.size() <= dim) counts.resize(dim + 1, 0);
    ++counts[dim];
  }
  return counts;
}

SplitMask pattern_to_choice(SplitMask base, const ComponentClass& cls, unsigned pattern) {
  SplitMask choice = base;
  for (std::size_t j = 0; j < cls.order.size(); ++j) {
    if (pattern & (1u << j)) choice |= split_bit(cls.order[j]);
  }
  return choice;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolytopalComplex

std::optional<std::size_t> PolytopalComplex::vertex_id(const std::vector<Rational>& coords) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), coords,
                             [](const TightSpanVertex& v, const std::vector<Rational>& c) { return v.coords < c; });
  if (it == vertices.end() || it->coords != coords) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> PolytopalComplex::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : cells) {
    if (c.dim == 1) out.emplace_back(c.vertices[0], c.vertices[1]);
  }
  return out;
}

std::vector<std::size_t> PolytopalComplex::cut_vertices() const {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.insert(out.end(), b.cut_vertices.begin(), b.cut_vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> PolytopalComplex::cell_counts() const {
  std::vector<std::size_t> all(cells.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return counts_by_dim(cells, all);
}

std::vector<std::size_t> PolytopalComplex::cell_counts(std::size_t block) const {
  return counts_by_dim(cells, blocks.at(block).cells);
}

// ---------------------------------------------------------------------------
// Rhombic dodecahedron

std::size_t RhombicDodecahedronTemplate::degree(std::size_t slot) const {
  std::size_t d = 0;
  for (auto [a, b] : edges) d += (a == slot) + (b == slot);
  return d;
}

const RhombicDodecahedronTemplate& RhombicDodecahedronTemplate::get() {
  static const RhombicDodecahedronTemplate t = [] {
    RhombicDodecahedronTemplate r;
    for (unsigned o = 1; o <= 14; ++o) r.slots[o - 1] = o;
    auto slot = [](unsigned offset) { return static_cast<std::size_t>(offset - 1); };
    auto kept = [](unsigned offset) { return offset != 0 && offset != 15; };
    for (unsigned o = 0; o < 16; ++o) {
      for (unsigned j = 0; j < 4; ++j) {
        const unsigned bj = 1u << j;
        if ((o & bj) || !kept(o) || !kept(o | bj)) continue;
        r.edges.emplace_back(slot(o), slot(o | bj));
        for (unsigned k = j + 1; k < 4; ++k) {
          const unsigned bk = 1u << k;
          if ((o & bk) || !kept(o | bk) || !kept(o | bj | bk)) continue;
          r.faces.push_back({slot(o), slot(o | bj), slot(o | bj | bk), slot(o | bk)});
        }
      }
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
  }();
  return t;
}

unsigned hidden_vertex_pattern(const WeightedSplitSystem& sys, const ComponentClass& octahedral) {
  if (!octahedral.is_octahedral() || octahedral.order.size() != 4) {
    throw PreconditionError("hidden_vertex_pattern: component is not octahedral");
  }
  linalg::Matrix m(sys.taxon_count(), 4);
  for (std::size_t x = 0; x < sys.taxon_count(); ++x) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t i = octahedral.order[j];
      m(x, j) = sys.split(i).in_side(x) ? Rational(-sys.weight(i)) : sys.weight(i);
    }
  }
  const auto kernel = linalg::nullspace(std::move(m));
  if (kernel.size() != 1) throw std::logic_error("octahedral block: kappa kernel is not one-dimensional");
  unsigned pattern = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    const int s = sgn(kernel[0][j]);
    if (s == 0) throw std::logic_error("octahedral block: kappa kernel has a zero coordinate");
    if (s > 0) pattern |= 1u << j;
  }
  return pattern;
}

OctahedralBlock octahedral_block(const BunemanComplex& complex, const KappaMap& kappa, std::size_t block) {
  const BunemanBlock& b = complex.blocks().at(block);
  if (!b.component_class || !b.component_class->is_octahedral()) {
    throw PreconditionError("octahedral_block: block " + std::to_string(block) + " is not octahedral");
  }
  const ComponentClass& cls = *b.component_class;
  const WeightedSplitSystem& sys = complex.system();
  SplitMask comp_mask = 0;
  for (std::size_t i : b.component) comp_mask |= split_bit(i);
  const SplitMask base = complex.vertices()[b.vertices.front()] & ~comp_mask;
  const unsigned h = hidden_vertex_pattern(sys, cls);

  OctahedralBlock out;
  auto vertex_of = [&](unsigned pattern) {
    auto id = complex.vertex_id(pattern_to_choice(base, cls, pattern));
    if (!id) throw std::logic_error("octahedral block: 4-cube vertex missing");
    return *id;
  };
  const auto& tmpl = RhombicDodecahedronTemplate::get();
  for (std::size_t s = 0; s < 14; ++s) {
    out.slot_vertex[s] = vertex_of(h ^ tmpl.slots[s]);
    out.coords[s] = kappa.vertex_values(complex.vertices()[out.slot_vertex[s]]);
  }
  const unsigned hidden_patterns[2] = {h, h ^ 15u};
  for (std::size_t k = 0; k < 2; ++k) {
    out.hidden[k] = vertex_of(hidden_patterns[k]);
    out.hidden_coords[k] = kappa.vertex_values(complex.vertices()[out.hidden[k]]);
    if (std::binary_search(b.cut_vertices.begin(), b.cut_vertices.end(), out.hidden[k])) {
      throw std::logic_error("octahedral block: a hidden 4-cube vertex is a cut vertex");
    }
  }
  for (std::size_t k = 0; k < 6; ++k) {
    const std::size_t x = static_cast<std::size_t>(std::countr_zero(cls.parts[k]));
    const SplitMask choice = base | (taxon_choice(sys, x) & comp_mask);
    out.gates[k] = *complex.vertex_id(choice);
    const auto slot = std::find(out.slot_vertex.begin(), out.slot_vertex.end(), out.gates[k]);
    if (slot == out.slot_vertex.end() || tmpl.degree(static_cast<std::size_t>(slot - out.slot_vertex.begin())) != 4) {
      throw std::logic_error("octahedral block: a gate is not a degree-4 vertex");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assembly

PolytopalComplex assemble(const WeightedSplitSystem& sys, std::size_t split_bound) {
  if (sys.empty()) throw InputError("the split system is empty; its tight span is a single point");
  const KappaMap kappa(sys);
  PolytopalComplex out;
  out.buneman = build_buneman_complex(sys, split_bound);
  out.metric = kappa.metric();
  const BunemanComplex& bc = out.buneman;
  const std::size_t nb = bc.blocks().size();

  std::vector<bool> hidden(bc.vertices().size(), false);
  std::vector<std::optional<OctahedralBlock>> oct(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    if (!bc.blocks()[b].component_class->is_octahedral()) continue;
    oct[b] = octahedral_block(bc, kappa, b);
    for (std::size_t v : oct[b]->hidden) hidden[v] = true;
  }

  // Vertex images; distinct kept Buneman vertices must have distinct images.
  std::map<std::vector<Rational>, std::size_t> preimage;
  for (std::size_t v = 0; v < bc.vertices().size(); ++v) {
    if (hidden[v]) continue;
    auto [it, fresh] = preimage.emplace(kappa.vertex_values(bc.vertices()[v]), v);
    if (!fresh) {
      throw std::logic_error("kappa identifies Buneman vertices " + std::to_string(it->second) + " and " +
                             std::to_string(v));
    }
  }
  std::vector<std::size_t> image(bc.vertices().size(), SIZE_MAX);
  for (auto& [coords, v] : preimage) {
    image[v] = out.vertices.size();
    out.vertices.push_back({coords, {v}, {}});
  }
  for (std::size_t x = 0; x < sys.taxon_count(); ++x) out.vertices[image[bc.taxon_vertex(x)]].taxa.push_back(x);

  // Cells: every Buneman cell avoiding the hidden vertices, plus one 3-cell
  // per rhombic dodecahedron. Facets are filled in after sorting.
  struct Draft {
    TightSpanCell cell;
    std::vector<std::size_t> facet_drafts;
  };
  std::vector<Draft> drafts;
  std::vector<std::size_t> draft_of(bc.cells().size(), SIZE_MAX);
  std::vector<std::size_t> block_of_cell(bc.cells().size(), SIZE_MAX);
  for (std::size_t b = nb; b-- > 0;) {
    for (std::size_t c : bc.blocks()[b].cells) block_of_cell[c] = b;
  }
  for (std::size_t c = 0; c < bc.cells().size(); ++c) {
    std::vector<std::size_t> members = bc.cell_vertices(c);
    if (std::any_of(members.begin(), members.end(), [&](std::size_t v) { return hidden[v]; })) continue;
    Draft d;
    d.cell.dim = bc.cells()[c].dim;
    for (std::size_t v : members) d.cell.vertices.push_back(image[v]);
    std::sort(d.cell.vertices.begin(), d.cell.vertices.end());
    d.cell.block = block_of_cell[c];
    if (d.cell.dim == 1) d.cell.split = static_cast<std::size_t>(std::countr_zero(bc.cells()[c].free));
    d.cell.buneman_cell = c;
    draft_of[c] = drafts.size();
    drafts.push_back(std::move(d));
  }
  for (auto& d : drafts) {
    for (std::size_t f : bc.cells()[*d.cell.buneman_cell].facets) d.facet_drafts.push_back(draft_of[f]);
  }
  const auto& tmpl = RhombicDodecahedronTemplate::get();
  for (std::size_t b = 0; b < nb; ++b) {
    if (!oct[b]) continue;
    Draft d;
    d.cell.dim = 3;
    d.cell.block = b;
    for (std::size_t v : oct[b]->slot_vertex) d.cell.vertices.push_back(image[v]);
    std::sort(d.cell.vertices.begin(), d.cell.vertices.end());
    for (const auto& face : tmpl.faces) {
      SplitMask lo = ~SplitMask{0}, hi = 0;
      for (std::size_t s : face) {
        const SplitMask choice = bc.vertices()[oct[b]->slot_vertex[s]];
        lo &= choice;
        hi |= choice;
      }
      d.facet_drafts.push_back(draft_of[*bc.cell_id(lo, lo ^ hi)]);
    }
    drafts.push_back(std::move(d));
  }

  std::vector<std::size_t> order(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = drafts[a].cell;
    const auto& cb = drafts[b].cell;
    return std::tie(ca.dim, ca.vertices) < std::tie(cb.dim, cb.vertices);
  });
  std::vector<std::size_t> final_id(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) final_id[order[i]] = i;
  out.cells.reserve(drafts.size());
  for (std::size_t i : order) {
    TightSpanCell cell = std::move(drafts[i].cell);
    for (std::size_t f : drafts[i].facet_drafts) cell.facets.push_back(final_id[f]);
    std::sort(cell.facets.begin(), cell.facets.end());
    out.cells.push_back(std::move(cell));
  }

  out.blocks.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const BunemanBlock& bb = bc.blocks()[b];
    TightSpanBlock& tb = out.blocks[b];
    tb.component = bb.component;
    tb.component_class = *bb.component_class;
    tb.buneman_block = b;
    for (std::size_t v : bb.vertices) {
      if (!hidden[v]) tb.vertices.push_back(image[v]);
    }
    for (std::size_t v : bb.cut_vertices) tb.cut_vertices.push_back(image[v]);
    std::sort(tb.vertices.begin(), tb.vertices.end());
    std::sort(tb.cut_vertices.begin(), tb.cut_vertices.end());
    if (oct[b]) {
      tb.shape = BlockShape::RhombicDodecahedron;
      for (std::size_t k = 0; k < 2; ++k) {
        tb.hidden_preimages.push_back(oct[b]->hidden[k]);
        tb.interior_points.push_back(oct[b]->hidden_coords[k]);
      }
      std::sort(tb.interior_points.begin(), tb.interior_points.end());
      tb.interior_points.erase(std::unique(tb.interior_points.begin(), tb.interior_points.end()),
                               tb.interior_points.end());
    }
  }
  for (std::size_t id = 0; id < out.cells.size(); ++id) {
    const TightSpanCell& c = out.cells[id];
    if (c.dim > 0) {
      out.blocks[c.block].cells.push_back(id);
      continue;
    }
    for (auto& tb : out.blocks) {
      if (std::binary_search(tb.vertices.begin(), tb.vertices.end(), c.vertices[0])) tb.cells.push_back(id);
    }
  }
  return out;
}

std::vector<BlockCorrespondence> block_map(const PolytopalComplex& complex) {
  const BunemanComplex& bc = complex.buneman;
  std::vector<BlockCorrespondence> out;
  for (std::size_t t = 0; t < complex.blocks.size(); ++t) {
    const TightSpanBlock& tb = complex.blocks[t];
    BlockCorrespondence corr{tb.buneman_block, t, {}};
    if (tb.component != bc.blocks().at(tb.buneman_block).component) {
      throw std::logic_error("block map: components differ for block " + std::to_string(t));
    }
    if (tb.shape == BlockShape::Consistent) {
      std::map<std::size_t, std::size_t> to_tight;
      for (std::size_t id : tb.cells) {
        const auto& c = complex.cells[id];
        if (!c.buneman_cell) throw std::logic_error("block map: consistent cell without a Buneman preimage");
        to_tight.emplace(*c.buneman_cell, id);
      }
      const auto& bcells = bc.blocks()[tb.buneman_block].cells;
      if (to_tight.size() != bcells.size() || bc.cell_counts(tb.buneman_block) != complex.cell_counts(t)) {
        throw std::logic_error("block map: cell counts differ for block " + std::to_string(t));
      }
      for (std::size_t bcell : bcells) {
        auto it = to_tight.find(bcell);
        if (it == to_tight.end()) throw std::logic_error("block map: Buneman cell has no image");
        const auto& c = complex.cells[it->second];
        std::vector<std::size_t> mapped;
        for (std::size_t f : bc.cells()[bcell].facets) mapped.push_back(to_tight.at(f));
        std::sort(mapped.begin(), mapped.end());
        if (c.dim != bc.cells()[bcell].dim || mapped != c.facets) {
          throw std::logic_error("block map: face relation not preserved at Buneman cell " + std::to_string(bcell));
        }
        corr.cell_map.emplace_back(bcell, it->second);
      }
    }
    out.push_back(std::move(corr));
  }
  return out;
}

}  // namespace tightspan
