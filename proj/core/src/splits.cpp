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

#include "tightspan/splits.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tightspan/errors.hpp"

namespace tightspan {

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw InputError("a ground set needs at least 2 taxa");
  if (labels_.size() > kMaxTaxa) {
    throw LimitError("at most " + std::to_string(kMaxTaxa) + " taxa are supported, got " +
                     std::to_string(labels_.size()));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty taxon label at position " + std::to_string(i));
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate taxon label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> GroundSet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw InputError("unknown taxon '" + std::string(label) + "'");
}

std::string GroundSet::format(TaxonMask members) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    if (!(members & taxon_bit(x))) continue;
    if (!first) out += ',';
    out += labels_[x];
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Split

Split::Split(TaxonMask one_side, std::size_t n) : n_(n) {
  if (n < 2 || n > kMaxTaxa) throw InputError("split over an invalid number of taxa");
  const TaxonMask all = full_mask(n);
  if (one_side & ~all) throw InputError("split side mentions a taxon outside the ground set");
  if (one_side == 0 || one_side == all) throw InputError("a split side must be a nonempty proper subset");
  side_ = (one_side & 1) ? (all & ~one_side) : one_side;
}

bool Split::is_trivial() const {
  return std::popcount(side_) == 1 || std::popcount(complement()) == 1;
}

std::strong_ordering Split::operator<=>(const Split& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  if (side_ == other.side_) return std::strong_ordering::equal;
  const TaxonMask diff = side_ ^ other.side_;
  const int first = std::countr_zero(diff);
  const TaxonMask above = first >= 63 ? 0 : ~((TaxonMask{2} << first) - 1);
  // The side holding `first` is smaller unless the other side stops there.
  if (side_ & taxon_bit(first)) {
    return (other.side_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (side_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

// ---------------------------------------------------------------------------
// WeightedSplitSystem

WeightedSplitSystem::WeightedSplitSystem(GroundSet ground, std::vector<Split> splits,
                                         std::vector<Rational> weights)
    : ground_(std::move(ground)) {
  if (splits.size() != weights.size()) {
    throw InputError("split and weight counts differ");
  }
  std::vector<std::size_t> order(splits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return splits[a] < splits[b]; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Split& s = splits[order[k]];
    if (s.taxon_count() != ground_.size()) {
      throw InputError("split defined over " + std::to_string(s.taxon_count()) + " taxa, ground set has " +
                       std::to_string(ground_.size()));
    }
    if (weights[order[k]] <= 0) {
      throw InputError("split " + ground_.format(s.side()) + " has non-positive weight " +
                       to_string(weights[order[k]]));
    }
    if (!splits_.empty() && splits_.back() == s) {
      throw InputError("duplicate split " + ground_.format(s.side()));
    }
    splits_.push_back(s);
    weights_.push_back(weights[order[k]]);
  }
}

std::optional<std::size_t> WeightedSplitSystem::find(const Split& s) const {
  auto it = std::lower_bound(splits_.begin(), splits_.end(), s);
  if (it == splits_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - splits_.begin());
}

WeightedSplitSystem WeightedSplitSystem::restrict_to(const std::vector<std::size_t>& indices) const {
  std::vector<Split> s;
  std::vector<Rational> w;
  for (std::size_t i : indices) {
    s.push_back(split(i));
    w.push_back(weight(i));
  }
  return WeightedSplitSystem(ground_, std::move(s), std::move(w));
}

std::string WeightedSplitSystem::format_split(std::size_t i) const {
  const Split& s = split(i);
  return ground_.format(s.complement()) + "|" + ground_.format(s.side());
}

// ---------------------------------------------------------------------------
// Compatibility

bool is_compatible(const Split& a, const Split& b) {
  if (a.taxon_count() != b.taxon_count()) {
    throw InputError("splits over different ground sets cannot be compared");
  }
  const TaxonMask a1 = a.side(), a2 = a.complement();
  const TaxonMask b1 = b.side(), b2 = b.complement();
  return (a1 & b1) == 0 || (a1 & b2) == 0 || (a2 & b1) == 0 || (a2 & b2) == 0;
}

namespace {

std::size_t lowest(TaxonMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

}  // namespace

std::optional<WeakCompatibilityViolation> find_weak_incompatibility(const WeightedSplitSystem& sys) {
  const std::size_t m = sys.size();
  const std::size_t n = sys.taxon_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        for (std::size_t x = 0; x < n; ++x) {
          const TaxonMask f1 = sys.split(i).far_part(x);
          const TaxonMask f2 = sys.split(j).far_part(x);
          const TaxonMask f3 = sys.split(k).far_part(x);
          const TaxonMask all3 = f1 & f2 & f3;
          const TaxonMask p12 = f1 & f2, p23 = f2 & f3, p13 = f1 & f3;
          if (all3 == p12 || all3 == p23 || all3 == p13) continue;
          WeakCompatibilityViolation v;
          v.splits = {i, j, k};
          v.taxa = {x, lowest(p23 & ~all3), lowest(p13 & ~all3), lowest(p12 & ~all3)};
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_weakly_compatible(const WeightedSplitSystem& sys) { return !find_weak_incompatibility(sys); }

std::optional<WeakCompatibilityViolation> find_weak_incompatibility_by_quadruples(
    const WeightedSplitSystem& sys) {
  const std::size_t m = sys.size();
  const std::size_t n = sys.taxon_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const std::array<const Split*, 3> s = {&sys.split(i), &sys.split(j), &sys.split(k)};
        for (std::size_t x0 = 0; x0 < n; ++x0) {
          for (std::size_t x1 = 0; x1 < n; ++x1) {
            for (std::size_t x2 = 0; x2 < n; ++x2) {
              for (std::size_t x3 = 0; x3 < n; ++x3) {
                const std::array<std::size_t, 3> xs = {x1, x2, x3};
                bool pattern = true;
                for (std::size_t a = 0; a < 3 && pattern; ++a) {
                  for (std::size_t b = 0; b < 3 && pattern; ++b) {
                    const bool same = !s[b]->separates(xs[a], x0);
                    pattern = (same == (a == b));
                  }
                }
                if (pattern) return WeakCompatibilityViolation{{i, j, k}, {x0, x1, x2, x3}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_weakly_compatible_by_quadruples(const WeightedSplitSystem& sys) {
  return !find_weak_incompatibility_by_quadruples(sys);
}

// ---------------------------------------------------------------------------
// Incompatibility graph

bool IncompatibilityGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::size_t IncompatibilityGraph::component_of(std::size_t i) const { return component_index.at(i); }

IncompatibilityGraph incompatibility_graph(const WeightedSplitSystem& sys) {
  IncompatibilityGraph g;
  const std::size_t m = sys.size();
  g.node_count = m;
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!is_compatible(sys.split(i), sys.split(j))) {
        g.edges.emplace_back(i, j);
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  g.component_index.assign(m, kUnset);
  for (std::size_t start = 0; start < m; ++start) {
    if (g.component_index[start] != kUnset) continue;
    const std::size_t id = g.components.size();
    std::vector<std::size_t> members{start};
    g.component_index[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t next : adj[members[head]]) {
        if (g.component_index[next] == kUnset) {
          g.component_index[next] = id;
          members.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    g.components.push_back(std::move(members));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(ComponentClass::Kind kind) {
  switch (kind) {
    case ComponentClass::Kind::Singleton: return "singleton";
    case ComponentClass::Kind::StrictlyCircular: return "strictly-circular";
    case ComponentClass::Kind::Octahedral: return "octahedral";
    case ComponentClass::Kind::Consistent: return "consistent";
  }
  return "unknown";
}

std::vector<TaxonMask> common_refinement(const WeightedSplitSystem& sys,
                                         const std::vector<std::size_t>& indices) {
  const std::size_t n = sys.taxon_count();
  std::map<std::vector<bool>, TaxonMask> classes;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> signature;
    signature.reserve(indices.size());
    for (std::size_t i : indices) signature.push_back(sys.split(i).in_side(x));
    classes[signature] |= taxon_bit(x);
  }
  std::vector<TaxonMask> parts;
  for (const auto& [_, mask] : classes) parts.push_back(mask);
  std::sort(parts.begin(), parts.end(), [](TaxonMask a, TaxonMask b) { return lowest(a) < lowest(b); });
  return parts;
}

namespace {

// For each pattern side, the index in `indices` of the split it equals.
std::optional<std::vector<std::size_t>> match_sides(const WeightedSplitSystem& sys,
                                                    const std::vector<std::size_t>& indices,
                                                    const std::vector<TaxonMask>& pattern_sides) {
  std::vector<std::size_t> order;
  std::vector<bool> used(indices.size(), false);
  const std::size_t n = sys.taxon_count();
  for (TaxonMask side : pattern_sides) {
    const Split want(side, n);
    bool found = false;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (!used[k] && sys.split(indices[k]) == want) {
        used[k] = true;
        order.push_back(indices[k]);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return order;
}

bool pairwise_incompatible(const WeightedSplitSystem& sys, const std::vector<std::size_t>& indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (is_compatible(sys.split(indices[a]), sys.split(indices[b]))) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<ComponentClass> match_octahedral(const WeightedSplitSystem& sys,
                                               const std::vector<std::size_t>& indices) {
  if (indices.size() != 4) return std::nullopt;
  const std::vector<TaxonMask> parts = common_refinement(sys, indices);
  if (parts.size() != 6) return std::nullopt;
  // X_1 is anchored at the part of the smallest taxon; the other five are permuted.
  std::array<std::size_t, 6> perm = {0, 1, 2, 3, 4, 5};
  do {
    auto x = [&](std::size_t i) { return parts[perm[i - 1]]; };
    const std::vector<TaxonMask> sides = {x(1) | x(2) | x(3), x(2) | x(3) | x(4), x(3) | x(4) | x(5),
                                          x(1) | x(3) | x(5)};
    if (auto order = match_sides(sys, indices, sides)) {
      ComponentClass c;
      c.kind = ComponentClass::Kind::Octahedral;
      for (std::size_t p : perm) c.parts.push_back(parts[p]);
      c.order = std::move(*order);
      return c;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

std::optional<ComponentClass> match_strictly_circular(const WeightedSplitSystem& sys,
                                                      const std::vector<std::size_t>& indices) {
  const std::size_t k = indices.size();
  if (k == 0) return std::nullopt;
  const std::vector<TaxonMask> parts = common_refinement(sys, indices);
  if (parts.size() != 2 * k) return std::nullopt;
  ComponentClass c;
  c.kind = ComponentClass::Kind::StrictlyCircular;
  if (k == 1) {
    c.parts = parts;
    c.order = indices;
    return c;
  }
  // Cyclically adjacent parts are separated by exactly one split.
  const std::size_t p = parts.size();
  std::vector<std::vector<std::size_t>> neighbours(p);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      std::size_t separating = 0;
      for (std::size_t i : indices) {
        if (sys.split(i).separates(lowest(parts[a]), lowest(parts[b]))) ++separating;
      }
      if (separating == 1) {
        neighbours[a].push_back(b);
        neighbours[b].push_back(a);
      }
    }
  }
  for (const auto& nb : neighbours) {
    if (nb.size() != 2) return std::nullopt;
  }
  for (std::size_t orientation = 0; orientation < 2; ++orientation) {
    std::vector<std::size_t> cycle = {0, neighbours[0][orientation]};
    while (cycle.size() < p) {
      const std::size_t cur = cycle.back(), prev = cycle[cycle.size() - 2];
      const std::size_t next = neighbours[cur][0] == prev ? neighbours[cur][1] : neighbours[cur][0];
      if (next == 0) break;
      cycle.push_back(next);
    }
    if (cycle.size() != p) continue;
    std::vector<TaxonMask> sides;
    for (std::size_t start = 0; start < k; ++start) {
      TaxonMask side = 0;
      for (std::size_t t = 0; t < k; ++t) side |= parts[cycle[start + t]];
      sides.push_back(side);
    }
    if (auto order = match_sides(sys, indices, sides)) {
      for (std::size_t idx : cycle) c.parts.push_back(parts[idx]);
      c.order = std::move(*order);
      return c;
    }
  }
  return std::nullopt;
}

std::string describe(const WeakCompatibilityViolation& v, const WeightedSplitSystem& sys) {
  std::string out = "splits";
  for (std::size_t k = 0; k < 3; ++k) {
    out += (k ? ", " : " ") + std::string("#") + std::to_string(v.splits[k]) + " " + sys.format_split(v.splits[k]);
  }
  out += " on taxa";
  for (std::size_t k = 0; k < 4; ++k) out += (k ? ", " : " ") + sys.ground().label(v.taxa[k]);
  return out;
}

void require_weakly_compatible(const WeightedSplitSystem& sys) {
  if (auto v = find_weak_incompatibility(sys)) {
    throw InputError("split system is not weakly compatible: " + describe(*v, sys));
  }
}

ComponentClass classify_component(const WeightedSplitSystem& sys, const std::vector<std::size_t>& component) {
  require_weakly_compatible(sys);
  if (component.empty()) throw PreconditionError("classify_component: empty component");
  ComponentClass c;
  if (component.size() == 1) {
    c.kind = ComponentClass::Kind::Singleton;
    c.parts = common_refinement(sys, component);
    c.order = component;
    return c;
  }
  if (pairwise_incompatible(sys, component)) {
    if (auto oct = match_octahedral(sys, component)) return *oct;
    if (auto circ = match_strictly_circular(sys, component)) return *circ;
    throw std::logic_error("weakly compatible incompatible split system is neither circular nor octahedral");
  }
  c.kind = ComponentClass::Kind::Consistent;
  c.parts = common_refinement(sys, component);
  c.order = component;
  return c;
}

std::vector<std::vector<std::size_t>> oct_subsystems(const WeightedSplitSystem& sys) {
  const IncompatibilityGraph g = incompatibility_graph(sys);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& comp : g.components) {
    if (classify_component(sys, comp).is_octahedral()) out.push_back(comp);
  }
  return out;
}

}  // namespace tightspan
