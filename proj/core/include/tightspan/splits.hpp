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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tightspan/rational.hpp"

namespace tightspan {

// Bit x set <=> taxon x is a member. Ground sets are limited to 64 taxa.
using TaxonMask = std::uint64_t;
inline constexpr std::size_t kMaxTaxa = 64;

inline constexpr TaxonMask taxon_bit(std::size_t x) { return TaxonMask{1} << x; }
inline constexpr TaxonMask full_mask(std::size_t n) {
  return n == 64 ? ~TaxonMask{0} : (TaxonMask{1} << n) - 1;
}

// Ordered, duplicate-free list of taxon labels. Index order is the canonical
// order used by every other type.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  TaxonMask all() const { return full_mask(labels_.size()); }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws InputError naming the unknown label.
  std::size_t index_of(std::string_view label) const;

  // "{a,b,c}" using labels, in index order.
  std::string format(TaxonMask members) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A bipartition A|B of {0..n-1}, stored by its canonical side: the part that
// does not contain taxon 0.
class Split {
 public:
  // `one_side` may be either part; it is canonicalized. Throws InputError if
  // it is empty, the whole set, or mentions taxa >= n.
  Split(TaxonMask one_side, std::size_t n);

  TaxonMask side() const { return side_; }
  TaxonMask complement() const { return full_mask(n_) & ~side_; }
  std::size_t taxon_count() const { return n_; }

  // The part containing x, written S(x).
  TaxonMask part_of(std::size_t x) const { return (side_ & taxon_bit(x)) ? side_ : complement(); }
  // The part not containing x.
  TaxonMask far_part(std::size_t x) const { return (side_ & taxon_bit(x)) ? complement() : side_; }
  bool in_side(std::size_t x) const { return (side_ & taxon_bit(x)) != 0; }
  bool separates(std::size_t x, std::size_t y) const { return in_side(x) != in_side(y); }
  // A trivial split has a one-element part.
  bool is_trivial() const;

  bool operator==(const Split& other) const { return n_ == other.n_ && side_ == other.side_; }
  // Lexicographic comparison of the canonical sides as sorted index lists.
  std::strong_ordering operator<=>(const Split& other) const;

 private:
  TaxonMask side_ = 0;
  std::size_t n_ = 0;
};

// Splits sorted canonically, each with a positive weight alpha(S).
class WeightedSplitSystem {
 public:
  WeightedSplitSystem() = default;
  // Sorts splits canonically. Throws InputError on duplicate splits,
  // non-positive weights, or splits over a different number of taxa.
  WeightedSplitSystem(GroundSet ground, std::vector<Split> splits, std::vector<Rational> weights);

  const GroundSet& ground() const { return ground_; }
  std::size_t taxon_count() const { return ground_.size(); }
  std::size_t size() const { return splits_.size(); }
  bool empty() const { return splits_.empty(); }
  const Split& split(std::size_t i) const { return splits_.at(i); }
  const Rational& weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<Split>& splits() const { return splits_; }
  const std::vector<Rational>& weights() const { return weights_; }

  std::optional<std::size_t> find(const Split& s) const;

  // Subsystem on the given split indices (weights kept, order canonical).
  WeightedSplitSystem restrict_to(const std::vector<std::size_t>& indices) const;

  // "{1,2,3}|{4,5,6}" with labels.
  std::string format_split(std::size_t i) const;

  bool operator==(const WeightedSplitSystem& other) const = default;

 private:
  GroundSet ground_;
  std::vector<Split> splits_;
  std::vector<Rational> weights_;
};

// Throws InputError if the splits live on different ground-set sizes.
bool is_compatible(const Split& a, const Split& b);

// Three splits and four taxa x0..x3 with S_j(x_i) = S_j(x_0) iff i = j.
struct WeakCompatibilityViolation {
  std::array<std::size_t, 3> splits{};
  std::array<std::size_t, 4> taxa{};
};

// Default checker: far-side triple intersections,
// Sbar1(x) & Sbar2(x) & Sbar3(x) must equal one of the pairwise intersections.
// A witness quadruple is extracted for the first offending triple.
std::optional<WeakCompatibilityViolation> find_weak_incompatibility(const WeightedSplitSystem& sys);
bool is_weakly_compatible(const WeightedSplitSystem& sys);

// Reference checker: literal scan over split triples and taxon quadruples.
std::optional<WeakCompatibilityViolation> find_weak_incompatibility_by_quadruples(
    const WeightedSplitSystem& sys);
bool is_weakly_compatible_by_quadruples(const WeightedSplitSystem& sys);

// "splits #i A|B, #j ..., #k ... on taxa a, b, c, d"
std::string describe(const WeakCompatibilityViolation& v, const WeightedSplitSystem& sys);
// Throws InputError quoting the first violation.
void require_weakly_compatible(const WeightedSplitSystem& sys);

struct IncompatibilityGraph {
  std::size_t node_count = 0;
  // Sorted pairs (i, j), i < j, of incompatible splits.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Connected components, each sorted, listed by smallest member.
  std::vector<std::vector<std::size_t>> components;

  bool adjacent(std::size_t i, std::size_t j) const;
  // Index into `components` of the component holding split i.
  std::size_t component_of(std::size_t i) const;

  std::vector<std::size_t> component_index;
};

IncompatibilityGraph incompatibility_graph(const WeightedSplitSystem& sys);

// Shape of one connected component of the incompatibility graph. A
// one-split component is reported as Singleton, not as a (degenerate)
// incompatible system.
struct ComponentClass {
  enum class Kind { Singleton, StrictlyCircular, Octahedral, Consistent };

  Kind kind = Kind::Consistent;
  // StrictlyCircular: X_1..X_2k in cyclic order, X_1 holds the smallest taxon.
  // Octahedral: X_1..X_6 in the octahedral pattern.
  std::vector<TaxonMask> parts;
  // Split indices relabelled to match the pattern: order[i] is S_{i+1}.
  std::vector<std::size_t> order;

  bool is_octahedral() const { return kind == Kind::Octahedral; }
};

std::string_view to_string(ComponentClass::Kind kind);

// Pattern matchers over an arbitrary index subset (no connectivity or weak
// compatibility requirement). Return nullopt when the subset does not match.
std::optional<ComponentClass> match_octahedral(const WeightedSplitSystem& sys,
                                               const std::vector<std::size_t>& indices);
std::optional<ComponentClass> match_strictly_circular(const WeightedSplitSystem& sys,
                                                      const std::vector<std::size_t>& indices);

// Partition of the taxa into classes not separated by any split in `indices`.
std::vector<TaxonMask> common_refinement(const WeightedSplitSystem& sys,
                                         const std::vector<std::size_t>& indices);

// `component` must be a connected component of the incompatibility graph.
// Throws InputError if `sys` is not weakly compatible.
ComponentClass classify_component(const WeightedSplitSystem& sys,
                                  const std::vector<std::size_t>& component);

// Components classified Octahedral.
std::vector<std::vector<std::size_t>> oct_subsystems(const WeightedSplitSystem& sys);

}  // namespace tightspan
