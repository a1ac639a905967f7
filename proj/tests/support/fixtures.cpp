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

#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace tightspan::fixtures {

GroundSet numbered_taxa(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(labels);
}

WeightedSplitSystem make_system(const GroundSet& ground, const std::vector<std::vector<std::size_t>>& sides,
                                const std::vector<Rational>& weights) {
  std::vector<Split> splits;
  for (const auto& side : sides) {
    TaxonMask m = 0;
    for (std::size_t x : side) m |= taxon_bit(x);
    splits.emplace_back(m, ground.size());
  }
  return WeightedSplitSystem(ground, splits, weights);
}

WeightedSplitSystem octahedral(const std::array<Rational, 4>& weights) {
  return make_system(numbered_taxa(6), {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 2, 4}},
                     {weights[0], weights[1], weights[2], weights[3]});
}

WeightedSplitSystem circular(std::size_t m) {
  std::vector<std::vector<std::size_t>> sides;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> side;
    for (std::size_t k = 0; k < m; ++k) side.push_back(i + k);
    sides.push_back(side);
  }
  return make_system(numbered_taxa(2 * m), sides, std::vector<Rational>(m, Rational(1)));
}

WeightedSplitSystem composite() {
  // a1..a5 = 0..4, c1..c5 = 5..9.
  GroundSet ground({"a1", "a2", "a3", "a4", "a5", "c1", "c2", "c3", "c4", "c5"});
  return make_system(ground,
                     {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 2, 4}, {5, 6, 7}, {6, 7, 8}, {7, 8, 9}, {0}, {9}},
                     {1, 1, 1, 1, 1, 1, 1, 2, 3});
}

Rational random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  Rational w(num(rng), den(rng));
  w.canonicalize();
  return w;
}

namespace {

WeightedSplitSystem from_masks(const GroundSet& ground, std::vector<TaxonMask> sides, std::mt19937_64& rng) {
  std::vector<Split> splits;
  std::vector<Rational> weights;
  for (TaxonMask side : sides) {
    Split s(side, ground.size());
    if (std::find(splits.begin(), splits.end(), s) != splits.end()) continue;
    splits.push_back(s);
    weights.push_back(random_weight(rng));
  }
  return WeightedSplitSystem(ground, splits, weights);
}

std::vector<std::size_t> shuffled(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// All distinct splits given by proper arcs of the circular order.
std::vector<TaxonMask> circular_arcs(const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<TaxonMask> arcs;
  for (std::size_t start = 0; start < n; ++start) {
    TaxonMask side = 0;
    for (std::size_t len = 1; len < n; ++len) {
      side |= taxon_bit(order[(start + len - 1) % n]);
      const Split s(side, n);
      if (std::find(arcs.begin(), arcs.end(), s.side()) == arcs.end()) arcs.push_back(s.side());
    }
  }
  return arcs;
}

}  // namespace

WeightedSplitSystem random_tree(std::mt19937_64& rng, std::size_t leaves) {
  std::vector<TaxonMask> clusters;
  for (std::size_t x = 0; x < leaves; ++x) clusters.push_back(taxon_bit(x));
  std::vector<TaxonMask> sides = clusters;
  while (clusters.size() > 2) {
    std::shuffle(clusters.begin(), clusters.end(), rng);
    const TaxonMask merged = clusters[0] | clusters[1];
    clusters.erase(clusters.begin(), clusters.begin() + 2);
    clusters.push_back(merged);
    sides.push_back(merged);
  }
  // Drop some internal splits to get multifurcations; keep every pendant one.
  std::bernoulli_distribution keep(0.75);
  std::vector<TaxonMask> chosen;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i < leaves || keep(rng)) chosen.push_back(sides[i]);
  }
  return from_masks(numbered_taxa(leaves), chosen, rng);
}

WeightedSplitSystem random_circular(std::mt19937_64& rng, std::size_t n, std::size_t max_splits) {
  std::vector<TaxonMask> arcs = circular_arcs(shuffled(rng, n));
  std::shuffle(arcs.begin(), arcs.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min(max_splits, arcs.size()));
  arcs.resize(count(rng));
  return from_masks(numbered_taxa(n), arcs, rng);
}

WeightedSplitSystem random_splits(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<TaxonMask> side(1, full_mask(n) - 1);
  std::vector<TaxonMask> sides;
  for (std::size_t i = 0; i < m; ++i) sides.push_back(side(rng));
  return from_masks(numbered_taxa(n), sides, rng);
}

WeightedSplitSystem random_weakly_compatible(std::mt19937_64& rng, std::size_t max_n, std::size_t max_splits) {
  std::uniform_int_distribution<std::size_t> size(6, max_n);
  while (true) {
    const std::size_t n = size(rng);
    const std::vector<std::size_t> order = shuffled(rng, n);
    std::vector<TaxonMask> pool = circular_arcs(order);
    if (std::bernoulli_distribution(0.5)(rng)) {
      // Octahedral splits on a random partition into six parts.
      std::vector<TaxonMask> parts(6, 0);
      for (std::size_t k = 0; k < n; ++k) parts[k < 6 ? k : std::uniform_int_distribution<std::size_t>(0, 5)(rng)] |= taxon_bit(order[k]);
      for (auto idx : std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 2, 4}}) {
        pool.push_back(parts[idx[0]] | parts[idx[1]] | parts[idx[2]]);
      }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::min(max_splits, pool.size()));
    pool.resize(count(rng));
    WeightedSplitSystem sys = from_masks(numbered_taxa(n), pool, rng);
    if (is_weakly_compatible_by_quadruples(sys)) return sys;
  }
}

std::vector<SplitMask> exhaustive_vertices(const WeightedSplitSystem& sys) {
  std::vector<SplitMask> out;
  const SplitMask limit = SplitMask{1} << sys.size();
  for (SplitMask choice = 0; choice < limit; ++choice) {
    if (is_buneman_vertex(sys, choice)) out.push_back(choice);
  }
  return out;
}

std::vector<std::pair<std::string, WeightedSplitSystem>> standard_fixtures() {
  std::vector<std::pair<std::string, WeightedSplitSystem>> out = {
      {"octahedral", octahedral()},
      {"octahedral-weighted", octahedral({1, 2, 3, 5})},
      {"circular-2", circular(2)},
      {"circular-3", circular(3)},
      {"composite", composite()},
  };
  std::mt19937_64 rng(20260101);
  for (std::size_t k = 0; k < 3; ++k) out.emplace_back("tree-" + std::to_string(k), random_tree(rng, 5 + k));
  for (std::size_t k = 0; k < 3; ++k) out.emplace_back("circular-random-" + std::to_string(k), random_circular(rng, 7, 8));
  return out;
}

}  // namespace tightspan::fixtures
