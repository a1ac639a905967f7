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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tightspan/buneman.hpp"
#include "tightspan/splits.hpp"

namespace tightspan::fixtures {

// Taxa labelled "1".."n".
GroundSet numbered_taxa(std::size_t n);

WeightedSplitSystem make_system(const GroundSet& ground, const std::vector<std::vector<std::size_t>>& sides,
                                const std::vector<Rational>& weights);

// 123|456, 234|561, 345|612, 135|246 on six taxa.
WeightedSplitSystem octahedral(const std::array<Rational, 4>& weights = {1, 1, 1, 1});

// {i..i+m-1} | rest on 2m points, i = 1..m, unit weights.
WeightedSplitSystem circular(std::size_t m);

// Octahedral component on a1..a5 + c-part, strictly circular triple on
// c1..c5 + a-part, and the trivial splits {a1} and {c5}.
WeightedSplitSystem composite();

// Clusters of a random hierarchy on `leaves` taxa, some dropped, random weights.
WeightedSplitSystem random_tree(std::mt19937_64& rng, std::size_t leaves);

// Random arcs of a random circular order; weakly compatible by construction.
WeightedSplitSystem random_circular(std::mt19937_64& rng, std::size_t n, std::size_t max_splits);

// Arbitrary distinct splits; usually not weakly compatible.
WeightedSplitSystem random_splits(std::mt19937_64& rng, std::size_t n, std::size_t m);

// Random subsets of circular arcs and octahedral splits on a random
// partition, rejection-sampled for weak compatibility.
WeightedSplitSystem random_weakly_compatible(std::mt19937_64& rng, std::size_t max_n, std::size_t max_splits);

Rational random_weight(std::mt19937_64& rng);

// Every pairwise-intersecting choice, by brute force over all 2^m masks.
std::vector<SplitMask> exhaustive_vertices(const WeightedSplitSystem& sys);

// Named instances shared by the property suites.
std::vector<std::pair<std::string, WeightedSplitSystem>> standard_fixtures();

}  // namespace tightspan::fixtures
