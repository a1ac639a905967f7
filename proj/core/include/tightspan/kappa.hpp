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
#include <optional>
#include <utility>
#include <vector>

#include "tightspan/buneman.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/rational.hpp"
#include "tightspan/splits.hpp"

namespace tightspan {

// l1 distance over U(S): each split contributes |diff| on both of its sides.
Rational d1(const BunemanPoint& p1, const BunemanPoint& p2);

// A function f on the taxa together with its tight pairs {x, y}, x <= y,
// where f(x) + f(y) = d(x, y).
struct TightPoint {
  std::vector<Rational> values;
  std::vector<std::pair<std::size_t, std::size_t>> tight_pairs;

  // Points compare by their values only.
  bool operator==(const TightPoint& other) const { return values == other.values; }
};

TightPoint make_tight_point(std::vector<Rational> values, const FiniteMetric& d);

// f lies in P(d) and f(x) = max_y (d(x,y) - f(y)) for every x.
bool is_tight_point(const std::vector<Rational>& f, const FiniteMetric& d);

// sup-distance between two functions on the same taxa.
Rational d_inf(const std::vector<Rational>& f, const std::vector<Rational>& g);

// h_x = d(x, .)
std::vector<Rational> distance_row(const FiniteMetric& d, std::size_t x);

// kappa(phi)(x) = d1(phi, phi_x). Construction throws InputError, quoting a
// violating triple, when the system is not weakly compatible.
class KappaMap {
 public:
  explicit KappaMap(const WeightedSplitSystem& sys);

  const WeightedSplitSystem& system() const { return sys_; }
  const FiniteMetric& metric() const { return metric_; }

  std::vector<Rational> values(const BunemanPoint& p) const;
  std::vector<Rational> vertex_values(SplitMask choice) const;
  TightPoint operator()(const BunemanPoint& p) const;
  TightPoint vertex(SplitMask choice) const;

 private:
  WeightedSplitSystem sys_;
  FiniteMetric metric_;
};

// S(phi) for phi the midpoint of two distinct points with equal kappa image.
// Returns it when it is an octahedral split system and nullopt otherwise.
// Throws PreconditionError when p1 == p2 or the images differ.
std::optional<std::vector<std::size_t>> octahedral_witness(const KappaMap& kappa, const BunemanPoint& p1,
                                                          const BunemanPoint& p2);

}  // namespace tightspan
