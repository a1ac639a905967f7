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
#include <vector>

#include "tightspan/rational.hpp"
#include "tightspan/splits.hpp"

namespace tightspan {

// Dense symmetric n x n matrix of rationals with zero diagonal. This is the
// shape shared by metrics, split pseudometrics and decomposition residuals;
// it carries no triangle-inequality guarantee.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(GroundSet ground);
  // Throws InputError naming the offending entry if `entries` (row-major) is
  // not square, symmetric, or has a nonzero diagonal.
  DistanceMatrix(GroundSet ground, std::vector<Rational> entries);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const { return d_[x * size() + y]; }
  // Sets both (x,y) and (y,x).
  void set(std::size_t x, std::size_t y, const Rational& value);
  const std::vector<Rational>& entries() const { return d_; }

  bool is_zero() const;
  DistanceMatrix operator-(const DistanceMatrix& other) const;
  DistanceMatrix operator+(const DistanceMatrix& other) const;
  bool operator==(const DistanceMatrix& other) const = default;

 private:
  GroundSet ground_;
  std::vector<Rational> d_;
};

// A (pseudo)metric: nonnegative, symmetric, zero diagonal, triangle
// inequality. Distinct taxa at distance 0 are allowed and flagged.
class FiniteMetric {
 public:
  FiniteMetric() = default;
  // Throws InputError naming the violated pair or triangle.
  explicit FiniteMetric(DistanceMatrix matrix);

  const GroundSet& ground() const { return m_.ground(); }
  std::size_t size() const { return m_.size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const { return m_(x, y); }
  const DistanceMatrix& matrix() const { return m_; }
  bool is_pseudometric() const { return pseudo_; }

  bool operator==(const FiniteMetric& other) const { return m_ == other.m_; }

 private:
  DistanceMatrix m_;
  bool pseudo_ = false;
};

struct DecompositionResult {
  WeightedSplitSystem system;
  // d minus the split part; the split-prime remainder.
  DistanceMatrix residual;
  bool totally_split_decomposable = false;
};

// 0/1 matrix of the split pseudometric delta_S.
DistanceMatrix split_metric(const GroundSet& ground, const Split& s);

// d_{S,alpha} = sum alpha(S) delta_S. Pairs not separated by any split give a
// pseudometric (see FiniteMetric::is_pseudometric).
FiniteMetric synthesize(const WeightedSplitSystem& sys);

// Bandelt-Dress isolation index of `s` in `d`:
//   1/2 min_{a,a' in A; b,b' in B} [ max(d(a,b)+d(a',b'), d(a,b')+d(a',b), d(a,a')+d(b,b'))
//                                   - d(a,a') - d(b,b') ]
// Degenerate quadruples (a = a', b = b') are included.
Rational isolation_index(const FiniteMetric& d, const Split& s);

inline constexpr std::size_t kMaxDecomposeTaxa = 16;

// All splits with positive isolation index, weighted by it, plus the residual.
// Throws LimitError above kMaxDecomposeTaxa taxa.
DecompositionResult decompose(const FiniteMetric& d);

}  // namespace tightspan
