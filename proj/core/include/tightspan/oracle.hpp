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

#include <bitset>
#include <cstddef>
#include <utility>
#include <vector>

#include "tightspan/kappa.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/tight_span.hpp"

namespace tightspan {

inline constexpr std::size_t kDefaultOracleCap = 8;
// Tight sets are bitsets over the n(n+1)/2 constraints plus s >= 0.
inline constexpr std::size_t kMaxOracleTaxa = 15;

using ConstraintSet = std::bitset<128>;

// The inequalities f(x) + f(y) >= d(x,y) over unordered pairs, x = y included.
struct ConstraintSystem {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Rational> rhs;

  explicit ConstraintSystem(const FiniteMetric& d);

  std::size_t size() const { return pairs.size(); }
  // Index of the constraint for {x, y}.
  std::size_t index(std::size_t x, std::size_t y) const;
  ConstraintSet tight_set(const std::vector<Rational>& f) const;
  // Rank of the constraint normals in `rows`.
  std::size_t rank(const ConstraintSet& rows) const;
};

// Vertices of P(d), sorted by coordinates. Computed by double description on
// the homogenized cone of P(d); uses only the metric. Throws LimitError when
// n exceeds `cap` or kMaxOracleTaxa.
std::vector<TightPoint> oracle_vertices(const FiniteMetric& d, std::size_t cap = kDefaultOracleCap);

// Pairs (u, v), u < v, spanning a bounded 1-face: the common tight
// constraints leave a one-dimensional solution space and the midpoint is a
// tight point.
std::vector<std::pair<std::size_t, std::size_t>> oracle_edges(const FiniteMetric& d,
                                                              const std::vector<TightPoint>& vertices);

struct OracleResult {
  std::vector<TightPoint> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t block_count = 0;
};

OracleResult run_oracle(const FiniteMetric& d, std::size_t cap = kDefaultOracleCap);

struct CellCheck {
  std::size_t cell = 0;
  std::size_t dim = 0;
  // Dimension of the solution space of the common tight equalities.
  std::size_t face_dim = 0;
  std::size_t affine_dim = 0;
  bool centroid_tight = false;
  // Oracle vertices on the face are exactly the cell's vertices.
  bool vertices_exact = false;

  bool ok() const { return face_dim == dim && affine_dim == dim && centroid_tight && vertices_exact; }
};

struct ComparisonReport {
  bool vertices_match = false;
  bool edges_match = false;
  std::size_t oracle_vertex_count = 0;
  std::size_t structural_vertex_count = 0;
  std::size_t oracle_edge_count = 0;
  std::size_t structural_edge_count = 0;
  std::size_t oracle_blocks = 0;
  std::size_t structural_blocks = 0;
  std::vector<std::vector<Rational>> missing_vertices;
  std::vector<std::vector<Rational>> extra_vertices;
  // As coordinate pairs.
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> missing_edges;
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> extra_edges;
  std::vector<CellCheck> cell_checks;

  bool blocks_match() const { return oracle_blocks == structural_blocks; }
  bool cells_ok() const;
  bool ok() const { return vertices_match && edges_match && blocks_match() && cells_ok(); }
};

ComparisonReport compare(const PolytopalComplex& structural, const FiniteMetric& d, const OracleResult& oracle);
ComparisonReport compare(const PolytopalComplex& structural, std::size_t cap = kDefaultOracleCap);

}  // namespace tightspan
