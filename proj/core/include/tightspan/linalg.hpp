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

namespace tightspan::linalg {

// Row-major dense matrix of exact rationals.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}
  Rational& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

// Integer matrix rank by fraction-free (Bareiss) elimination.
std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows);

// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(Matrix m);

// Rank of a set of points' affine hull (number of independent differences).
std::size_t affine_dimension(const std::vector<std::vector<Rational>>& points);

}  // namespace tightspan::linalg
