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

#include "tightspan/linalg.hpp"

#include <utility>

namespace tightspan::linalg {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::size_t integer_rank(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        rows[i][j] = (rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j]) / prev;
      }
      rows[i][col] = 0;
    }
    prev = rows[r][col];
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> nullspace(Matrix m) {
  const std::vector<std::size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t affine_dimension(const std::vector<std::vector<Rational>>& points) {
  if (points.size() < 2) return 0;
  const std::size_t dim = points.front().size();
  Matrix m(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i - 1, j) = points[i][j] - points[0][j];
  }
  return rank(std::move(m));
}

}  // namespace tightspan::linalg
