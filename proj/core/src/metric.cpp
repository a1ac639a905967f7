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

#include "tightspan/metric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tightspan/errors.hpp"

namespace tightspan {

// ---------------------------------------------------------------------------
// DistanceMatrix

DistanceMatrix::DistanceMatrix(GroundSet ground) : ground_(std::move(ground)) {
  d_.assign(ground_.size() * ground_.size(), Rational(0));
}

DistanceMatrix::DistanceMatrix(GroundSet ground, std::vector<Rational> entries)
    : ground_(std::move(ground)), d_(std::move(entries)) {
  const std::size_t n = ground_.size();
  if (d_.size() != n * n) {
    throw InputError("distance matrix has " + std::to_string(d_.size()) + " entries, expected " +
                     std::to_string(n * n));
  }
  for (auto& v : d_) v.canonicalize();
  for (std::size_t x = 0; x < n; ++x) {
    if ((*this)(x, x) != 0) {
      throw InputError("nonzero diagonal entry d(" + ground_.label(x) + "," + ground_.label(x) + ")");
    }
    for (std::size_t y = x + 1; y < n; ++y) {
      if ((*this)(x, y) != (*this)(y, x)) {
        throw InputError("matrix is not symmetric: d(" + ground_.label(x) + "," + ground_.label(y) +
                         ")=" + to_string((*this)(x, y)) + " but d(" + ground_.label(y) + "," +
                         ground_.label(x) + ")=" + to_string((*this)(y, x)));
      }
    }
  }
}

void DistanceMatrix::set(std::size_t x, std::size_t y, const Rational& value) {
  d_[x * size() + y] = value;
  d_[y * size() + x] = value;
}

bool DistanceMatrix::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](const Rational& v) { return v == 0; });
}

DistanceMatrix DistanceMatrix::operator-(const DistanceMatrix& other) const {
  DistanceMatrix out(*this);
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] -= other.d_[i];
  return out;
}

DistanceMatrix DistanceMatrix::operator+(const DistanceMatrix& other) const {
  DistanceMatrix out(*this);
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] += other.d_[i];
  return out;
}

// ---------------------------------------------------------------------------
// FiniteMetric

FiniteMetric::FiniteMetric(DistanceMatrix matrix) : m_(std::move(matrix)) {
  const std::size_t n = m_.size();
  const GroundSet& g = m_.ground();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (m_(x, y) < 0) {
        throw InputError("negative distance d(" + g.label(x) + "," + g.label(y) + ")=" + to_string(m_(x, y)));
      }
      if (m_(x, y) == 0) pseudo_ = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (m_(x, z) > m_(x, y) + m_(y, z)) {
          throw InputError("triangle inequality violated: d(" + g.label(x) + "," + g.label(z) +
                           ")=" + to_string(m_(x, z)) + " > d(" + g.label(x) + "," + g.label(y) + ")+d(" +
                           g.label(y) + "," + g.label(z) + ")=" + to_string(m_(x, y) + m_(y, z)));
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Split metrics

DistanceMatrix split_metric(const GroundSet& ground, const Split& s) {
  DistanceMatrix out(ground);
  for (std::size_t x = 0; x < ground.size(); ++x) {
    for (std::size_t y = x + 1; y < ground.size(); ++y) {
      if (s.separates(x, y)) out.set(x, y, Rational(1));
    }
  }
  return out;
}

FiniteMetric synthesize(const WeightedSplitSystem& sys) {
  const std::size_t n = sys.taxon_count();
  DistanceMatrix out(sys.ground());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      Rational sum = 0;
      for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.split(i).separates(x, y)) sum += sys.weight(i);
      }
      out.set(x, y, sum);
    }
  }
  return FiniteMetric(std::move(out));
}

// ---------------------------------------------------------------------------
// Isolation index

namespace {

// The metric scaled by the lcm of its denominators, so the quadruple
// minimization runs on integers. Uses int64 when the largest sum cannot
// overflow, mpz otherwise.
struct ScaledMetric {
  std::size_t n = 0;
  mpz_class scale = 1;
  std::vector<mpz_class> big;
  std::vector<long long> small;
  bool use_small = false;

  explicit ScaledMetric(const FiniteMetric& d) : n(d.size()) {
    for (const Rational& v : d.matrix().entries()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    mpz_class max_entry = 0;
    big.reserve(n * n);
    for (const Rational& v : d.matrix().entries()) {
      mpz_class scaled = v.get_num() * (scale / v.get_den());
      if (scaled > max_entry) max_entry = scaled;
      big.push_back(std::move(scaled));
    }
    use_small = max_entry < mpz_class(static_cast<long>(std::numeric_limits<long long>::max() / 8));
    if (use_small) {
      small.reserve(big.size());
      for (const auto& v : big) small.push_back(v.get_si());
    }
  }

  template <typename Int>
  Int min_gap(const std::vector<Int>& m, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) const {
    Int best = 0;
    bool first = true;
    for (std::size_t a1 : a) {
      for (std::size_t a2 : a) {
        const Int& daa = m[a1 * n + a2];
        for (std::size_t b1 : b) {
          for (std::size_t b2 : b) {
            const Int& dbb = m[b1 * n + b2];
            Int s1 = m[a1 * n + b1] + m[a2 * n + b2];
            Int s2 = m[a1 * n + b2] + m[a2 * n + b1];
            Int s3 = daa + dbb;
            Int top = s1 > s2 ? s1 : s2;
            if (s3 > top) top = s3;
            Int gap = top - daa - dbb;
            if (first || gap < best) {
              best = gap;
              first = false;
            }
            if (best == 0) return best;
          }
        }
      }
    }
    return best;
  }

  Rational index(const Split& s) const {
    std::vector<std::size_t> a, b;
    for (std::size_t x = 0; x < n; ++x) (s.in_side(x) ? a : b).push_back(x);
    Rational out;
    if (use_small) {
      out = Rational(mpz_class(static_cast<long>(min_gap(small, a, b))), scale * 2);
    } else {
      out = Rational(min_gap(big, a, b), scale * 2);
    }
    out.canonicalize();
    return out;
  }
};

}  // namespace

Rational isolation_index(const FiniteMetric& d, const Split& s) {
  if (s.taxon_count() != d.size()) throw InputError("split and metric are over different ground sets");
  return ScaledMetric(d).index(s);
}

DecompositionResult decompose(const FiniteMetric& d) {
  const std::size_t n = d.size();
  if (n > kMaxDecomposeTaxa) {
    throw LimitError("decomposition enumerates all bipartitions and supports at most " +
                     std::to_string(kMaxDecomposeTaxa) + " taxa, got " + std::to_string(n));
  }
  const ScaledMetric scaled(d);
  std::vector<Split> splits;
  std::vector<Rational> weights;
  // Canonical sides are exactly the nonempty subsets of {1..n-1}.
  const TaxonMask limit = TaxonMask{1} << (n - 1);
  for (TaxonMask code = 1; code < limit; ++code) {
    Split s(code << 1, n);
    Rational alpha = scaled.index(s);
    if (alpha > 0) {
      splits.push_back(s);
      weights.push_back(std::move(alpha));
    }
  }
  DecompositionResult result;
  result.system = WeightedSplitSystem(d.ground(), std::move(splits), std::move(weights));
  result.residual = d.matrix() - synthesize(result.system).matrix();
  result.totally_split_decomposable = result.residual.is_zero();
  if (!is_weakly_compatible(result.system)) {
    throw std::logic_error("isolation-index splits are not weakly compatible");
  }
  return result;
}

}  // namespace tightspan
