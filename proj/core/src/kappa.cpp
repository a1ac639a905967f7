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

#include "tightspan/kappa.hpp"

#include <algorithm>

#include "tightspan/errors.hpp"

namespace tightspan {

Rational d1(const BunemanPoint& p1, const BunemanPoint& p2) {
  if (p1.side_value.size() != p2.side_value.size()) {
    throw PreconditionError("d1: points belong to different split systems");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < p1.side_value.size(); ++i) sum += abs(p1.side_value[i] - p2.side_value[i]);
  return 2 * sum;
}

TightPoint make_tight_point(std::vector<Rational> values, const FiniteMetric& d) {
  TightPoint p;
  for (std::size_t x = 0; x < values.size(); ++x) {
    for (std::size_t y = x; y < values.size(); ++y) {
      if (values[x] + values[y] == d(x, y)) p.tight_pairs.emplace_back(x, y);
    }
  }
  p.values = std::move(values);
  return p;
}

bool is_tight_point(const std::vector<Rational>& f, const FiniteMetric& d) {
  if (f.size() != d.size()) return false;
  for (std::size_t x = 0; x < f.size(); ++x) {
    bool tight = false;
    for (std::size_t y = 0; y < f.size(); ++y) {
      const Rational slack = f[x] + f[y] - d(x, y);
      if (slack < 0) return false;
      if (slack == 0) tight = true;
    }
    if (!tight) return false;
  }
  return true;
}

Rational d_inf(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  if (f.size() != g.size()) throw PreconditionError("d_inf: functions on different taxon sets");
  Rational best = 0;
  for (std::size_t x = 0; x < f.size(); ++x) best = std::max(best, Rational(abs(f[x] - g[x])));
  return best;
}

std::vector<Rational> distance_row(const FiniteMetric& d, std::size_t x) {
  std::vector<Rational> row;
  row.reserve(d.size());
  for (std::size_t y = 0; y < d.size(); ++y) row.push_back(d(x, y));
  return row;
}

KappaMap::KappaMap(const WeightedSplitSystem& sys) : sys_(sys) {
  require_weakly_compatible(sys_);
  metric_ = synthesize(sys_);
}

std::vector<Rational> KappaMap::values(const BunemanPoint& p) const {
  if (p.side_value.size() != sys_.size()) throw PreconditionError("kappa: point has the wrong number of splits");
  std::vector<Rational> out(sys_.taxon_count(), Rational(0));
  for (std::size_t i = 0; i < sys_.size(); ++i) {
    const Rational& v = p.side_value[i];
    const Rational far = 2 * abs(v - sys_.weight(i) / 2);
    const Rational near = 2 * abs(v);
    for (std::size_t x = 0; x < out.size(); ++x) out[x] += sys_.split(i).in_side(x) ? near : far;
  }
  return out;
}

std::vector<Rational> KappaMap::vertex_values(SplitMask choice) const {
  std::vector<Rational> out(sys_.taxon_count(), Rational(0));
  for (std::size_t i = 0; i < sys_.size(); ++i) {
    const bool chosen = (choice & split_bit(i)) != 0;
    for (std::size_t x = 0; x < out.size(); ++x) {
      if (sys_.split(i).in_side(x) != chosen) out[x] += sys_.weight(i);
    }
  }
  return out;
}

TightPoint KappaMap::operator()(const BunemanPoint& p) const { return make_tight_point(values(p), metric_); }

TightPoint KappaMap::vertex(SplitMask choice) const { return make_tight_point(vertex_values(choice), metric_); }

std::optional<std::vector<std::size_t>> octahedral_witness(const KappaMap& kappa, const BunemanPoint& p1,
                                                          const BunemanPoint& p2) {
  if (p1 == p2) throw PreconditionError("octahedral_witness: the two points coincide");
  if (kappa.values(p1) != kappa.values(p2)) {
    throw PreconditionError("octahedral_witness: the two points have different kappa images");
  }
  const WeightedSplitSystem& sys = kappa.system();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const Rational mid = (p1.side_value[i] + p2.side_value[i]) / 2;
    if (mid != 0 && mid != sys.weight(i) / 2) support.push_back(i);
  }
  if (!match_octahedral(sys, support)) return std::nullopt;
  return support;
}

}  // namespace tightspan
