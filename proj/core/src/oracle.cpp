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

#include "tightspan/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tightspan/errors.hpp"
#include "tightspan/graph.hpp"
#include "tightspan/linalg.hpp"

namespace tightspan {

ConstraintSystem::ConstraintSystem(const FiniteMetric& d) : n(d.size()) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      pairs.emplace_back(x, y);
      rhs.push_back(d(x, y));
    }
  }
}

std::size_t ConstraintSystem::index(std::size_t x, std::size_t y) const {
  if (x > y) std::swap(x, y);
  // Rows for x come after the n + (n-1) + ... + (n-x+1) rows of smaller x.
  return x * n - x * (x - 1) / 2 + (y - x);
}

ConstraintSet ConstraintSystem::tight_set(const std::vector<Rational>& f) const {
  ConstraintSet t;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (f[pairs[k].first] + f[pairs[k].second] == rhs[k]) t.set(k);
  }
  return t;
}

std::size_t ConstraintSystem::rank(const ConstraintSet& rows) const {
  std::vector<std::vector<mpz_class>> m;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!rows.test(k)) continue;
    std::vector<mpz_class> row(n, 0);
    row[pairs[k].first] += 1;
    row[pairs[k].second] += 1;
    m.push_back(std::move(row));
  }
  return linalg::integer_rank(std::move(m));
}

namespace {

struct Ray {
  std::vector<mpz_class> v;
  ConstraintSet tight;
};

void normalize(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw LimitError("oracle supports at most " + std::to_string(cap) + " taxa (got " + std::to_string(n) +
                     "); raise the cap explicitly to go further");
  }
  if (n > kMaxOracleTaxa) {
    throw LimitError("oracle cannot handle more than " + std::to_string(kMaxOracleTaxa) + " taxa");
  }
}

}  // namespace

std::vector<TightPoint> oracle_vertices(const FiniteMetric& d, std::size_t cap) {
  const std::size_t n = d.size();
  check_cap(n, cap);
  const ConstraintSystem cs(d);

  // Scale d to integers: the cone {(f, s) : f_x + f_y >= D_xy s, s >= 0}
  // has P(D) = L * P(d) as its slice s = 1.
  mpz_class scale = 1;
  for (const Rational& r : cs.rhs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.get_den_mpz_t());
  std::vector<mpz_class> rhs;
  for (const Rational& r : cs.rhs) rhs.push_back(r.get_num() * (scale / r.get_den()));

  const std::size_t dim = n + 1;
  const std::size_t s_row = cs.size();
  auto value = [&](const std::vector<mpz_class>& v, std::size_t k) -> mpz_class {
    if (k == s_row) return v[n];
    const auto [x, y] = cs.pairs[k];
    return v[x] + v[y] - rhs[k] * v[n];
  };

  // Start from the orthant cut out by 2 f_x >= 0 and s >= 0.
  std::vector<std::size_t> initial;
  for (std::size_t x = 0; x < n; ++x) initial.push_back(cs.index(x, x));
  initial.push_back(s_row);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    Ray r;
    r.v.assign(dim, 0);
    r.v[j] = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) r.tight.set(initial[i]);
    }
    rays.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs.pairs[k].first == cs.pairs[k].second) continue;
    std::vector<Ray> pos, neg, next;
    std::vector<mpz_class> pos_val, neg_val;
    for (Ray& r : rays) {
      mpz_class val = value(r.v, k);
      const int s = sgn(val);
      if (s == 0) {
        r.tight.set(k);
        next.push_back(std::move(r));
      } else if (s > 0) {
        pos.push_back(std::move(r));
        pos_val.push_back(std::move(val));
      } else {
        neg.push_back(std::move(r));
        neg_val.push_back(std::move(val));
      }
    }
    // Combinatorial adjacency: no third ray is tight on all common constraints.
    std::vector<const Ray*> all;
    for (const auto* group : {&next, &pos, &neg}) {
      for (const Ray& r : *group) all.push_back(&r);
    }
    std::vector<Ray> created;
    for (std::size_t a = 0; a < pos.size(); ++a) {
      for (std::size_t b = 0; b < neg.size(); ++b) {
        const ConstraintSet common = pos[a].tight & neg[b].tight;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (const Ray* r : all) {
          if (r == &pos[a] || r == &neg[b]) continue;
          if ((common & ~r->tight).none()) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.v.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) fresh.v[i] = pos_val[a] * neg[b].v[i] - neg_val[b] * pos[a].v[i];
        normalize(fresh.v);
        fresh.tight = common;
        fresh.tight.set(k);
        created.push_back(std::move(fresh));
      }
    }
    for (Ray& r : pos) next.push_back(std::move(r));
    for (Ray& r : created) next.push_back(std::move(r));
    rays = std::move(next);
  }

  std::vector<TightPoint> out;
  for (const Ray& r : rays) {
    if (sgn(r.v[n]) == 0) continue;
    std::vector<Rational> f(n);
    for (std::size_t x = 0; x < n; ++x) {
      f[x] = Rational(r.v[x], r.v[n] * scale);
      f[x].canonicalize();
    }
    out.push_back(make_tight_point(std::move(f), d));
  }
  std::sort(out.begin(), out.end(), [](const TightPoint& a, const TightPoint& b) { return a.values < b.values; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& p : out) {
    if (!is_tight_point(p.values, d)) throw std::logic_error("oracle produced a vertex outside the tight span");
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> oracle_edges(const FiniteMetric& d,
                                                              const std::vector<TightPoint>& vertices) {
  const ConstraintSystem cs(d);
  const std::size_t n = d.size();
  std::vector<ConstraintSet> tight;
  for (const auto& v : vertices) tight.push_back(cs.tight_set(v.values));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices.size(); ++v) {
      const ConstraintSet common = tight[u] & tight[v];
      if (common.count() + 1 < n || cs.rank(common) != n - 1) continue;
      std::vector<Rational> mid(n);
      for (std::size_t x = 0; x < n; ++x) mid[x] = (vertices[u].values[x] + vertices[v].values[x]) / 2;
      if (is_tight_point(mid, d)) out.emplace_back(u, v);
    }
  }
  return out;
}

OracleResult run_oracle(const FiniteMetric& d, std::size_t cap) {
  OracleResult r;
  r.vertices = oracle_vertices(d, cap);
  r.edges = oracle_edges(d, r.vertices);
  r.block_count = biconnected_components(r.vertices.size(), r.edges).edge_blocks.size();
  return r;
}

bool ComparisonReport::cells_ok() const {
  return std::all_of(cell_checks.begin(), cell_checks.end(), [](const CellCheck& c) { return c.ok(); });
}

ComparisonReport compare(const PolytopalComplex& structural, const FiniteMetric& d, const OracleResult& oracle) {
  using Coords = std::vector<Rational>;
  using CoordEdge = std::pair<Coords, Coords>;
  ComparisonReport rep;
  const std::size_t n = d.size();

  std::set<Coords> ours, theirs;
  for (const auto& v : structural.vertices) ours.insert(v.coords);
  for (const auto& v : oracle.vertices) theirs.insert(v.values);
  std::set_difference(theirs.begin(), theirs.end(), ours.begin(), ours.end(),
                      std::back_inserter(rep.missing_vertices));
  std::set_difference(ours.begin(), ours.end(), theirs.begin(), theirs.end(), std::back_inserter(rep.extra_vertices));
  rep.vertices_match = rep.missing_vertices.empty() && rep.extra_vertices.empty();
  rep.structural_vertex_count = ours.size();
  rep.oracle_vertex_count = theirs.size();

  auto ordered = [](Coords a, Coords b) { return a < b ? CoordEdge{a, b} : CoordEdge{b, a}; };
  std::set<CoordEdge> our_edges, their_edges;
  for (auto [u, v] : structural.edges()) our_edges.insert(ordered(structural.vertices[u].coords, structural.vertices[v].coords));
  for (auto [u, v] : oracle.edges) their_edges.insert(ordered(oracle.vertices[u].values, oracle.vertices[v].values));
  std::set_difference(their_edges.begin(), their_edges.end(), our_edges.begin(), our_edges.end(),
                      std::back_inserter(rep.missing_edges));
  std::set_difference(our_edges.begin(), our_edges.end(), their_edges.begin(), their_edges.end(),
                      std::back_inserter(rep.extra_edges));
  rep.edges_match = rep.missing_edges.empty() && rep.extra_edges.empty();
  rep.structural_edge_count = our_edges.size();
  rep.oracle_edge_count = their_edges.size();

  rep.oracle_blocks = oracle.block_count;
  rep.structural_blocks = structural.blocks.size();

  const ConstraintSystem cs(d);
  std::vector<ConstraintSet> oracle_tight;
  for (const auto& v : oracle.vertices) oracle_tight.push_back(cs.tight_set(v.values));
  for (std::size_t id = 0; id < structural.cells.size(); ++id) {
    const TightSpanCell& cell = structural.cells[id];
    if (cell.dim == 0) continue;
    CellCheck check;
    check.cell = id;
    check.dim = cell.dim;
    ConstraintSet common;
    common.set();
    std::vector<Coords> points;
    Coords centroid(n, Rational(0));
    for (std::size_t v : cell.vertices) {
      const Coords& c = structural.vertices[v].coords;
      common &= cs.tight_set(c);
      points.push_back(c);
      for (std::size_t x = 0; x < n; ++x) centroid[x] += c[x];
    }
    for (auto& c : centroid) c /= static_cast<long>(cell.vertices.size());
    for (std::size_t k = cs.size(); k < common.size(); ++k) common.reset(k);
    check.face_dim = n - cs.rank(common);
    check.affine_dim = linalg::affine_dimension(points);
    check.centroid_tight = is_tight_point(centroid, d);
    std::set<Coords> on_face;
    for (std::size_t k = 0; k < oracle.vertices.size(); ++k) {
      if ((common & ~oracle_tight[k]).none()) on_face.insert(oracle.vertices[k].values);
    }
    check.vertices_exact = on_face == std::set<Coords>(points.begin(), points.end());
    rep.cell_checks.push_back(check);
  }
  return rep;
}

ComparisonReport compare(const PolytopalComplex& structural, std::size_t cap) {
  return compare(structural, structural.metric, run_oracle(structural.metric, cap));
}

}  // namespace tightspan
