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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tightspan/errors.hpp"

namespace tightspan {
namespace {

TEST(D1, BasicIdentities) {
  const auto sys = fixtures::octahedral({1, 2, 3, 5});
  const auto bc = build_buneman_complex(sys);
  const FiniteMetric d = synthesize(sys);
  const BunemanPoint p = taxon_point(sys, 0);
  EXPECT_EQ(d1(p, p), 0);
  for (const auto& e : bc.edges()) {
    EXPECT_EQ(d1(vertex_point(sys, bc.vertices()[e.u]), vertex_point(sys, bc.vertices()[e.v])), sys.weight(e.split));
  }
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) EXPECT_EQ(d1(taxon_point(sys, x), taxon_point(sys, y)), d(x, y));
  }
  EXPECT_THROW(d1(p, BunemanPoint{}), PreconditionError);
}

TEST(Kappa, TaxonPointsMapToDistanceRows) {
  const auto sys = fixtures::composite();
  const KappaMap kappa(sys);
  for (std::size_t x = 0; x < sys.taxon_count(); ++x) {
    EXPECT_EQ(kappa.values(taxon_point(sys, x)), distance_row(kappa.metric(), x));
    EXPECT_EQ(kappa.vertex_values(taxon_choice(sys, x)), distance_row(kappa.metric(), x));
  }
}

TEST(Kappa, FourCubeCentreIsConstantTwo) {
  const auto sys = fixtures::octahedral();
  const KappaMap kappa(sys);
  const auto bc = build_buneman_complex(sys);
  const TightPoint centre = kappa(generator(bc, bc.cells().size() - 1));
  EXPECT_EQ(centre.values, std::vector<Rational>(6, Rational(2)));
  EXPECT_TRUE(is_tight_point(centre.values, kappa.metric()));
}

TEST(Kappa, IsAffine) {
  const auto sys = fixtures::octahedral({1, 2, 3, 5});
  const KappaMap kappa(sys);
  const BunemanPoint p = taxon_point(sys, 1);
  const BunemanPoint q = taxon_point(sys, 4);
  BunemanPoint mid;
  for (std::size_t i = 0; i < sys.size(); ++i) mid.side_value.push_back((p.side_value[i] + q.side_value[i]) / 2);
  const auto fp = kappa.values(p), fq = kappa.values(q), fm = kappa.values(mid);
  for (std::size_t x = 0; x < fm.size(); ++x) EXPECT_EQ(fm[x], (fp[x] + fq[x]) / 2);
}

TEST(Kappa, RejectsNonWeaklyCompatibleSystems) {
  const auto sys = fixtures::make_system(fixtures::numbered_taxa(4), {{0, 1}, {0, 2}, {0, 3}}, {1, 1, 1});
  EXPECT_THROW(KappaMap{sys}, InputError);
}

TEST(TightPoints, Predicates) {
  const FiniteMetric d = synthesize(fixtures::octahedral());
  for (std::size_t x = 0; x < d.size(); ++x) EXPECT_TRUE(is_tight_point(distance_row(d, x), d));
  EXPECT_FALSE(is_tight_point(std::vector<Rational>(6, Rational(10)), d));
  EXPECT_FALSE(is_tight_point(std::vector<Rational>(6, Rational(1)), d));
  EXPECT_FALSE(is_tight_point(std::vector<Rational>(5, Rational(2)), d));
  const TightPoint h0 = make_tight_point(distance_row(d, 0), d);
  // {0,y} is tight for every y.
  EXPECT_EQ(h0.tight_pairs.size() >= d.size(), true);
  EXPECT_EQ(h0.tight_pairs.front(), (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_EQ(d_inf(distance_row(d, 0), distance_row(d, 3)), d(0, 3));
}

TEST(Kappa, EveryVertexImageIsTight) {
  for (const auto& [name, sys] : fixtures::standard_fixtures()) {
    const KappaMap kappa(sys);
    for (SplitMask v : enumerate_vertices(sys)) {
      ASSERT_TRUE(is_tight_point(kappa.vertex_values(v), kappa.metric())) << name;
    }
  }
}

TEST(OctahedralWitness, HiddenPairOfUnitCube) {
  const auto sys = fixtures::octahedral();
  const KappaMap kappa(sys);
  const auto verts = enumerate_vertices(sys);
  std::size_t collisions = 0;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (kappa.vertex_values(verts[a]) != kappa.vertex_values(verts[b])) continue;
      ++collisions;
      const auto w = octahedral_witness(kappa, vertex_point(sys, verts[a]), vertex_point(sys, verts[b]));
      ASSERT_TRUE(w);
      EXPECT_EQ(*w, (std::vector<std::size_t>{0, 1, 2, 3}));
    }
  }
  EXPECT_EQ(collisions, 1u);
}

TEST(OctahedralWitness, PreconditionViolations) {
  const auto sys = fixtures::octahedral();
  const KappaMap kappa(sys);
  EXPECT_THROW(octahedral_witness(kappa, taxon_point(sys, 0), taxon_point(sys, 0)), PreconditionError);
  EXPECT_THROW(octahedral_witness(kappa, taxon_point(sys, 0), taxon_point(sys, 1)), PreconditionError);
}

}  // namespace
}  // namespace tightspan
