// Copyright 2026 The Cycloshell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "cycloshell/modelset.hpp"
#include "cycloshell/oracles.hpp"

using namespace cycloshell;

namespace {

QuadRat qi(long v, int d) { return QuadRat::integer(v, d); }

double value_of(const QuadRat& a, const QuadRat& c, const QuadRat& e) {
  return a.to_double() + c.to_double() * std::sqrt(e.to_double());
}

bool sorted_unique(const std::vector<CycloInt>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] < v[i])) return false;
  }
  return true;
}

bool present(const std::vector<CycloInt>& sorted, const CycloInt& z) {
  return std::binary_search(sorted.begin(), sorted.end(), z);
}

}  // namespace

TEST_CASE("sign_lin_root decides nested radicals exactly") {
  CHECK(sign_lin_root(qi(1, 2), qi(1, 2), qi(2, 2)) == 1);
  CHECK(sign_lin_root(qi(-3, 2), qi(2, 2), qi(2, 2)) == -1);
  CHECK(sign_lin_root(qi(3, 2), qi(-2, 2), qi(2, 2)) == 1);
  CHECK(sign_lin_root(qi(-3, 2), qi(2, 2), qi(3, 2)) == 1);
  // Rational radicand can produce exact zero: 2 - 1*sqrt(4).
  CHECK(sign_lin_root(qi(2, 2), qi(-1, 2), qi(4, 2)) == 0);
  CHECK(sign_lin_root(QuadRat(3), qi(0, 3), QuadRat(2, -1, 1, 3)) == 0);
  CHECK_THROWS_AS(sign_lin_root(qi(1, 2), qi(1, 2), qi(-1, 2)),
                  std::invalid_argument);
  // Irrational radicand, tight cases around sqrt(2 - sqrt3) = 0.5176...
  QuadRat e(2, -1, 1, 3);
  CHECK(sign_lin_root(qi(-1, 3), qi(2, 3), e) == 1);   // 2*0.5176 vs 1
  CHECK(sign_lin_root(QuadRat(-21, 0, 20, 3), qi(2, 3), e) == -1);  // vs 1.05
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (int it = 0; it < 400; ++it) {
    int d = it % 2 ? 2 : 3;
    QuadRat a = QuadRat(num(rng), num(rng), den(rng), d);
    QuadRat c = QuadRat(num(rng), num(rng), den(rng), d);
    QuadRat rad = d == 2 ? qi(2, 2) : QuadRat(2, -1, 1, 3);
    double approx = value_of(a, c, rad);
    if (std::fabs(approx) < 1e-6) continue;
    CHECK(sign_lin_root(a, c, rad) == (approx > 0 ? 1 : -1));
  }
}

TEST_CASE("within_disk") {
  // Ammann-Beenker edges have unit length: radius 5 + 3 edges = 8.
  CHECK(within_disk(qi(64, 2), qi(5, 2), qi(3, 2), qi(1, 2)));
  CHECK_FALSE(within_disk(qi(65, 2), qi(5, 2), qi(3, 2), qi(1, 2)));
  // Negative slack makes the disk empty.
  CHECK_FALSE(within_disk(QuadRat(2), qi(1, 2), qi(-3, 2), qi(1, 2)));
  // Shield edge length sqrt(2 - sqrt3): radius 2 + 1 edge = 2.5176...
  QuadRat e(2, -1, 1, 3);
  CHECK(within_disk(qi(6, 3), qi(2, 3), qi(1, 3), e));
  CHECK_FALSE(within_disk(qi(7, 3), qi(2, 3), qi(1, 3), e));
}

TEST_CASE("tiling configurations") {
  TilingConfig ab = TilingConfig::ammann_beenker();
  CHECK(ab.n == 8);
  CHECK(ab.disc == 2);
  CHECK(ab.edge_vectors.size() == 8);
  CHECK(ab.edge_norm_sq == qi(1, 2));
  TilingConfig sh = TilingConfig::shield();
  CHECK(sh.n == 12);
  CHECK(sh.disc == 3);
  CHECK(sh.edge_vectors.size() == 12);
  CHECK(sh.edge_norm_sq == QuadRat(2, -1, 1, 3));
  for (const TilingConfig& cfg : {ab, sh}) {
    std::set<CycloInt> edges(cfg.edge_vectors.begin(), cfg.edge_vectors.end());
    CHECK(edges.size() == cfg.edge_vectors.size());
    for (const CycloInt& e : cfg.edge_vectors) {
      CHECK(norm_sq(e) == cfg.edge_norm_sq);
      CHECK(edges.count(-e) == 1);
    }
    CHECK(area(cfg.window_doubled) == qi(4, cfg.disc) * area(cfg.window));
  }
  CHECK_THROWS_AS(TilingConfig::make("penrose"), std::invalid_argument);
  CHECK_THROWS_AS(
      TilingConfig::make("ammann-beenker",
                         PlanePoint{QuadRat(0, 1, 2, 2), QuadRat(2)}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      TilingConfig::make("shield", PlanePoint{QuadRat(2), QuadRat(2)}),
      std::invalid_argument);
}

TEST_CASE("membership: examples and dual routing") {
  TilingConfig ab = TilingConfig::ammann_beenker();
  TilingConfig sh = TilingConfig::shield();
  CHECK(contains(ab, CycloInt::zero(8)));
  CHECK_FALSE(contains(ab, CycloInt(2, 0, 0, 0, 8)));
  CHECK(contains(sh, CycloInt::zero(12)));
  CHECK_THROWS_AS(contains(ab, CycloInt::zero(12)), std::invalid_argument);

  // The integer facet tables agree with the generic exact polygon
  // predicates everywhere, boundary classification included.
  for (const TilingConfig& cfg : {ab, sh}) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> coord(-6, 6);
    for (int it = 0; it < 2000; ++it) {
      CycloInt z(coord(rng), coord(rng), coord(rng), coord(rng), cfg.n);
      CHECK(detail::classify(cfg.vertex_facets, z) ==
            locate(embed_star(z), cfg.window_shifted));
      CHECK(detail::classify(cfg.support_facets, z) ==
            locate(embed_star(z), cfg.window_doubled));
    }
  }
}

TEST_CASE("boundary hits: shield at zero shift, never at the default") {
  PlanePoint zero2{QuadRat(2), QuadRat(2)};
  PlanePoint zero3{QuadRat(3), QuadRat(3)};
  TilingConfig sh0 = TilingConfig::make("shield", zero3);
  // star(1 - xi + xi^3) = 1 + xi lands exactly on a window vertex.
  CycloInt hit(1, -1, 0, 1, 12);
  CHECK(detail::classify(sh0.vertex_facets, hit) == Location::Boundary);
  CHECK_THROWS_AS(contains(sh0, hit), BoundaryHit);
  try {
    contains(sh0, hit);
  } catch (const BoundaryHit& b) {
    CHECK(b.point == hit);
  }
  // Patch growth from the origin runs into the same point.
  CHECK_THROWS_AS(enumerate_patch(sh0, qi(2, 3)), BoundaryHit);

  // The octagonal window at zero shift has no lattice boundary hits at
  // all: each facet equation would need a half-integer coordinate.
  TilingConfig ab0 = TilingConfig::make("ammann-beenker", zero2);
  for (std::int64_t a0 = -5; a0 <= 5; ++a0)
    for (std::int64_t a1 = -5; a1 <= 5; ++a1)
      for (std::int64_t a2 = -5; a2 <= 5; ++a2)
        for (std::int64_t a3 = -5; a3 <= 5; ++a3) {
          CHECK(detail::classify(ab0.vertex_facets,
                                 CycloInt(a0, a1, a2, a3, 8)) !=
                Location::Boundary);
        }

  // Default shift (1/7, 1/13): no membership boundary hits in a
  // generous box, for both tilings.
  for (const TilingConfig& cfg :
       {TilingConfig::ammann_beenker(), TilingConfig::shield()}) {
    for (std::int64_t a0 = -6; a0 <= 6; ++a0)
      for (std::int64_t a1 = -6; a1 <= 6; ++a1)
        for (std::int64_t a2 = -6; a2 <= 6; ++a2)
          for (std::int64_t a3 = -6; a3 <= 6; ++a3) {
            CycloInt z(a0, a1, a2, a3, cfg.n);
            CHECK(detail::classify(cfg.vertex_facets, z) !=
                  Location::Boundary);
          }
  }

  // The doubled support window is centered regardless of shift, and the
  // lattice does touch its boundary: exactly the tangency vectors whose
  // frequency vanishes.  They are reported as non-members, not errors.
  TilingConfig ab = TilingConfig::ammann_beenker();
  CycloInt tangent8(1, -1, 0, 1, 8);
  CHECK(norm_sq(tangent8) == QuadRat(3, -2, 1, 2));
  CHECK(detail::classify(ab.support_facets, tangent8) == Location::Boundary);
  CHECK_FALSE(in_support(ab, tangent8));
  TilingConfig sh = TilingConfig::shield();
  CycloInt tangent12(2, -2, 0, 1, 12);
  CHECK(norm_sq(tangent12) == QuadRat(7, -4, 1, 3));
  CHECK(detail::classify(sh.support_facets, tangent12) == Location::Boundary);
  CHECK_FALSE(in_support(sh, tangent12));
}

TEST_CASE("patch enumeration matches the box oracle") {
  TilingConfig ab = TilingConfig::ammann_beenker();
  TilingConfig sh = TilingConfig::shield();

  // Below the minimal inter-vertex distance only the seed survives.
  Patch tiny = enumerate_patch(ab, QuadRat(1, 0, 2, 2));
  CHECK(tiny.vertices == std::vector<CycloInt>{CycloInt::zero(8)});

  for (const TilingConfig& cfg : {ab, sh}) {
    for (long r : {5L, 10L}) {
      Patch p = enumerate_patch(cfg, qi(r, cfg.disc));
      CHECK(sorted_unique(p.vertices));
      CHECK(p.vertices == box_patch_vertices(cfg, qi(r, cfg.disc)));
    }
  }
}

TEST_CASE("patch structure invariants") {
  TilingConfig ab = TilingConfig::ammann_beenker();
  TilingConfig sh = TilingConfig::shield();
  for (const TilingConfig& cfg : {ab, sh}) {
    Patch p = enumerate_patch(cfg, qi(5, cfg.disc));
    QuadRat r2 = qi(25, cfg.disc);
    std::set<CycloInt> edges(cfg.edge_vectors.begin(), cfg.edge_vectors.end());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      CHECK((norm_sq(p.vertices[i]) - r2).sign() <= 0);
      for (std::int32_t j : p.adjacency[i]) {
        CHECK(edges.count(p.vertices[j] - p.vertices[i]) == 1);
        const auto& back = p.adjacency[j];
        CHECK(std::find(back.begin(), back.end(),
                        static_cast<std::int32_t>(i)) != back.end());
      }
    }
    // No two vertices closer than sqrt(2 - sqrt(d)): the short rhombus
    // diagonal for Ammann-Beenker, the edge length for the shield.
    QuadRat min_norm(2, -1, 1, cfg.disc);
    std::vector<double> xs, ys;
    for (const CycloInt& v : p.vertices) {
      PlanePoint w = embed(v);
      xs.push_back(w.x.to_double());
      ys.push_back(w.y.to_double());
    }
    double min_sq = min_norm.to_double();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
        double dsq = dx * dx + dy * dy;
        CHECK(dsq > min_sq - 1e-9);
        if (dsq < min_sq + 1e-9) {
          CHECK(norm_sq(p.vertices[i] - p.vertices[j]) == min_norm);
        }
      }
    }
  }

  // Shield degrees never exceed 6, and every vertex whose full edge
  // neighborhood fits in the disk has 3 to 6 neighbors.
  Patch shp = enumerate_patch(sh, qi(5, 3));
  for (std::size_t i = 0; i < shp.vertices.size(); ++i) {
    CHECK(shp.adjacency[i].size() <= 6);
    if (within_disk(norm_sq(shp.vertices[i]), qi(5, 3), QuadRat::integer(-1, 3),
                    sh.edge_norm_sq)) {
      CHECK(shp.adjacency[i].size() >= 3);
    }
  }

  // The average Ammann-Beenker degree approaches 4 from below.
  Patch big = enumerate_patch(ab, qi(20, 2));
  double total = 0;
  for (const auto& nbrs : big.adjacency) total += nbrs.size();
  double avg = total / big.adjacency.size();
  CHECK(avg > 3.7);
  CHECK(avg <= 4.0);
  // Interior vertices have 3 to 8 neighbors.
  for (std::size_t i = 0; i < big.vertices.size(); ++i) {
    if (within_disk(norm_sq(big.vertices[i]), qi(19, 2), QuadRat(2),
                    qi(1, 2))) {
      CHECK(big.adjacency[i].size() >= 3);
      CHECK(big.adjacency[i].size() <= 8);
    }
  }
}

TEST_CASE("support enumeration") {
  TilingConfig ab = TilingConfig::ammann_beenker();
  TilingConfig sh = TilingConfig::shield();

  auto s5 = enumerate_support(ab, qi(5, 2));
  CHECK(sorted_unique(s5));
  CHECK(present(s5, CycloInt::zero(8)));
  for (const CycloInt& e : ab.edge_vectors) CHECK(present(s5, e));
  CHECK_FALSE(present(s5, CycloInt(3, 0, 0, 0, 8)));
  CHECK_FALSE(in_support(ab, CycloInt(3, 0, 0, 0, 8)));
  for (const CycloInt& z : s5) CHECK(present(s5, -z));
  CHECK(s5 == box_support_vectors(ab, qi(5, 2)));

  auto t5 = enumerate_support(sh, qi(5, 3));
  CHECK(present(t5, CycloInt::zero(12)));
  for (const CycloInt& e : sh.edge_vectors) CHECK(present(t5, e));
  for (const CycloInt& z : t5) CHECK(present(t5, -z));
  CHECK(t5 == box_support_vectors(sh, qi(5, 3)));

  // Minimal nonzero support norms: 2 - sqrt2 and 2 - sqrt3.
  for (const TilingConfig& cfg : {ab, sh}) {
    auto s = enumerate_support(cfg, qi(3, cfg.disc));
    QuadRat best = qi(100, cfg.disc);
    for (const CycloInt& z : s) {
      if (!z.is_zero()) best = min(best, norm_sq(z));
    }
    CHECK(best == QuadRat(2, -1, 1, cfg.disc));
  }

  // Quadratic growth: doubling the radius roughly quadruples the count.
  for (const TilingConfig& cfg : {ab, sh}) {
    double small = enumerate_support(cfg, qi(6, cfg.disc)).size();
    double large = enumerate_support(cfg, qi(12, cfg.disc)).size();
    CHECK(large / small > 3.0);
    CHECK(large / small < 5.0);
  }
}
