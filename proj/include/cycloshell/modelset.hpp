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

#ifndef CYCLOSHELL_MODELSET_HPP_
#define CYCLOSHELL_MODELSET_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycloshell/cyclo.hpp"
#include "cycloshell/polygon.hpp"
#include "cycloshell/quadrat.hpp"

namespace cycloshell {

// Sign of A + C*sqrt(e) for exact field values A, C and e >= 0 from the
// same field.  Decides nested-radical comparisons (e itself may be
// irrational) by one in-field squaring; exact in all cases.
int sign_lin_root(const QuadRat& a, const QuadRat& c, const QuadRat& e);

// True iff sqrt(ns) <= base + mu*sqrt(edge_ns), i.e. the point with
// squared length ns lies in the disk whose radius is base plus mu edge
// lengths.  mu may be negative; an overall negative radius gives false.
bool within_disk(const QuadRat& ns, const QuadRat& base, const QuadRat& mu,
                 const QuadRat& edge_ns);

namespace detail {

// One window facet as integer data: outward normal ((c1+e1*sqrt(d))/2,
// (c2+e2*sqrt(d))/2) and offset (op+oq*sqrt(d))/orr.  classify() decides
// n.y <=> offset purely in 64/128-bit integers.
struct FacetRow {
  std::int64_t c1, e1, c2, e2;
  std::int64_t op4, oq4, orr;  // op4 = 4*op, oq4 = 4*oq
};

struct FacetTable {
  int n = 8;
  int disc = 2;
  std::vector<FacetRow> rows;
};

FacetTable make_facet_table(int n, const PlanePoint& shift,
                            const QuadRat& scale_factor);
// Location of embed(star(x)) relative to the table's window.
Location classify(const FacetTable& table, const CycloInt& x);

}  // namespace detail

// Membership test hit the window boundary: the configuration is not
// generic and results would be ill-defined.  Choose a different shift.
struct BoundaryHit : std::runtime_error {
  explicit BoundaryHit(const CycloInt& x)
      : std::runtime_error("window boundary hit at lattice point " + x.str() +
                           "; choose a different shift"),
        point(x) {}
  CycloInt point;
};

// A planar cyclotomic cut-and-project vertex set: the points x of
// Z[xi_n] whose star image falls inside a regular n-gon window (unit
// edge) translated by `shift` in internal space.
struct TilingConfig {
  std::string name;
  int n = 8;
  int disc = 2;
  ConvexPolygon window;   // centered window
  PlanePoint shift;       // rational internal-space translation
  std::vector<CycloInt> edge_vectors;
  QuadRat edge_norm_sq;

  // Derived, kept for reuse: shifted membership window, doubled
  // (autocorrelation support) window, and their integer facet tables.
  ConvexPolygon window_shifted;
  ConvexPolygon window_doubled;
  detail::FacetTable vertex_facets;
  detail::FacetTable support_facets;

  // name is "ammann-beenker" or "shield"; shift coordinates must be
  // rational.  Throws std::invalid_argument otherwise.
  static TilingConfig make(const std::string& name, const PlanePoint& shift);
  // Default generic shift (1/7, 1/13).
  static TilingConfig make(const std::string& name);
  static TilingConfig ammann_beenker() { return make("ammann-beenker"); }
  static TilingConfig shield() { return make("shield"); }

  QuadRat zero() const { return QuadRat(disc); }
  QuadRat scalar(std::int64_t v) const { return QuadRat::integer(v, disc); }
};

// True iff x belongs to the vertex set.  Exact; a boundary hit throws
// BoundaryHit.
bool contains(const TilingConfig& cfg, const CycloInt& x);

// True iff the difference vector z has positive autocorrelation
// frequency, i.e. star(z) lies strictly inside the doubled window.
// Boundary tangency gives frequency zero and returns false.
bool in_support(const TilingConfig& cfg, const CycloInt& z);

struct Patch {
  TilingConfig config;
  QuadRat radius;
  std::vector<CycloInt> vertices;  // sorted
  std::vector<std::vector<std::int32_t>> adjacency;
};

// All vertices with |embed(x)|^2 <= R^2 and their edge adjacency,
// grown by BFS inside a disk enlarged by 3 edge lengths and filtered
// back to R.  Throws BoundaryHit (propagated) or std::runtime_error if
// no seed vertex exists within radius R.
Patch enumerate_patch(const TilingConfig& cfg, const QuadRat& radius);

// All support vectors z with |embed(z)|^2 <= R^2, sorted.  BFS over the
// step set chosen once per ring: edge_vectors, self-checked against the
// box oracle at small radius and extended to all support vectors of
// norm_sq <= 4 if a connectivity gap is detected (std::runtime_error if
// a gap survives the extension).
std::vector<CycloInt> enumerate_support(const TilingConfig& cfg,
                                        const QuadRat& radius);

}  // namespace cycloshell

#endif  // CYCLOSHELL_MODELSET_HPP_
