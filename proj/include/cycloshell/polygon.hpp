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

#ifndef CYCLOSHELL_POLYGON_HPP_
#define CYCLOSHELL_POLYGON_HPP_

#include <cstddef>
#include <vector>

#include "cycloshell/cyclo.hpp"
#include "cycloshell/quadrat.hpp"

namespace cycloshell {

// Closed half-plane { w : dot(normal, w) <= offset }.
struct HalfPlane {
  PlanePoint normal;
  QuadRat offset;

  // The complementary closed half-plane (shares the boundary line).
  HalfPlane complement() const { return {-normal, -offset}; }
};

// Convex polygon with exact vertices, counterclockwise, strictly convex
// (no repeated vertices, no collinear triples).  The empty set is
// represented by an empty vertex list.  Degenerate results of clipping
// (points, segments) normalize to empty.  All vertices share one field
// Q(sqrt(disc)); operations mixing fields throw std::invalid_argument.
class ConvexPolygon {
 public:
  // The empty set in Q(sqrt(2)).
  ConvexPolygon() : disc_(2) {}

  static ConvexPolygon empty_set(int disc);
  // Validates: at least 3 vertices, counterclockwise, strictly convex.
  // Throws std::invalid_argument otherwise.
  static ConvexPolygon from_vertices(std::vector<PlanePoint> verts);
  // Cleans a raw counterclockwise chain (consecutive duplicates,
  // collinear middle vertices); degenerate chains become empty.
  static ConvexPolygon from_chain(std::vector<PlanePoint> verts, int disc);

  bool empty() const { return verts_.empty(); }
  std::size_t size() const { return verts_.size(); }
  int disc() const { return disc_; }
  const std::vector<PlanePoint>& vertices() const { return verts_; }
  const PlanePoint& vertex(std::size_t i) const { return verts_[i]; }

  // Outward half-plane supporting edge i (from vertex i to vertex i+1).
  HalfPlane facet(std::size_t i) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  explicit ConvexPolygon(int disc) : disc_(disc) {}

  int disc_;
  std::vector<PlanePoint> verts_;
};

enum class Location { Inside, Boundary, Outside };

// P intersected with a closed half-plane.
ConvexPolygon clip(const ConvexPolygon& p, const HalfPlane& h);
ConvexPolygon intersect(const ConvexPolygon& p, const ConvexPolygon& q);
QuadRat area(const ConvexPolygon& p);
Location locate(const PlanePoint& w, const ConvexPolygon& p);
ConvexPolygon translate(const ConvexPolygon& p, const PlanePoint& t);
// Dilation about the origin; factor must be positive.
ConvexPolygon scale(const ConvexPolygon& p, const QuadRat& factor);
// Largest |v|^2 over the vertices; zero for the empty set.
QuadRat circumradius_sq(const ConvexPolygon& p);
// True when every vertex of inner lies in outer (closed).  For convex
// polygons this is containment.
bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner);

// P minus Q as disjoint convex pieces (interiors pairwise disjoint;
// shared edges are measure zero).
std::vector<ConvexPolygon> subtract(const ConvexPolygon& p,
                                    const ConvexPolygon& q);

// A finite union of convex pieces.  add() drops pieces already covered
// by a single existing piece and existing pieces covered by the new one.
struct RegionSet {
  std::vector<ConvexPolygon> pieces;

  void add(const ConvexPolygon& p);
  bool empty() const { return pieces.empty(); }
};

// Exact area of the union, by summing area(P_i \ (P_0 u ... u P_{i-1}))
// over disjoint convex decompositions.
QuadRat union_area(const RegionSet& r);

// Regular n-gon window (n = 8 or 12) with unit edge length, centered at
// shift, one pair of edges normal to the x axis.  scale_factor dilates
// about the center.  Vertices lie in Q(sqrt(2)) resp. Q(sqrt(3)).
ConvexPolygon make_window(int n, const PlanePoint& shift,
                          const QuadRat& scale_factor);

// The facet data of the centered unit-edge window: outward unit normals
// (the n-th roots of unity) and the common offset (the inradius).
struct WindowSpec {
  int n = 8;
  int disc = 2;
  std::vector<PlanePoint> normals;
  QuadRat inradius;
  QuadRat area;
  QuadRat circumradius_sq;
};
const WindowSpec& window_spec(int n);

}  // namespace cycloshell

#endif  // CYCLOSHELL_POLYGON_HPP_
