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

#include "cycloshell/polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cycloshell {

namespace {

void check_same_disc(int da, int db) {
  if (da != db) {
    throw std::invalid_argument("polygon: mixed fields " + std::to_string(da) +
                                " and " + std::to_string(db));
  }
}

// Removes consecutive duplicates and collinear middle vertices from a
// cyclic chain, in place.
void clean_chain(std::vector<PlanePoint>& v) {
  bool changed = true;
  while (changed && v.size() >= 2) {
    changed = false;
    std::vector<PlanePoint> next;
    next.reserve(v.size());
    std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
      const PlanePoint& prev = next.empty() ? v[(i + m - 1) % m] : next.back();
      if (v[i] == prev && m > 1) {
        changed = true;
        continue;
      }
      next.push_back(v[i]);
    }
    if (next.size() >= 2 && next.front() == next.back()) {
      next.pop_back();
      changed = true;
    }
    v = std::move(next);
    if (v.size() < 3) break;
    m = v.size();
    std::vector<PlanePoint> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const PlanePoint& a = v[(i + m - 1) % m];
      const PlanePoint& b = v[i];
      const PlanePoint& c = v[(i + 1) % m];
      if (cross(b - a, c - b).is_zero()) {
        changed = true;
        continue;
      }
      out.push_back(b);
    }
    v = std::move(out);
  }
}

QuadRat signed_area_twice(const std::vector<PlanePoint>& v, int disc) {
  QuadRat s(disc);
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += cross(v[i], v[(i + 1) % v.size()]);
  }
  return s;
}

}  // namespace

ConvexPolygon ConvexPolygon::empty_set(int disc) { return ConvexPolygon(disc); }

ConvexPolygon ConvexPolygon::from_vertices(std::vector<PlanePoint> verts) {
  if (verts.size() < 3) {
    throw std::invalid_argument("ConvexPolygon: need at least 3 vertices");
  }
  int disc = verts.front().disc();
  std::size_t m = verts.size();
  for (std::size_t i = 0; i < m; ++i) {
    check_same_disc(disc, verts[i].disc());
    const PlanePoint& a = verts[i];
    const PlanePoint& b = verts[(i + 1) % m];
    const PlanePoint& c = verts[(i + 2) % m];
    if (cross(b - a, c - b).sign() <= 0) {
      throw std::invalid_argument(
          "ConvexPolygon: vertices must be strictly convex counterclockwise");
    }
  }
  ConvexPolygon p(disc);
  p.verts_ = std::move(verts);
  return p;
}

ConvexPolygon ConvexPolygon::from_chain(std::vector<PlanePoint> verts,
                                        int disc) {
  for (const PlanePoint& w : verts) check_same_disc(disc, w.disc());
  clean_chain(verts);
  if (verts.size() < 3) return empty_set(disc);
  if (signed_area_twice(verts, disc).sign() <= 0) {
    throw std::logic_error("ConvexPolygon: chain is not counterclockwise");
  }
  return from_vertices(std::move(verts));
}

HalfPlane ConvexPolygon::facet(std::size_t i) const {
  const PlanePoint& a = verts_[i];
  const PlanePoint& b = verts_[(i + 1) % verts_.size()];
  PlanePoint e = b - a;
  PlanePoint normal(e.y, -e.x);
  return {normal, dot(normal, a)};
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.disc_ != b.disc_ || a.verts_.size() != b.verts_.size()) return false;
  std::size_t m = a.verts_.size();
  if (m == 0) return true;
  for (std::size_t shift = 0; shift < m; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      ok = a.verts_[i] == b.verts_[(i + shift) % m];
    }
    if (ok) return true;
  }
  return false;
}

ConvexPolygon clip(const ConvexPolygon& p, const HalfPlane& h) {
  check_same_disc(p.disc(), h.normal.disc());
  if (p.empty()) return p;
  std::size_t m = p.size();
  std::vector<int> side(m);
  bool any_out = false;
  for (std::size_t i = 0; i < m; ++i) {
    side[i] = (h.offset - dot(h.normal, p.vertex(i))).sign();
    any_out = any_out || side[i] < 0;
  }
  if (!any_out) return p;
  std::vector<PlanePoint> out;
  out.reserve(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const PlanePoint& v = p.vertex(i);
    const PlanePoint& w = p.vertex((i + 1) % m);
    if (side[i] >= 0) out.push_back(v);
    int t = side[(i + 1) % m];
    if ((side[i] > 0 && t < 0) || (side[i] < 0 && t > 0)) {
      // The edge crosses the boundary line; both dots differ, so the
      // denominator is nonzero.
      QuadRat num = h.offset - dot(h.normal, v);
      QuadRat den = dot(h.normal, w) - dot(h.normal, v);
      QuadRat lambda = num / den;
      out.push_back(v + PlanePoint(lambda * (w.x - v.x), lambda * (w.y - v.y)));
    }
  }
  return ConvexPolygon::from_chain(std::move(out), p.disc());
}

ConvexPolygon intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
  check_same_disc(p.disc(), q.disc());
  if (p.empty() || q.empty()) return ConvexPolygon::empty_set(p.disc());
  ConvexPolygon r = p;
  for (std::size_t i = 0; i < q.size() && !r.empty(); ++i) {
    r = clip(r, q.facet(i));
  }
  return r;
}

QuadRat area(const ConvexPolygon& p) {
  QuadRat s = signed_area_twice(p.vertices(), p.disc());
  return s / QuadRat::integer(2, p.disc());
}

Location locate(const PlanePoint& w, const ConvexPolygon& p) {
  check_same_disc(p.disc(), w.disc());
  if (p.empty()) return Location::Outside;
  bool boundary = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    HalfPlane h = p.facet(i);
    int s = (h.offset - dot(h.normal, w)).sign();
    if (s < 0) return Location::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Inside;
}

ConvexPolygon translate(const ConvexPolygon& p, const PlanePoint& t) {
  check_same_disc(p.disc(), t.disc());
  if (p.empty()) return p;
  std::vector<PlanePoint> v = p.vertices();
  for (PlanePoint& w : v) w = w + t;
  return ConvexPolygon::from_vertices(std::move(v));
}

ConvexPolygon scale(const ConvexPolygon& p, const QuadRat& factor) {
  check_same_disc(p.disc(), factor.disc());
  if (factor.sign() <= 0) {
    throw std::invalid_argument("scale: factor must be positive");
  }
  if (p.empty()) return p;
  std::vector<PlanePoint> v = p.vertices();
  for (PlanePoint& w : v) w = factor * w;
  return ConvexPolygon::from_vertices(std::move(v));
}

QuadRat circumradius_sq(const ConvexPolygon& p) {
  QuadRat best(p.disc());
  for (const PlanePoint& w : p.vertices()) best = max(best, norm_sq(w));
  return best;
}

bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  if (inner.empty()) return true;
  if (outer.empty()) return false;
  for (const PlanePoint& w : inner.vertices()) {
    if (locate(w, outer) == Location::Outside) return false;
  }
  return true;
}

std::vector<ConvexPolygon> subtract(const ConvexPolygon& p,
                                    const ConvexPolygon& q) {
  check_same_disc(p.disc(), q.disc());
  std::vector<ConvexPolygon> out;
  if (p.empty()) return out;
  if (q.empty()) {
    out.push_back(p);
    return out;
  }
  // Peel off the part of p beyond each facet of q in turn; what remains
  // at the end is p intersect q and is dropped.  The pieces have
  // pairwise disjoint interiors by construction.
  ConvexPolygon rest = p;
  for (std::size_t i = 0; i < q.size() && !rest.empty(); ++i) {
    HalfPlane h = q.facet(i);
    ConvexPolygon outside = clip(rest, h.complement());
    if (!outside.empty()) out.push_back(outside);
    rest = clip(rest, h);
  }
  return out;
}

void RegionSet::add(const ConvexPolygon& p) {
  if (p.empty()) return;
  for (const ConvexPolygon& have : pieces) {
    if (contains_polygon(have, p)) return;
  }
  std::erase_if(pieces, [&](const ConvexPolygon& have) {
    return contains_polygon(p, have);
  });
  pieces.push_back(p);
}

QuadRat union_area(const RegionSet& r) {
  if (r.pieces.empty()) return QuadRat(2);
  int disc = r.pieces.front().disc();
  QuadRat total(disc);
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    // Decompose pieces[i] minus everything before it into disjoint
    // convex parts and sum their areas.
    std::vector<ConvexPolygon> parts{r.pieces[i]};
    for (std::size_t j = 0; j < i && !parts.empty(); ++j) {
      std::vector<ConvexPolygon> next;
      for (const ConvexPolygon& x : parts) {
        auto diff = subtract(x, r.pieces[j]);
        next.insert(next.end(), diff.begin(), diff.end());
      }
      parts = std::move(next);
    }
    for (const ConvexPolygon& x : parts) total += area(x);
  }
  return total;
}

const WindowSpec& window_spec(int n) {
  static const WindowSpec oct = [] {
    WindowSpec s;
    s.n = 8;
    s.disc = 2;
    // Unit vectors at angles k*45 degrees; sqrt(2)/2 = (0 + 1*sqrt2)/2.
    QuadRat zero(2), one = QuadRat::integer(1, 2), mone = -one;
    QuadRat h(0, 1, 2, 2);
    s.normals = {{one, zero},  {h, h},   {zero, one},  {-h, h},
                 {mone, zero}, {-h, -h}, {zero, mone}, {h, -h}};
    s.inradius = QuadRat(1, 1, 2, 2);        // (1 + sqrt2)/2
    s.area = QuadRat(2, 2, 1, 2);            // 2 + 2*sqrt2
    s.circumradius_sq = QuadRat(2, 1, 2, 2); // (2 + sqrt2)/2
    return s;
  }();
  static const WindowSpec dod = [] {
    WindowSpec s;
    s.n = 12;
    s.disc = 3;
    // Unit vectors at angles k*30 degrees.
    QuadRat zero(3), one = QuadRat::integer(1, 3), half(1, 0, 2, 3);
    QuadRat rt32(0, 1, 2, 3);  // sqrt(3)/2
    s.normals = {{one, zero},   {rt32, half},   {half, rt32},
                 {zero, one},   {-half, rt32},  {-rt32, half},
                 {-one, zero},  {-rt32, -half}, {-half, -rt32},
                 {zero, -one},  {half, -rt32},  {rt32, -half}};
    s.inradius = QuadRat(2, 1, 2, 3);       // (2 + sqrt3)/2
    s.area = QuadRat(6, 3, 1, 3);           // 6 + 3*sqrt3
    s.circumradius_sq = QuadRat(2, 1, 1, 3);  // 2 + sqrt3
    return s;
  }();
  if (n == 8) return oct;
  if (n == 12) return dod;
  throw std::invalid_argument("window_spec: order must be 8 or 12");
}

ConvexPolygon make_window(int n, const PlanePoint& shift,
                          const QuadRat& scale_factor) {
  const WindowSpec& spec = window_spec(n);
  check_same_disc(spec.disc, shift.disc());
  if (scale_factor.sign() <= 0) {
    throw std::invalid_argument("make_window: scale must be positive");
  }
  QuadRat rho = spec.inradius * scale_factor;
  std::vector<QuadRat> offset(n, QuadRat(spec.disc));
  for (int k = 0; k < n; ++k) {
    offset[k] = rho + dot(spec.normals[k], shift);
  }
  // Vertex k is the meet of facet k and facet k+1 (Cramer's rule; the
  // normals are never parallel).
  std::vector<PlanePoint> verts(n, PlanePoint(QuadRat(spec.disc), QuadRat(spec.disc)));
  for (int k = 0; k < n; ++k) {
    int k2 = (k + 1) % n;
    const PlanePoint& n1 = spec.normals[k];
    const PlanePoint& n2 = spec.normals[k2];
    QuadRat det = cross(n1, n2);
    verts[k] = PlanePoint((offset[k] * n2.y - offset[k2] * n1.y) / det,
                          (offset[k2] * n1.x - offset[k] * n2.x) / det);
  }
  return ConvexPolygon::from_vertices(std::move(verts));
}

}  // namespace cycloshell
