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

#include "cycloshell/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "cycloshell/polygon.hpp"

namespace cycloshell {

namespace {

// Inverse of a 4x4 matrix by Gauss-Jordan elimination with partial
// pivoting.  The embedding matrices are well conditioned.
std::array<std::array<double, 4>, 4> invert4(
    std::array<std::array<double, 4>, 4> m) {
  std::array<std::array<double, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    }
    if (std::fabs(m[pivot][col]) < 1e-12) {
      throw std::logic_error("invert4: singular embedding matrix");
    }
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    double scale = 1.0 / m[col][col];
    for (int j = 0; j < 4; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      double f = m[row][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 4; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

double to_f(const QuadRat& v) { return v.to_double(); }

struct EmbeddingInverse {
  // Row sums of |inverse| split into physical (embed) and internal
  // (embed of star) column blocks.
  std::array<double, 4> phys;
  std::array<double, 4> internal;
};

const EmbeddingInverse& embedding_inverse(int n) {
  static const EmbeddingInverse e8 = [] {
    std::array<std::array<double, 4>, 4> m{};
    for (int j = 0; j < 4; ++j) {
      CycloInt basis(j == 0, j == 1, j == 2, j == 3, 8);
      PlanePoint p = embed(basis), s = embed_star(basis);
      m[0][j] = to_f(p.x);
      m[1][j] = to_f(p.y);
      m[2][j] = to_f(s.x);
      m[3][j] = to_f(s.y);
    }
    auto inv = invert4(m);
    EmbeddingInverse out{};
    for (int j = 0; j < 4; ++j) {
      out.phys[j] = std::fabs(inv[j][0]) + std::fabs(inv[j][1]);
      out.internal[j] = std::fabs(inv[j][2]) + std::fabs(inv[j][3]);
    }
    return out;
  }();
  static const EmbeddingInverse e12 = [] {
    std::array<std::array<double, 4>, 4> m{};
    for (int j = 0; j < 4; ++j) {
      CycloInt basis(j == 0, j == 1, j == 2, j == 3, 12);
      PlanePoint p = embed(basis), s = embed_star(basis);
      m[0][j] = to_f(p.x);
      m[1][j] = to_f(p.y);
      m[2][j] = to_f(s.x);
      m[3][j] = to_f(s.y);
    }
    auto inv = invert4(m);
    EmbeddingInverse out{};
    for (int j = 0; j < 4; ++j) {
      out.phys[j] = std::fabs(inv[j][0]) + std::fabs(inv[j][1]);
      out.internal[j] = std::fabs(inv[j][2]) + std::fabs(inv[j][3]);
    }
    return out;
  }();
  if (n == 8) return e8;
  if (n == 12) return e12;
  throw std::invalid_argument("embedding_inverse: order must be 8 or 12");
}

// Floating-point value of norm_sq without constructing a QuadRat.
double norm_sq_f(const CycloInt& z, double root) {
  auto [p, q] = norm_sq_parts(z);
  return static_cast<double>(p) + static_cast<double>(q) * root;
}

// Enumerates the coordinate box covering |embed| <= rf, |embed_star| <=
// rint and keeps the points that pass the exact disk filter and whose
// star image lands strictly inside `win`.  Boundary contact throws
// BoundaryHit when `boundary_throws` is set, otherwise skips the point.
std::vector<CycloInt> box_scan(const TilingConfig& cfg, const QuadRat& radius,
                               const ConvexPolygon& win, bool boundary_throws) {
  if (radius.disc() != cfg.disc) {
    throw std::invalid_argument("box oracle: radius field mismatch");
  }
  if (radius.sign() <= 0) {
    throw std::invalid_argument("box oracle: radius must be positive");
  }
  double root = std::sqrt(static_cast<double>(cfg.disc));
  double rf = radius.to_double() + 1e-6;
  double rint = std::sqrt(circumradius_sq(win).to_double()) + 1e-6;
  std::int64_t m = box_bound(cfg.n, rf, rint);
  QuadRat r2 = radius * radius;
  double phys_cut = rf * rf + 1.0;
  double int_cut = (rint + 0.5) * (rint + 0.5);
  std::vector<CycloInt> out;
  for (std::int64_t a0 = -m; a0 <= m; ++a0) {
    for (std::int64_t a1 = -m; a1 <= m; ++a1) {
      for (std::int64_t a2 = -m; a2 <= m; ++a2) {
        for (std::int64_t a3 = -m; a3 <= m; ++a3) {
          CycloInt z(a0, a1, a2, a3, cfg.n);
          // Cheap float pre-cuts; the final decisions are exact.
          if (norm_sq_f(z, root) > phys_cut) continue;
          if (norm_sq_f(star(z), root) > int_cut) continue;
          if ((norm_sq(z) - r2).sign() > 0) continue;
          Location loc = locate(embed_star(z), win);
          if (loc == Location::Outside) continue;
          if (loc == Location::Boundary) {
            if (boundary_throws) throw BoundaryHit(z);
            continue;
          }
          out.push_back(z);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::int64_t box_bound(int n, double r_phys, double r_int) {
  const EmbeddingInverse& inv = embedding_inverse(n);
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    worst = std::max(worst, inv.phys[j] * r_phys + inv.internal[j] * r_int);
  }
  return static_cast<std::int64_t>(std::ceil(worst * (1.0 + 1e-12) + 1e-9));
}

std::vector<CycloInt> box_patch_vertices(const TilingConfig& cfg,
                                         const QuadRat& radius) {
  return box_scan(cfg, radius, cfg.window_shifted, /*boundary_throws=*/true);
}

std::vector<CycloInt> box_support_vectors(const TilingConfig& cfg,
                                          const QuadRat& radius) {
  return box_scan(cfg, radius, cfg.window_doubled, /*boundary_throws=*/false);
}

double grid_nu(const TilingConfig& cfg, const CycloInt& z, int resolution) {
  if (z.n != cfg.n) {
    throw std::invalid_argument("grid_nu: ring order mismatch");
  }
  if (resolution < 2) {
    throw std::invalid_argument("grid_nu: resolution too small");
  }
  // Midpoint-rule area of window ∩ (window - star(z)), over the
  // centered window in float arithmetic.
  const ConvexPolygon& win = cfg.window;
  std::size_t facets = win.size();
  std::vector<double> nx(facets), ny(facets), off(facets);
  for (std::size_t i = 0; i < facets; ++i) {
    HalfPlane h = win.facet(i);
    nx[i] = to_f(h.normal.x);
    ny[i] = to_f(h.normal.y);
    off[i] = to_f(h.offset);
  }
  auto inside = [&](double x, double y) {
    for (std::size_t i = 0; i < facets; ++i) {
      if (nx[i] * x + ny[i] * y > off[i]) return false;
    }
    return true;
  };
  PlanePoint zs = embed_star(z);
  double sx = to_f(zs.x), sy = to_f(zs.y);
  double bound = std::sqrt(circumradius_sq(win).to_double());
  double h = 2.0 * bound / resolution;
  std::int64_t hits = 0;
  for (int i = 0; i < resolution; ++i) {
    double x = -bound + (i + 0.5) * h;
    for (int j = 0; j < resolution; ++j) {
      double y = -bound + (j + 0.5) * h;
      if (inside(x, y) && inside(x + sx, y + sy)) ++hits;
    }
  }
  return hits * h * h / to_f(area(win));
}

}  // namespace cycloshell
