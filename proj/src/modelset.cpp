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

#include "cycloshell/modelset.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cycloshell/oracles.hpp"

namespace cycloshell {

int sign_lin_root(const QuadRat& a, const QuadRat& c, const QuadRat& e) {
  if (e.sign() < 0) {
    throw std::invalid_argument("sign_lin_root: negative radicand");
  }
  if (e.is_zero()) return a.sign();
  int sa = a.sign();
  int sc = c.sign();
  if (sc == 0) return sa;
  if (sa == 0) return sc;
  if (sa == sc) return sa;
  // Opposite signs: |a| <=> |c|*sqrt(e) squares to a^2 <=> c^2*e, which
  // stays inside the field.
  int t = (a * a - c * c * e).sign();
  return sa > 0 ? t : -t;
}

bool within_disk(const QuadRat& ns, const QuadRat& base, const QuadRat& mu,
                 const QuadRat& edge_ns) {
  // Radius = base + mu*sqrt(edge_ns); empty disk when negative.
  if (sign_lin_root(base, mu, edge_ns) < 0) return false;
  QuadRat a = ns - base * base - mu * mu * edge_ns;
  QuadRat c = -(base * mu + base * mu);
  return sign_lin_root(a, c, edge_ns) <= 0;
}

namespace detail {

namespace {

std::int64_t to_i64(const BigInt& v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("facet table: offset out of 64-bit range");
  }
  return v.convert_to<std::int64_t>();
}

// Numerators of a field value known to have denominator 1 or 2, as
// (c + e*sqrt(d))/2.
std::pair<std::int64_t, std::int64_t> halves(const QuadRat& v) {
  if (v.r() == 1) return {to_i64(v.p() * 2), to_i64(v.q() * 2)};
  if (v.r() == 2) return {to_i64(v.p()), to_i64(v.q())};
  throw std::logic_error("facet table: unexpected normal denominator");
}

int sign_pair(__int128 a, __int128 b, int d) {
  if (a == 0 && b == 0) return 0;
  if (a >= 0 && b >= 0) return 1;
  if (a <= 0 && b <= 0) return -1;
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  if (a > kLimit || -a > kLimit || b > kLimit || -b > kLimit) {
    throw std::overflow_error("facet table: coordinates too large");
  }
  __int128 lhs = a * a;
  __int128 rhs = b * b * d;
  if (lhs == rhs) {
    throw std::logic_error("facet table: irrational equality");
  }
  if (a > 0) return lhs > rhs ? 1 : -1;
  return lhs < rhs ? 1 : -1;
}

}  // namespace

FacetTable make_facet_table(int n, const PlanePoint& shift,
                            const QuadRat& scale_factor) {
  const WindowSpec& spec = window_spec(n);
  FacetTable t;
  t.n = n;
  t.disc = spec.disc;
  t.rows.reserve(n);
  QuadRat rho = spec.inradius * scale_factor;
  for (int k = 0; k < n; ++k) {
    QuadRat offset = rho + dot(spec.normals[k], shift);
    auto [c1, e1] = halves(spec.normals[k].x);
    auto [c2, e2] = halves(spec.normals[k].y);
    FacetRow row;
    row.c1 = c1;
    row.e1 = e1;
    row.c2 = c2;
    row.e2 = e2;
    row.op4 = to_i64(offset.p() * 4);
    row.oq4 = to_i64(offset.q() * 4);
    row.orr = to_i64(offset.r());
    t.rows.push_back(row);
  }
  return t;
}

Location classify(const FacetTable& table, const CycloInt& x) {
  if (x.n != table.n) {
    throw std::invalid_argument("classify: ring order mismatch");
  }
  CycloInt b = star(x);
  // Star image as ((u1 + v1*sqrt(d))/2, (u2 + v2*sqrt(d))/2).
  std::int64_t u1, v1, u2, v2;
  if (x.n == 8) {
    u1 = 2 * b.a[0];
    v1 = b.a[1] - b.a[3];
    u2 = 2 * b.a[2];
    v2 = b.a[1] + b.a[3];
  } else {
    u1 = 2 * b.a[0] + b.a[2];
    v1 = b.a[1];
    u2 = b.a[1] + 2 * b.a[3];
    v2 = b.a[2];
  }
  int d = table.disc;
  bool boundary = false;
  for (const FacetRow& f : table.rows) {
    // normal . y = (P + Q*sqrt(d))/4 against offset (op + oq*sqrt(d))/orr.
    __int128 p = static_cast<__int128>(f.c1) * u1 +
                 static_cast<__int128>(f.e1) * v1 * d +
                 static_cast<__int128>(f.c2) * u2 +
                 static_cast<__int128>(f.e2) * v2 * d;
    __int128 q = static_cast<__int128>(f.c1) * v1 +
                 static_cast<__int128>(f.e1) * u1 +
                 static_cast<__int128>(f.c2) * v2 +
                 static_cast<__int128>(f.e2) * u2;
    __int128 a = f.orr * p - static_cast<__int128>(f.op4);
    __int128 bq = f.orr * q - static_cast<__int128>(f.oq4);
    int s = sign_pair(a, bq, d);
    if (s > 0) return Location::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Inside;
}

}  // namespace detail

TilingConfig TilingConfig::make(const std::string& name,
                                const PlanePoint& shift) {
  TilingConfig cfg;
  cfg.name = name;
  if (name == "ammann-beenker") {
    cfg.n = 8;
  } else if (name == "shield") {
    cfg.n = 12;
  } else {
    throw std::invalid_argument("TilingConfig: unknown tiling '" + name + "'");
  }
  const WindowSpec& spec = window_spec(cfg.n);
  cfg.disc = spec.disc;
  if (shift.disc() != cfg.disc) {
    throw std::invalid_argument("TilingConfig: shift field mismatch");
  }
  if (!shift.x.is_rational() || !shift.y.is_rational()) {
    throw std::invalid_argument("TilingConfig: shift must be rational");
  }
  cfg.shift = shift;
  QuadRat one = QuadRat::integer(1, cfg.disc);
  QuadRat two = QuadRat::integer(2, cfg.disc);
  PlanePoint origin{QuadRat(cfg.disc), QuadRat(cfg.disc)};
  cfg.window = make_window(cfg.n, origin, one);
  cfg.window_shifted = make_window(cfg.n, shift, one);
  cfg.window_doubled = make_window(cfg.n, origin, two);
  cfg.vertex_facets = detail::make_facet_table(cfg.n, shift, one);
  cfg.support_facets = detail::make_facet_table(cfg.n, origin, two);
  CycloInt step = cfg.n == 8 ? CycloInt::one(8)
                             : CycloInt(1, -1, 0, 0, 12);  // 1 - xi
  cfg.edge_norm_sq = norm_sq(step);
  for (int j = 0; j < cfg.n; ++j) {
    cfg.edge_vectors.push_back(step);
    step = mul_xi(step);
  }
  return cfg;
}

TilingConfig TilingConfig::make(const std::string& name) {
  int disc = name == "shield" ? 3 : 2;
  PlanePoint shift{QuadRat(1, 0, 7, disc), QuadRat(1, 0, 13, disc)};
  return make(name, shift);
}

bool contains(const TilingConfig& cfg, const CycloInt& x) {
  if (x.n != cfg.n) {
    throw std::invalid_argument("contains: ring order mismatch");
  }
  Location loc = detail::classify(cfg.vertex_facets, x);
  if (loc == Location::Boundary) throw BoundaryHit(x);
  return loc == Location::Inside;
}

bool in_support(const TilingConfig& cfg, const CycloInt& z) {
  if (z.n != cfg.n) {
    throw std::invalid_argument("in_support: ring order mismatch");
  }
  return detail::classify(cfg.support_facets, z) == Location::Inside;
}

namespace {

// BFS over `steps` through the set accepted by `member`, restricted to
// the disk of radius R plus 3 edge lengths; returns the accepted points
// with |embed(x)|^2 <= R^2, sorted.
template <typename Member>
std::vector<CycloInt> grow_in_disk(const TilingConfig& cfg,
                                   const CycloInt& seed, const QuadRat& radius,
                                   const std::vector<CycloInt>& steps,
                                   Member member) {
  QuadRat r2 = radius * radius;
  // Search halo = radius + 3 step lengths, tested in floating point with
  // slack; the exact filter below decides output membership.
  double halo = radius.to_double() +
                3.0 * std::sqrt(cfg.edge_norm_sq.to_double()) + 1e-6;
  double halo_sq = halo * halo * (1.0 + 1e-9) + 1.0;
  double root = std::sqrt(static_cast<double>(cfg.disc));
  std::unordered_set<CycloInt, CycloIntHash> visited;
  std::deque<CycloInt> queue;
  std::vector<CycloInt> out;
  visited.insert(seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    CycloInt x = queue.front();
    queue.pop_front();
    if ((norm_sq(x) - r2).sign() <= 0) out.push_back(x);
    for (const CycloInt& e : steps) {
      CycloInt y = x + e;
      if (!visited.insert(y).second) continue;
      auto parts = norm_sq_parts(y);
      double nf = static_cast<double>(parts.first) +
                  static_cast<double>(parts.second) * root;
      if (nf > halo_sq) continue;
      if (member(y)) queue.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycloInt find_patch_seed(const TilingConfig& cfg, const QuadRat& radius) {
  QuadRat r2 = radius * radius;
  CycloInt zero = CycloInt::zero(cfg.n);
  if (contains(cfg, zero)) return zero;
  double rf = radius.to_double() + 1e-6;
  double rint =
      std::sqrt(circumradius_sq(cfg.window_shifted).to_double()) + 1e-6;
  std::int64_t cap = box_bound(cfg.n, rf, rint);
  for (std::int64_t m = 2;; m = std::min(m * 2, cap)) {
    std::int64_t lim = std::min(m, cap);
    for (std::int64_t a0 = -lim; a0 <= lim; ++a0)
      for (std::int64_t a1 = -lim; a1 <= lim; ++a1)
        for (std::int64_t a2 = -lim; a2 <= lim; ++a2)
          for (std::int64_t a3 = -lim; a3 <= lim; ++a3) {
            CycloInt x(a0, a1, a2, a3, cfg.n);
            if ((norm_sq(x) - r2).sign() > 0) continue;
            if (contains(cfg, x)) return x;
          }
    if (lim == cap) break;
  }
  throw std::runtime_error("enumerate_patch: no vertex within radius " +
                           radius.str());
}

// Support growth steps per ring order, fixed after a one-time
// completeness check against the box oracle (see enumerate_support).
std::vector<CycloInt> support_steps(const TilingConfig& cfg) {
  static std::mutex mutex;
  static std::map<int, std::vector<CycloInt>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(cfg.n);
  if (it != cache.end()) return it->second;

  QuadRat check_radius = QuadRat::integer(3, cfg.disc);
  auto member = [&cfg](const CycloInt& y) { return in_support(cfg, y); };
  auto grown = [&](const std::vector<CycloInt>& steps) {
    return grow_in_disk(cfg, CycloInt::zero(cfg.n), check_radius, steps,
                        member);
  };
  std::vector<CycloInt> oracle = box_support_vectors(cfg, check_radius);
  std::vector<CycloInt> steps = cfg.edge_vectors;
  if (grown(steps) != oracle) {
    // Connectivity gap under unit steps: widen to all short support
    // vectors (norm_sq <= 4) and retry.
    steps.clear();
    for (const CycloInt& z :
         box_support_vectors(cfg, QuadRat::integer(2, cfg.disc))) {
      if (!z.is_zero()) steps.push_back(z);
    }
    if (grown(steps) != oracle) {
      throw std::runtime_error(
          "enumerate_support: completeness check failed even with the "
          "extended step set (support vectors of norm_sq <= 4)");
    }
  }
  cache[cfg.n] = steps;
  return steps;
}

}  // namespace

Patch enumerate_patch(const TilingConfig& cfg, const QuadRat& radius) {
  if (radius.disc() != cfg.disc) {
    throw std::invalid_argument("enumerate_patch: radius field mismatch");
  }
  if (radius.sign() <= 0) {
    throw std::invalid_argument("enumerate_patch: radius must be positive");
  }
  CycloInt seed = find_patch_seed(cfg, radius);
  auto member = [&cfg](const CycloInt& y) { return contains(cfg, y); };
  Patch patch{cfg, radius, {}, {}};
  patch.vertices =
      grow_in_disk(cfg, seed, radius, cfg.edge_vectors, member);

  std::unordered_map<CycloInt, std::int32_t, CycloIntHash> index;
  index.reserve(patch.vertices.size());
  for (std::size_t i = 0; i < patch.vertices.size(); ++i) {
    index.emplace(patch.vertices[i], static_cast<std::int32_t>(i));
  }
  patch.adjacency.resize(patch.vertices.size());
  for (std::size_t i = 0; i < patch.vertices.size(); ++i) {
    for (const CycloInt& e : cfg.edge_vectors) {
      auto it = index.find(patch.vertices[i] + e);
      if (it != index.end()) patch.adjacency[i].push_back(it->second);
    }
    std::sort(patch.adjacency[i].begin(), patch.adjacency[i].end());
  }
  return patch;
}

std::vector<CycloInt> enumerate_support(const TilingConfig& cfg,
                                        const QuadRat& radius) {
  if (radius.disc() != cfg.disc) {
    throw std::invalid_argument("enumerate_support: radius field mismatch");
  }
  if (radius.sign() <= 0) {
    throw std::invalid_argument("enumerate_support: radius must be positive");
  }
  std::vector<CycloInt> steps = support_steps(cfg);
  auto member = [&cfg](const CycloInt& y) { return in_support(cfg, y); };
  return grow_in_disk(cfg, CycloInt::zero(cfg.n), radius, steps, member);
}

}  // namespace cycloshell
