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

#ifndef CYCLOSHELL_CYCLO_HPP_
#define CYCLOSHELL_CYCLO_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cycloshell/quadrat.hpp"

namespace cycloshell {

// A point of the real plane with exact quadratic-field coordinates.
// Both coordinates must live in the same field.
struct PlanePoint {
  QuadRat x, y;

  PlanePoint() = default;
  PlanePoint(QuadRat px, QuadRat py);

  int disc() const { return x.disc(); }

  PlanePoint operator-() const { return {-x, -y}; }
  friend PlanePoint operator+(const PlanePoint& a, const PlanePoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend PlanePoint operator-(const PlanePoint& a, const PlanePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend PlanePoint operator*(const QuadRat& s, const PlanePoint& a) {
    return {s * a.x, s * a.y};
  }
  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const PlanePoint& a, const PlanePoint& b) {
    return !(a == b);
  }
};

QuadRat dot(const PlanePoint& a, const PlanePoint& b);
// z component of the cross product; positive when b lies counterclockwise
// of a.
QuadRat cross(const PlanePoint& a, const PlanePoint& b);
QuadRat norm_sq(const PlanePoint& a);

// Element a0 + a1*xi + a2*xi^2 + a3*xi^3 of Z[xi_n], xi_n = exp(2*pi*i/n),
// n in {8, 12}.  The powers 1, xi, xi^2, xi^3 form a Z-basis in both cases.
// Coordinates are 64-bit; every operation that can grow them checks for
// overflow and throws std::overflow_error.
struct CycloInt {
  std::array<std::int64_t, 4> a{0, 0, 0, 0};
  int n = 8;

  CycloInt() = default;
  CycloInt(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3,
           int order);

  static CycloInt zero(int order) { return CycloInt(0, 0, 0, 0, order); }
  static CycloInt one(int order) { return CycloInt(1, 0, 0, 0, order); }
  static CycloInt xi(int order) { return CycloInt(0, 1, 0, 0, order); }

  bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }

  friend bool operator==(const CycloInt& u, const CycloInt& v) {
    return u.n == v.n && u.a == v.a;
  }
  friend bool operator!=(const CycloInt& u, const CycloInt& v) {
    return !(u == v);
  }
  // Lexicographic order on (a0, a1, a2, a3); only defined within one ring.
  friend bool operator<(const CycloInt& u, const CycloInt& v);

  std::string str() const;  // "(a0,a1,a2,a3)"
};

CycloInt operator+(const CycloInt& u, const CycloInt& v);
CycloInt operator-(const CycloInt& u, const CycloInt& v);
CycloInt operator-(const CycloInt& u);
CycloInt operator*(const CycloInt& u, const CycloInt& v);

// Multiplication by xi (one rotation step); cheaper than a full product.
CycloInt mul_xi(const CycloInt& u);
// u * xi^j for any integer j.
CycloInt mul_xi_pow(const CycloInt& u, int j);

// Star map: the Galois twist xi_8 -> xi_8^3, xi_12 -> xi_12^5.  It is a
// ring homomorphism and an involution.
CycloInt star(const CycloInt& u);
// Complex conjugation xi -> xi^{-1}.
CycloInt conj(const CycloInt& u);

// Physical embedding: the complex value of u under xi_n = exp(2*pi*i/n),
// as an exact point of Q(sqrt(d)), d = 2 for n = 8 and d = 3 for n = 12.
PlanePoint embed(const CycloInt& u);
// Internal-space image embed(star(u)).
PlanePoint embed_star(const CycloInt& u);

// |embed(u)|^2, exact.
QuadRat norm_sq(const CycloInt& u);

// |embed(u)|^2 as the integer pair (p, q) with value p + q*sqrt(d);
// cheaper than the QuadRat form on hot paths.
std::pair<std::int64_t, std::int64_t> norm_sq_parts(const CycloInt& u);

// Sum of |a_j| over the Z-basis coordinates.  For n = 8 this equals the
// graph distance from 0 in the unit-step lattice graph; for n = 12 the
// basis vectors are not steps of the tiling, so the quantity is not
// exposed (throws std::domain_error).
std::int64_t l1_norm(const CycloInt& u);

// Orbit of u under the dihedral symmetries of the ring (rotations by xi
// and complex conjugation); distinct elements, sorted.
std::vector<CycloInt> dihedral_orbit(const CycloInt& u);
// Lexicographically smallest element of dihedral_orbit(u); two elements
// share a canonical form iff they lie in the same orbit.
CycloInt orbit_canonical(const CycloInt& u);

struct CycloIntHash {
  std::size_t operator()(const CycloInt& u) const {
    std::size_t h = std::hash<std::int64_t>()(u.a[0]);
    for (int i = 1; i < 4; ++i) {
      h ^= std::hash<std::int64_t>()(u.a[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace cycloshell

#endif  // CYCLOSHELL_CYCLO_HPP_
