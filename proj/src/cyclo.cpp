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

#include "cycloshell/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycloshell {

namespace {

using std::int64_t;

void check_order(int n) {
  if (n != 8 && n != 12) {
    throw std::invalid_argument("CycloInt: order must be 8 or 12, got " +
                                std::to_string(n));
  }
}

void check_same_ring(const CycloInt& u, const CycloInt& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("CycloInt: mixed ring orders " +
                                std::to_string(u.n) + " and " +
                                std::to_string(v.n));
  }
}

int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("CycloInt: coordinate overflow");
  }
  return static_cast<int64_t>(v);
}

int64_t add_ck(int64_t a, int64_t b) {
  return narrow(static_cast<__int128>(a) + b);
}

int64_t neg_ck(int64_t a) { return narrow(-static_cast<__int128>(a)); }

}  // namespace

PlanePoint::PlanePoint(QuadRat px, QuadRat py)
    : x(std::move(px)), y(std::move(py)) {
  if (x.disc() != y.disc()) {
    throw std::invalid_argument("PlanePoint: mixed coordinate fields");
  }
}

QuadRat dot(const PlanePoint& a, const PlanePoint& b) {
  return a.x * b.x + a.y * b.y;
}

QuadRat cross(const PlanePoint& a, const PlanePoint& b) {
  return a.x * b.y - a.y * b.x;
}

QuadRat norm_sq(const PlanePoint& a) { return dot(a, a); }

CycloInt::CycloInt(int64_t a0, int64_t a1, int64_t a2, int64_t a3, int order)
    : a{a0, a1, a2, a3}, n(order) {
  check_order(order);
}

bool operator<(const CycloInt& u, const CycloInt& v) {
  check_same_ring(u, v);
  return u.a < v.a;
}

std::string CycloInt::str() const {
  std::string out = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

CycloInt operator+(const CycloInt& u, const CycloInt& v) {
  check_same_ring(u, v);
  CycloInt w = u;
  for (int i = 0; i < 4; ++i) w.a[i] = add_ck(u.a[i], v.a[i]);
  return w;
}

CycloInt operator-(const CycloInt& u, const CycloInt& v) {
  check_same_ring(u, v);
  CycloInt w = u;
  for (int i = 0; i < 4; ++i) w.a[i] = add_ck(u.a[i], neg_ck(v.a[i]));
  return w;
}

CycloInt operator-(const CycloInt& u) {
  CycloInt w = u;
  for (int i = 0; i < 4; ++i) w.a[i] = neg_ck(u.a[i]);
  return w;
}

CycloInt operator*(const CycloInt& u, const CycloInt& v) {
  check_same_ring(u, v);
  // Convolve, then reduce the degree 4..6 tail into the basis.  One spare
  // slot keeps the n = 8 reduction below in bounds (c[7] stays zero).
  __int128 c[8] = {};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      c[i + j] += static_cast<__int128>(u.a[i]) * v.a[j];
    }
  }
  CycloInt w = CycloInt::zero(u.n);
  if (u.n == 8) {
    // xi^4 = -1: xi^{k+4} = -xi^k.
    for (int k = 0; k < 4; ++k) w.a[k] = narrow(c[k] - c[k + 4]);
  } else {
    // xi^4 = xi^2 - 1, xi^5 = xi^3 - xi, xi^6 = -1.
    w.a[0] = narrow(c[0] - c[4] - c[6]);
    w.a[1] = narrow(c[1] - c[5]);
    w.a[2] = narrow(c[2] + c[4]);
    w.a[3] = narrow(c[3] + c[5]);
  }
  return w;
}

CycloInt mul_xi(const CycloInt& u) {
  CycloInt w = u;
  if (u.n == 8) {
    w.a = {neg_ck(u.a[3]), u.a[0], u.a[1], u.a[2]};
  } else {
    w.a = {neg_ck(u.a[3]), u.a[0], add_ck(u.a[1], u.a[3]), u.a[2]};
  }
  return w;
}

CycloInt mul_xi_pow(const CycloInt& u, int j) {
  int m = ((j % u.n) + u.n) % u.n;
  CycloInt w = u;
  for (int i = 0; i < m; ++i) w = mul_xi(w);
  return w;
}

CycloInt star(const CycloInt& u) {
  CycloInt w = u;
  if (u.n == 8) {
    // xi -> xi^3.
    w.a = {u.a[0], u.a[3], neg_ck(u.a[2]), u.a[1]};
  } else {
    // xi -> xi^5 = xi^3 - xi.
    w.a = {add_ck(u.a[0], u.a[2]), neg_ck(u.a[1]), neg_ck(u.a[2]),
           add_ck(u.a[1], u.a[3])};
  }
  return w;
}

CycloInt conj(const CycloInt& u) {
  CycloInt w = u;
  if (u.n == 8) {
    // xi^{-1} = -xi^3, xi^{-2} = -xi^2, xi^{-3} = -xi.
    w.a = {u.a[0], neg_ck(u.a[3]), neg_ck(u.a[2]), neg_ck(u.a[1])};
  } else {
    // xi^{-1} = xi - xi^3 ... derived from xi^6 = -1.
    w.a = {add_ck(u.a[0], u.a[2]), u.a[1], neg_ck(u.a[2]),
           neg_ck(add_ck(u.a[1], u.a[3]))};
  }
  return w;
}

PlanePoint embed(const CycloInt& u) {
  BigInt a0 = u.a[0], a1 = u.a[1], a2 = u.a[2], a3 = u.a[3];
  if (u.n == 8) {
    // xi_8 = (1 + i)/sqrt(2): x = a0 + (a1 - a3)/sqrt(2), y = a2 + (a1 + a3)/sqrt(2).
    return PlanePoint(QuadRat(2 * a0, a1 - a3, 2, 2),
                      QuadRat(2 * a2, a1 + a3, 2, 2));
  }
  // xi_12 = (sqrt(3) + i)/2: x = a0 + a2/2 + a1*sqrt(3)/2, y = a1/2 + a3 + a2*sqrt(3)/2.
  return PlanePoint(QuadRat(2 * a0 + a2, a1, 2, 3),
                    QuadRat(a1 + 2 * a3, a2, 2, 3));
}

PlanePoint embed_star(const CycloInt& u) { return embed(star(u)); }

std::pair<int64_t, int64_t> norm_sq_parts(const CycloInt& u) {
  const auto& a = u.a;
  __int128 sq = 0;
  for (int i = 0; i < 4; ++i) sq += static_cast<__int128>(a[i]) * a[i];
  if (u.n == 8) {
    __int128 rt = static_cast<__int128>(a[0]) * (a[1] - a[3]) +
                  static_cast<__int128>(a[2]) * (a[1] + a[3]);
    return {narrow(sq), narrow(rt)};
  }
  __int128 rat = sq + static_cast<__int128>(a[0]) * a[2] +
                 static_cast<__int128>(a[1]) * a[3];
  __int128 rt = static_cast<__int128>(a[0]) * a[1] +
                static_cast<__int128>(a[1]) * a[2] +
                static_cast<__int128>(a[2]) * a[3];
  return {narrow(rat), narrow(rt)};
}

QuadRat norm_sq(const CycloInt& u) {
  auto [p, q] = norm_sq_parts(u);
  return QuadRat(p, q, 1, u.n == 8 ? 2 : 3);
}

std::int64_t l1_norm(const CycloInt& u) {
  if (u.n != 8) {
    throw std::domain_error("l1_norm: defined only for order 8");
  }
  int64_t s = 0;
  for (int i = 0; i < 4; ++i) s += u.a[i] < 0 ? -u.a[i] : u.a[i];
  return s;
}

std::vector<CycloInt> dihedral_orbit(const CycloInt& u) {
  std::vector<CycloInt> out;
  out.reserve(2 * u.n);
  CycloInt v = u;
  CycloInt w = conj(u);
  for (int m = 0; m < u.n; ++m) {
    out.push_back(v);
    out.push_back(w);
    v = mul_xi(v);
    w = mul_xi(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CycloInt orbit_canonical(const CycloInt& u) {
  CycloInt best = u;
  CycloInt v = u;
  CycloInt w = conj(u);
  for (int m = 0; m < u.n; ++m) {
    if (v < best) best = v;
    if (w < best) best = w;
    v = mul_xi(v);
    w = mul_xi(w);
  }
  return best;
}

}  // namespace cycloshell
