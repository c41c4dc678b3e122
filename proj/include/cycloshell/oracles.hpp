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

#ifndef CYCLOSHELL_ORACLES_HPP_
#define CYCLOSHELL_ORACLES_HPP_

#include <vector>

#include "cycloshell/cyclo.hpp"
#include "cycloshell/modelset.hpp"
#include "cycloshell/quadrat.hpp"

namespace cycloshell {

// Slow, structurally independent reference implementations used to
// cross-check the BFS enumerations and the exact frequency computation.
// They enumerate a coordinate box |a_j| <= M that provably covers the
// requested disk and test membership through the generic exact polygon
// predicates instead of the integer facet tables.

// Coordinate bound: |a_j| <= M covers every x with |embed(x)| <= r_phys
// and |embed(star(x))| <= r_int.  Computed from the inverse of the 4x4
// basis embedding matrix in floating point, rounded up with slack.
std::int64_t box_bound(int n, double r_phys, double r_int);

// Vertices of the model set within |embed(x)|^2 <= R^2, sorted.
// Throws BoundaryHit exactly as the BFS path would.
std::vector<CycloInt> box_patch_vertices(const TilingConfig& cfg,
                                         const QuadRat& radius);

// Support vectors within |embed(z)|^2 <= R^2, sorted.
std::vector<CycloInt> box_support_vectors(const TilingConfig& cfg,
                                          const QuadRat& radius);

// Autocorrelation frequency of z by midpoint grid integration of the
// overlap area(window ∩ (window - star(z))) / area(window) at the given
// resolution (cells per axis across the window's bounding box).
double grid_nu(const TilingConfig& cfg, const CycloInt& z, int resolution);

}  // namespace cycloshell

#endif  // CYCLOSHELL_ORACLES_HPP_
