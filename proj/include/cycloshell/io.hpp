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

#ifndef CYCLOSHELL_IO_HPP_
#define CYCLOSHELL_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "cycloshell/coordnum.hpp"
#include "cycloshell/cyclo.hpp"
#include "cycloshell/frequencies.hpp"
#include "cycloshell/modelset.hpp"
#include "cycloshell/quadrat.hpp"

namespace cycloshell {

// Textual artifact writers.  All of them are pure functions of their
// arguments, so identical inputs give byte-identical output.  Exact
// values appear as integer triples (p, q, r) meaning (p + q*sqrt(d))/r
// next to a rounded decimal column; free-standing decimals use three
// digits for table values and six for geometry.

// Columns k,p,q,r,float,method.  The p,q,r columns are left empty for
// the sampled-method rows, which carry only a decimal mean.
std::string csv_coordination(const std::vector<CoordEntry>& entries);
std::string csv_coordination(const BfsCoordination& stats);
// Companion table: one row per (k, shell) pair, columns
// k,rsq_p,rsq_q,rsq_r,part_p,part_q,part_r,part_float.
std::string csv_contributions(const std::vector<CoordEntry>& entries);
// Columns rsq_p,rsq_q,rsq_r,p,q,r,float,count.
std::string csv_shelling(const std::vector<ShellEntry>& shells);
// Two columns k,delta for the consecutive-difference series.
std::string csv_delta(const std::vector<std::pair<int, QuadRat>>& deltas);
// Columns a0,a1,a2,a3,x,y (coefficients exact, coordinates decimal).
std::string csv_patch(const Patch& patch);
// Companion edge list, columns i,j with i < j, indices into the vertex
// rows.
std::string csv_patch_edges(const Patch& patch);
// Columns xp,xq,xr,yp,yq,yr,x,y: exact window corners and decimals.
std::string csv_window(const ConvexPolygon& window);

// JSON mirrors of the tables above.
std::string json_coordination(const std::string& tiling,
                              const std::vector<CoordEntry>& entries);
std::string json_coordination(const std::string& tiling,
                              const BfsCoordination& stats);
std::string json_shelling(const std::string& tiling,
                          const std::vector<ShellEntry>& shells);
std::string json_patch(const Patch& patch);
std::string json_window(const std::string& tiling,
                        const ConvexPolygon& window);

// Scalable vector graphics; coordinates at six decimals.
std::string svg_patch(const Patch& patch);
std::string svg_window(const ConvexPolygon& window);

// Command-line argument parsers.  All throw std::invalid_argument with
// a message naming the offending token.
// "a0,a1,a2,a3" -> lattice coordinates in the power basis.
CycloInt parse_cyclo(const std::string& text, int n);
// "p[,q[,r]]" -> (p + q*sqrt(d))/r, q defaulting to 0 and r to 1.
QuadRat parse_quadrat(const std::string& text, int disc);
// "xn/xd,yn/yd" (denominators optional) -> rational internal shift.
PlanePoint parse_shift(const std::string& text, int disc);

}  // namespace cycloshell

#endif  // CYCLOSHELL_IO_HPP_
