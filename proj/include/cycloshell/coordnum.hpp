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

#ifndef CYCLOSHELL_COORDNUM_HPP_
#define CYCLOSHELL_COORDNUM_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cycloshell/cyclo.hpp"
#include "cycloshell/modelset.hpp"
#include "cycloshell/quadrat.hpp"

namespace cycloshell {

enum class CoordMethod { l1, regions, bfs };

std::string to_string(CoordMethod method);

// Averaged coordination number for one graph distance k: the mean
// number of vertices at graph distance exactly k from a vertex, split
// by the squared Euclidean radius of the contributing shells.
struct CoordEntry {
  int k = 0;
  QuadRat s_c;
  // (squared radius, summed frequency) pairs, ascending, nonzero only.
  std::vector<std::pair<QuadRat, QuadRat>> contributions;
  CoordMethod method = CoordMethod::l1;
};

// Eightfold shortcut: the 8 edge directions contain a basis of the
// lattice, every expansion is unique, and graph distance equals the
// coefficient sum l1_norm.  Buckets support vectors by l1_norm and sums
// their frequencies.  Rejects other rings.
std::vector<CoordEntry> coordination_l1(const TilingConfig& cfg, int k_max,
                                        int threads = 1);

// Exact method for either ring: runs the linked-pair dynamic program
// for every support vector inside the k_max-step ball and attributes
// F_k - F_{k-1} to distance k.  One vector may split across several k.
std::vector<CoordEntry> coordination_regions(const TilingConfig& cfg,
                                             int k_max, int threads = 1);

// Empirical counts from a finite patch.
struct BfsCoordination {
  int k_max = 0;
  std::int64_t centers = 0;
  std::vector<double> mean;                      // [k], mean[0] = 1
  std::vector<std::int32_t> center_index;        // patch vertex indices
  std::vector<std::vector<std::int32_t>> counts; // per center, per k
};

// Counts vertices at graph distance exactly k <= k_max around every
// vertex farther than (k_max + min_margin) edge lengths from the patch
// rim, so geodesics cannot leave the patch.  min_margin is measured in
// edge lengths.  Throws std::invalid_argument if the patch is too
// small and std::runtime_error if no center qualifies.
BfsCoordination coordination_bfs(const Patch& patch, int k_max,
                                 const QuadRat& min_margin, int threads = 1);
BfsCoordination coordination_bfs(const Patch& patch, int k_max);

// Completeness audit of circular shells against graph distance.
// Completeness lives on dihedral orbits: an orbit is clean when its
// linked fraction jumps from 0 straight to nu at one step, placing the
// whole orbit in a single coordination shell.  A circular shell is
// reported complete when every orbit on it within step range is clean;
// orbits whose jump is gradual land in `violations`.  k is the common
// jump step, or -1 when the shell's orbits jump at different steps
// (the shell then straddles several coordination shells even though
// each orbit is clean) or when an orbit never links within range.
struct ShellReport {
  QuadRat r_sq;
  std::int64_t vector_count = 0;  // whole shell inside the step ball
  int k = -1;
  bool complete = false;
  std::vector<CycloInt> violations;
};

std::vector<ShellReport> verify_complete_shells(const TilingConfig& cfg,
                                                int k_max, int threads = 1);

// Exact consecutive differences s_c(k+1) - s_c(k).  Entries must be
// contiguous in k.
std::vector<std::pair<int, QuadRat>> delta_series(
    const std::vector<CoordEntry>& entries);

}  // namespace cycloshell

#endif  // CYCLOSHELL_COORDNUM_HPP_
