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

#ifndef CYCLOSHELL_FREQUENCIES_HPP_
#define CYCLOSHELL_FREQUENCIES_HPP_

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cycloshell/cyclo.hpp"
#include "cycloshell/modelset.hpp"
#include "cycloshell/quadrat.hpp"

namespace cycloshell {

// Frequency of the difference vector z: the fraction of vertices x for
// which x + z is also a vertex, area(W ∩ (W - star(z))) / area(W) with W
// the window.  Exact, shift-independent, nu(0) = 1, 0 <= nu <= 1.
QuadRat nu(const TilingConfig& cfg, const CycloInt& z);

// Memoizes nu per dihedral orbit (rotations and reflection fix the
// window, so nu is constant on orbits).  Thread-safe.
class NuCache {
 public:
  explicit NuCache(const TilingConfig& cfg) : cfg_(cfg) {}

  QuadRat get(const CycloInt& z);
  std::size_t size() const;

 private:
  const TilingConfig& cfg_;
  mutable std::mutex mutex_;
  std::unordered_map<CycloInt, QuadRat, CycloIntHash> memo_;
};

struct ShellEntry {
  QuadRat r_sq;   // exact squared shell radius (always denominator 1)
  QuadRat value;  // averaged shelling number: sum of nu over the shell
  std::int64_t orbit_count;  // distinct support vectors on the shell
};

// Averaged shelling numbers: support vectors with 0 < norm_sq <=
// max_norm, grouped by exact norm_sq, each weighted by its frequency.
// Ascending in r_sq.
std::vector<ShellEntry> shelling(const TilingConfig& cfg,
                                 const QuadRat& max_norm, NuCache& cache,
                                 int threads = 1);
std::vector<ShellEntry> shelling(const TilingConfig& cfg,
                                 const QuadRat& max_norm, int threads = 1);

// Frequencies of vertex pairs (x, x + z) joined by an edge path of
// length at most k, for k = 0..k_max.
struct ReachProfile {
  CycloInt z;
  // cumulative[k] = F_k(z); monotone, reaches nu(z) once every
  // coexisting pair is linked within k steps.
  std::vector<QuadRat> cumulative;
};

// Exact dynamic program over partial path sums p with window-intersection
// constraint regions; see ReachProfile.  Requires nu(z) > 0
// (std::domain_error otherwise) and k_max >= 1.
ReachProfile reach(const TilingConfig& cfg, const CycloInt& z, int k_max);

}  // namespace cycloshell

#endif  // CYCLOSHELL_FREQUENCIES_HPP_
