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

#include "cycloshell/frequencies.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "cycloshell/parallel.hpp"
#include "cycloshell/polygon.hpp"

namespace cycloshell {

QuadRat nu(const TilingConfig& cfg, const CycloInt& z) {
  if (z.n != cfg.n) {
    throw std::invalid_argument("nu: ring order mismatch");
  }
  // Strictly-inside-the-doubled-window test: outside or tangent means
  // zero overlap, and it is far cheaper than clipping.
  if (!in_support(cfg, z)) return QuadRat(cfg.disc);
  ConvexPolygon shifted = translate(cfg.window, -embed_star(z));
  return area(intersect(cfg.window, shifted)) / area(cfg.window);
}

QuadRat NuCache::get(const CycloInt& z) {
  CycloInt canon = orbit_canonical(z);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(canon);
    if (it != memo_.end()) return it->second;
  }
  QuadRat value = nu(cfg_, canon);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(canon, std::move(value)).first->second;
}

std::size_t NuCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

std::vector<ShellEntry> shelling(const TilingConfig& cfg,
                                 const QuadRat& max_norm, NuCache& cache,
                                 int threads) {
  if (max_norm.disc() != cfg.disc) {
    throw std::invalid_argument("shelling: field mismatch");
  }
  if (max_norm.sign() <= 0) {
    throw std::invalid_argument("shelling: max_norm must be positive");
  }
  // A rational radius upper bound suffices; the exact norm filter is
  // applied below.
  std::int64_t r = static_cast<std::int64_t>(
                       std::sqrt(std::max(0.0, max_norm.to_double()))) +
                   1;
  std::vector<CycloInt> support =
      enumerate_support(cfg, QuadRat::integer(r, cfg.disc));
  std::vector<CycloInt> shellv;
  shellv.reserve(support.size());
  for (const CycloInt& z : support) {
    if (z.is_zero()) continue;
    if ((norm_sq(z) - max_norm).sign() > 0) continue;
    shellv.push_back(z);
  }
  std::vector<QuadRat> values(shellv.size(), QuadRat(cfg.disc));
  parallel_for(shellv.size(), threads,
               [&](std::size_t i) { values[i] = cache.get(shellv[i]); });
  std::map<QuadRat, ShellEntry> groups;
  for (std::size_t i = 0; i < shellv.size(); ++i) {
    QuadRat r_sq = norm_sq(shellv[i]);
    auto [it, fresh] = groups.try_emplace(r_sq, ShellEntry{r_sq, values[i], 1});
    if (!fresh) {
      it->second.value += values[i];
      ++it->second.orbit_count;
    }
  }
  std::vector<ShellEntry> out;
  out.reserve(groups.size());
  for (auto& [key, entry] : groups) out.push_back(std::move(entry));
  return out;
}

std::vector<ShellEntry> shelling(const TilingConfig& cfg,
                                 const QuadRat& max_norm, int threads) {
  NuCache cache(cfg);
  return shelling(cfg, max_norm, cache, threads);
}

ReachProfile reach(const TilingConfig& cfg, const CycloInt& z, int k_max) {
  if (z.n != cfg.n) {
    throw std::invalid_argument("reach: ring order mismatch");
  }
  if (k_max < 1) {
    throw std::invalid_argument("reach: k_max must be at least 1");
  }
  if (!in_support(cfg, z)) {
    throw std::domain_error("reach: nu(z) = 0, no coexisting pairs for z = " +
                            z.str());
  }
  const ConvexPolygon& window = cfg.window;
  QuadRat window_area = area(window);
  ReachProfile profile{z, {}};
  profile.cumulative.assign(static_cast<std::size_t>(k_max) + 1,
                            QuadRat(cfg.disc));

  // States after t steps: partial sum p -> union of constraint regions
  // window ∩ (window - p_1*) ∩ ... ∩ (window - p_t*) over paths with
  // that prefix-sum sequence.  Regions reaching p = z flow into `done`
  // and are not expanded further: any continuation returning to z
  // yields a subset of a piece already collected.
  RegionSet done;
  auto done_fraction = [&] {
    return done.empty() ? QuadRat(cfg.disc) : union_area(done) / window_area;
  };
  std::unordered_map<CycloInt, RegionSet, CycloIntHash> frontier;
  if (z.is_zero()) {
    done.add(window);
  } else {
    frontier[CycloInt::zero(cfg.n)].add(window);
  }
  profile.cumulative[0] = done_fraction();

  for (int t = 1; t <= k_max; ++t) {
    if (frontier.empty()) {
      profile.cumulative[t] = profile.cumulative[t - 1];
      continue;
    }
    std::unordered_map<CycloInt, RegionSet, CycloIntHash> next;
    std::unordered_map<CycloInt, ConvexPolygon, CycloIntHash> translated;
    QuadRat remaining = QuadRat::integer(k_max - t, cfg.disc);
    QuadRat reach_sq = remaining * remaining * cfg.edge_norm_sq;
    for (const auto& [p, regions] : frontier) {
      for (const CycloInt& e : cfg.edge_vectors) {
        CycloInt p2 = p + e;
        CycloInt gap = z - p2;
        // Unreachable within the remaining steps: drop.
        if ((norm_sq(gap) - reach_sq).sign() > 0) continue;
        if (cfg.n == 8 && l1_norm(gap) > k_max - t) continue;
        auto it = translated.find(p2);
        if (it == translated.end()) {
          it = translated
                   .emplace(p2, translate(window, -embed_star(p2)))
                   .first;
        }
        for (const ConvexPolygon& piece : regions.pieces) {
          ConvexPolygon refined = intersect(piece, it->second);
          if (refined.empty()) continue;
          if (p2 == z) {
            done.add(refined);
          } else {
            next[p2].add(refined);
          }
        }
      }
    }
    frontier = std::move(next);
    profile.cumulative[t] = done_fraction();
  }
  return profile;
}

}  // namespace cycloshell
