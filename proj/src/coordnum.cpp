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

#include "cycloshell/coordnum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cycloshell/frequencies.hpp"
#include "cycloshell/parallel.hpp"

namespace cycloshell {

namespace {

// Support vectors eligible for coordination shells up to k_max: inside
// the k_max-step ball, and for the eightfold ring also within l1 reach
// (each step changes one basis coefficient by one).
std::vector<CycloInt> step_ball(const TilingConfig& cfg, int k_max) {
  QuadRat bound = QuadRat::integer(k_max, cfg.disc);
  QuadRat ball_sq = bound * bound * cfg.edge_norm_sq;
  std::vector<CycloInt> out;
  for (const CycloInt& z : enumerate_support(cfg, bound)) {
    if (z.is_zero()) continue;
    if ((norm_sq(z) - ball_sq).sign() > 0) continue;
    if (cfg.n == 8 && l1_norm(z) > k_max) continue;
    out.push_back(z);
  }
  return out;
}

struct OrbitIndex {
  std::vector<CycloInt> reps;  // sorted canonical representatives
  std::unordered_map<CycloInt, std::vector<CycloInt>, CycloIntHash> members;
};

OrbitIndex group_orbits(const std::vector<CycloInt>& zs) {
  OrbitIndex index;
  for (const CycloInt& z : zs) {
    CycloInt canon = orbit_canonical(z);
    auto [it, fresh] = index.members.try_emplace(canon);
    it->second.push_back(z);
    if (fresh) index.reps.push_back(canon);
  }
  std::sort(index.reps.begin(), index.reps.end());
  return index;
}

std::vector<CoordEntry> bucket_entries(
    std::vector<std::map<QuadRat, QuadRat>>& buckets, int k_max, int disc,
    CoordMethod method) {
  std::vector<CoordEntry> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    CoordEntry entry;
    entry.k = k;
    entry.s_c = QuadRat(disc);
    entry.method = method;
    for (auto& [r_sq, part] : buckets[k]) {
      if (part.is_zero()) continue;
      entry.s_c += part;
      entry.contributions.emplace_back(r_sq, part);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::string to_string(CoordMethod method) {
  switch (method) {
    case CoordMethod::l1:
      return "l1";
    case CoordMethod::regions:
      return "regions";
    case CoordMethod::bfs:
      return "bfs";
  }
  return "unknown";
}

std::vector<CoordEntry> coordination_l1(const TilingConfig& cfg, int k_max,
                                        int threads) {
  if (cfg.n != 8) {
    throw std::invalid_argument(
        "coordination_l1: the step-count shortcut needs the eightfold edge "
        "basis");
  }
  if (k_max < 1) {
    throw std::invalid_argument("coordination_l1: k_max must be at least 1");
  }
  std::vector<CycloInt> zs = step_ball(cfg, k_max);
  NuCache cache(cfg);
  std::vector<QuadRat> values(zs.size(), QuadRat(cfg.disc));
  parallel_for(zs.size(), threads,
               [&](std::size_t i) { values[i] = cache.get(zs[i]); });
  std::vector<std::map<QuadRat, QuadRat>> buckets(k_max + 1);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    auto [it, fresh] =
        buckets[l1_norm(zs[i])].try_emplace(norm_sq(zs[i]), values[i]);
    if (!fresh) it->second += values[i];
  }
  return bucket_entries(buckets, k_max, cfg.disc, CoordMethod::l1);
}

std::vector<CoordEntry> coordination_regions(const TilingConfig& cfg,
                                             int k_max, int threads) {
  if (k_max < 1) {
    throw std::invalid_argument(
        "coordination_regions: k_max must be at least 1");
  }
  OrbitIndex orbits = group_orbits(step_ball(cfg, k_max));
  std::vector<ReachProfile> profiles(orbits.reps.size());
  parallel_for(orbits.reps.size(), threads, [&](std::size_t i) {
    profiles[i] = reach(cfg, orbits.reps[i], k_max);
  });
  std::vector<std::map<QuadRat, QuadRat>> buckets(k_max + 1);
  for (std::size_t i = 0; i < orbits.reps.size(); ++i) {
    const CycloInt& rep = orbits.reps[i];
    QuadRat mult = QuadRat::integer(
        static_cast<std::int64_t>(orbits.members.at(rep).size()), cfg.disc);
    QuadRat r_sq = norm_sq(rep);
    for (int k = 1; k <= k_max; ++k) {
      QuadRat delta =
          profiles[i].cumulative[k] - profiles[i].cumulative[k - 1];
      if (delta.is_zero()) continue;
      auto [it, fresh] = buckets[k].try_emplace(r_sq, QuadRat(cfg.disc));
      it->second += delta * mult;
      (void)fresh;
    }
  }
  return bucket_entries(buckets, k_max, cfg.disc, CoordMethod::regions);
}

BfsCoordination coordination_bfs(const Patch& patch, int k_max,
                                 const QuadRat& min_margin, int threads) {
  const TilingConfig& cfg = patch.config;
  if (k_max < 1) {
    throw std::invalid_argument("coordination_bfs: k_max must be at least 1");
  }
  if (min_margin.disc() != cfg.disc) {
    throw std::invalid_argument("coordination_bfs: margin field mismatch");
  }
  if (min_margin.sign() < 0) {
    throw std::invalid_argument("coordination_bfs: margin must not be "
                                "negative");
  }
  QuadRat depth = QuadRat::integer(k_max, cfg.disc) + min_margin;
  if (sign_lin_root(patch.radius, -depth, cfg.edge_norm_sq) <= 0) {
    throw std::invalid_argument(
        "coordination_bfs: patch radius does not cover k_max plus the "
        "margin");
  }
  BfsCoordination result;
  result.k_max = k_max;
  for (std::size_t i = 0; i < patch.vertices.size(); ++i) {
    if (within_disk(norm_sq(patch.vertices[i]), patch.radius, -depth,
                    cfg.edge_norm_sq)) {
      result.center_index.push_back(static_cast<std::int32_t>(i));
    }
  }
  if (result.center_index.empty()) {
    throw std::runtime_error("coordination_bfs: no eligible centers");
  }
  result.centers = static_cast<std::int64_t>(result.center_index.size());
  result.counts.assign(result.center_index.size(),
                       std::vector<std::int32_t>(k_max + 1, 0));

  int shards = std::max(1, std::min<int>(threads, 64));
  std::size_t per_shard =
      (result.center_index.size() + shards - 1) / shards;
  parallel_for(static_cast<std::size_t>(shards), shards,
               [&](std::size_t shard) {
    std::size_t begin = shard * per_shard;
    std::size_t end =
        std::min(result.center_index.size(), begin + per_shard);
    std::vector<std::int32_t> mark(patch.vertices.size(), -1);
    std::vector<std::int32_t> frontier;
    std::vector<std::int32_t> next;
    for (std::size_t c = begin; c < end; ++c) {
      std::int32_t root = result.center_index[c];
      std::vector<std::int32_t>& row = result.counts[c];
      row[0] = 1;
      mark[root] = static_cast<std::int32_t>(c);
      frontier.assign(1, root);
      for (int k = 1; k <= k_max && !frontier.empty(); ++k) {
        next.clear();
        for (std::int32_t v : frontier) {
          for (std::int32_t w : patch.adjacency[v]) {
            if (mark[w] == static_cast<std::int32_t>(c)) continue;
            mark[w] = static_cast<std::int32_t>(c);
            next.push_back(w);
          }
        }
        row[k] = static_cast<std::int32_t>(next.size());
        frontier.swap(next);
      }
    }
  });

  result.mean.assign(k_max + 1, 0.0);
  result.mean[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    std::int64_t total = 0;
    for (const auto& row : result.counts) total += row[k];
    result.mean[k] =
        static_cast<double>(total) / static_cast<double>(result.centers);
  }
  return result;
}

BfsCoordination coordination_bfs(const Patch& patch, int k_max) {
  return coordination_bfs(patch, k_max,
                          QuadRat::integer(3, patch.config.disc));
}

std::vector<ShellReport> verify_complete_shells(const TilingConfig& cfg,
                                                int k_max, int threads) {
  if (k_max < 1) {
    throw std::invalid_argument(
        "verify_complete_shells: k_max must be at least 1");
  }
  // Group by the Euclidean ball first: shells are norm-homogeneous, so
  // the ball contains each shell either entirely or not at all.
  QuadRat bound = QuadRat::integer(k_max, cfg.disc);
  QuadRat ball_sq = bound * bound * cfg.edge_norm_sq;
  std::map<QuadRat, std::vector<CycloInt>> shells;
  for (const CycloInt& z : enumerate_support(cfg, bound)) {
    if (z.is_zero()) continue;
    if ((norm_sq(z) - ball_sq).sign() > 0) continue;
    shells[norm_sq(z)].push_back(z);
  }

  // Completeness is an orbit property: frequencies, step counts, and
  // linked fractions are constant on dihedral orbits, so each orbit
  // lands in exactly one coordination shell while a circular shell may
  // straddle several.  Orbits out of step range are skipped; a shell
  // with no orbit in range is dropped.
  std::vector<ShellReport> out;
  std::vector<CycloInt> reps;
  std::vector<int> evals;
  std::vector<std::size_t> shell_of;
  std::vector<std::vector<CycloInt>> rep_members;
  for (auto& [r_sq, members] : shells) {
    OrbitIndex orbits = group_orbits(members);
    std::vector<CycloInt> in_scope;
    for (const CycloInt& rep : orbits.reps) {
      if (cfg.n != 8 || l1_norm(rep) <= k_max) in_scope.push_back(rep);
    }
    if (in_scope.empty()) continue;
    ShellReport report;
    report.r_sq = r_sq;
    report.vector_count = static_cast<std::int64_t>(members.size());
    for (const CycloInt& rep : in_scope) {
      reps.push_back(rep);
      evals.push_back(cfg.n == 8 ? static_cast<int>(l1_norm(rep)) : k_max);
      shell_of.push_back(out.size());
      rep_members.push_back(orbits.members.at(rep));
    }
    out.push_back(std::move(report));
  }

  // Per representative: the first step with a positive linked fraction
  // (0 if none within scope), and whether that first value is already
  // the full frequency (a clean jump).  An eightfold orbit must jump at
  // its own step count; never linking counts as a fault there.
  NuCache cache(cfg);
  std::vector<int> first_step(reps.size(), 0);
  std::vector<bool> clean(reps.size(), true);
  parallel_for(reps.size(), threads, [&](std::size_t i) {
    ReachProfile profile = reach(cfg, reps[i], evals[i]);
    QuadRat value = cache.get(reps[i]);
    for (int t = 1; t <= evals[i]; ++t) {
      if (profile.cumulative[t].is_zero()) continue;
      first_step[i] = t;
      clean[i] = profile.cumulative[t] == value;
      break;
    }
    if (first_step[i] == 0 && cfg.n == 8) clean[i] = false;
  });

  std::vector<int> shell_step(out.size(), 0);  // 0 unseen, -1 mixed
  std::vector<bool> certified(out.size(), true);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    ShellReport& report = out[shell_of[i]];
    if (!clean[i]) {
      report.violations.insert(report.violations.end(),
                               rep_members[i].begin(), rep_members[i].end());
    }
    if (first_step[i] == 0) certified[shell_of[i]] = false;
    int& common = shell_step[shell_of[i]];
    if (common == 0) {
      common = first_step[i];
    } else if (common != first_step[i]) {
      common = -1;
    }
  }
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (certified[s] && shell_step[s] != 0) out[s].k = shell_step[s];
    std::sort(out[s].violations.begin(), out[s].violations.end());
    out[s].complete = out[s].violations.empty() && certified[s];
  }
  return out;
}

std::vector<std::pair<int, QuadRat>> delta_series(
    const std::vector<CoordEntry>& entries) {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].k != entries[i - 1].k + 1) {
      throw std::invalid_argument("delta_series: entries must be contiguous "
                                  "in k");
    }
  }
  std::vector<std::pair<int, QuadRat>> out;
  for (std::size_t i = 1; i < entries.size(); ++i) {
    out.emplace_back(entries[i - 1].k, entries[i].s_c - entries[i - 1].s_c);
  }
  return out;
}

}  // namespace cycloshell
