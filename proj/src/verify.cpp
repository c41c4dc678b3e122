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

#include "cycloshell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <unordered_set>
#include <vector>

#include "cycloshell/coordnum.hpp"
#include "cycloshell/frequencies.hpp"
#include "cycloshell/modelset.hpp"
#include "cycloshell/oracles.hpp"
#include "cycloshell/parallel.hpp"

namespace cycloshell {

namespace {

std::vector<CycloInt> orbit_reps(const TilingConfig& cfg, int radius) {
  std::unordered_set<CycloInt, CycloIntHash> seen;
  std::vector<CycloInt> reps;
  for (const CycloInt& z : enumerate_support(cfg, cfg.scalar(radius))) {
    if (z.is_zero()) continue;
    if (seen.insert(orbit_canonical(z)).second) {
      reps.push_back(orbit_canonical(z));
    }
  }
  return reps;
}

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof(buf), format, ap);
  va_end(ap);
  return buf;
}

VerifyCheck check_nu_unit(const std::vector<TilingConfig>& rings) {
  VerifyCheck check{"nu at the origin", true, ""};
  for (const TilingConfig& cfg : rings) {
    QuadRat value = nu(cfg, CycloInt::zero(cfg.n));
    if (!(value == QuadRat::integer(1, cfg.disc))) {
      check.pass = false;
      check.detail += cfg.name + ": nu(0) = " + value.str() + "  ";
    }
  }
  if (check.pass) check.detail = "nu(0) = 1 on both rings";
  return check;
}

VerifyCheck check_nu_symmetry(const std::vector<TilingConfig>& rings,
                              const VerifyOptions& options) {
  VerifyCheck check{"nu symmetry and range", true, ""};
  std::size_t tested = 0;
  for (const TilingConfig& cfg : rings) {
    std::vector<CycloInt> reps = orbit_reps(cfg, options.symmetry_radius);
    std::vector<std::string> faults(reps.size());
    parallel_for(reps.size(), options.threads, [&](std::size_t i) {
      const CycloInt& z = reps[i];
      QuadRat value = nu(cfg, z);
      if (value.sign() <= 0 ||
          (value - QuadRat::integer(1, cfg.disc)).sign() > 0) {
        faults[i] = "range fault at " + z.str();
        return;
      }
      if (!(nu(cfg, -z) == value) || !(nu(cfg, mul_xi(z)) == value) ||
          !(nu(cfg, conj(z)) == value)) {
        faults[i] = "symmetry fault at " + z.str();
      }
    });
    tested += reps.size();
    for (const std::string& fault : faults) {
      if (!fault.empty()) {
        check.pass = false;
        check.detail = cfg.name + ": " + fault;
        return check;
      }
    }
  }
  check.detail = fmt("%zu orbits: 0 < nu <= 1 and nu constant under "
                     "negation, rotation, reflection", tested);
  return check;
}

VerifyCheck check_patch_oracle(const std::vector<TilingConfig>& rings,
                               const VerifyOptions& options) {
  VerifyCheck check{"patch enumeration vs box oracle", true, ""};
  std::size_t total = 0;
  for (const TilingConfig& cfg : rings) {
    QuadRat radius = cfg.scalar(options.box_radius);
    Patch patch = enumerate_patch(cfg, radius);
    std::vector<CycloInt> box = box_patch_vertices(cfg, radius);
    if (patch.vertices != box) {
      check.pass = false;
      check.detail = fmt("%s: %zu grown vs %zu boxed vertices",
                         cfg.name.c_str(), patch.vertices.size(), box.size());
      return check;
    }
    total += box.size();
  }
  check.detail = fmt("set equality on %zu vertices at R = %d", total,
                     options.box_radius);
  return check;
}

VerifyCheck check_support_oracle(const std::vector<TilingConfig>& rings,
                                 const VerifyOptions& options) {
  VerifyCheck check{"support enumeration vs box oracle", true, ""};
  std::size_t total = 0;
  for (const TilingConfig& cfg : rings) {
    QuadRat radius = cfg.scalar(options.box_radius);
    std::vector<CycloInt> grown = enumerate_support(cfg, radius);
    std::vector<CycloInt> box = box_support_vectors(cfg, radius);
    if (grown != box) {
      check.pass = false;
      check.detail = fmt("%s: %zu grown vs %zu boxed vectors",
                         cfg.name.c_str(), grown.size(), box.size());
      return check;
    }
    total += box.size();
  }
  check.detail = fmt("set equality on %zu vectors at R = %d", total,
                     options.box_radius);
  return check;
}

VerifyCheck check_grid_oracle(const std::vector<TilingConfig>& rings,
                              const VerifyOptions& options) {
  VerifyCheck check{"exact nu vs grid integration", true, ""};
  double worst = 0;
  std::size_t tested = 0;
  for (const TilingConfig& cfg : rings) {
    std::vector<CycloInt> reps = orbit_reps(cfg, options.grid_radius);
    std::vector<double> errors(reps.size(), 0.0);
    parallel_for(reps.size(), options.threads, [&](std::size_t i) {
      errors[i] = std::abs(grid_nu(cfg, reps[i], options.grid_resolution) -
                           nu(cfg, reps[i]).to_double());
    });
    tested += reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      worst = std::max(worst, errors[i]);
      if (errors[i] > options.grid_tolerance) {
        check.pass = false;
        check.detail =
            fmt("%s: |grid - exact| = %.2e at ", cfg.name.c_str(),
                errors[i]) + reps[i].str();
        return check;
      }
    }
  }
  check.detail = fmt("%zu orbits at %d cells/axis, worst |grid - exact| = "
                     "%.2e <= %.1e", tested, options.grid_resolution, worst,
                     options.grid_tolerance);
  return check;
}

VerifyCheck check_reach_monotone(const std::vector<TilingConfig>& rings,
                                 const VerifyOptions& options) {
  VerifyCheck check{"reach profiles monotone and capped", true, ""};
  std::size_t tested = 0;
  for (const TilingConfig& cfg : rings) {
    std::vector<CycloInt> reps = orbit_reps(cfg, 2);
    std::vector<std::string> faults(reps.size());
    parallel_for(reps.size(), options.threads, [&](std::size_t i) {
      ReachProfile profile = reach(cfg, reps[i], 4);
      QuadRat cap = nu(cfg, reps[i]);
      for (std::size_t t = 1; t < profile.cumulative.size(); ++t) {
        if ((profile.cumulative[t] - profile.cumulative[t - 1]).sign() < 0) {
          faults[i] = "decreasing at " + reps[i].str();
          return;
        }
      }
      if ((profile.cumulative.back() - cap).sign() > 0) {
        faults[i] = "exceeds nu at " + reps[i].str();
      }
    });
    tested += reps.size();
    for (const std::string& fault : faults) {
      if (!fault.empty()) {
        check.pass = false;
        check.detail = cfg.name + ": " + fault;
        return check;
      }
    }
  }
  check.detail = fmt("%zu orbits to step 4: nondecreasing, bounded by nu",
                     tested);
  return check;
}

VerifyCheck check_method_agreement(const TilingConfig& ab,
                                   const VerifyOptions& options) {
  VerifyCheck check{"step-count and region methods agree", true, ""};
  auto by_l1 = coordination_l1(ab, 4, options.threads);
  auto by_regions = coordination_regions(ab, 4, options.threads);
  for (std::size_t i = 0; i < by_l1.size(); ++i) {
    if (!(by_l1[i].s_c == by_regions[i].s_c) ||
        by_l1[i].contributions != by_regions[i].contributions) {
      check.pass = false;
      check.detail = fmt("mismatch at k = %d", by_l1[i].k);
      return check;
    }
  }
  check.detail = "identical values and shell decompositions for k <= 4";
  return check;
}

VerifyCheck check_integrality(const TilingConfig& ab, const TilingConfig& sh,
                              const VerifyOptions& options) {
  VerifyCheck check{"coordination numbers are ring integers", true, ""};
  std::vector<CoordEntry> entries = coordination_l1(ab, 10, options.threads);
  auto shield_entries = coordination_regions(sh, 4, options.threads);
  entries.insert(entries.end(), shield_entries.begin(), shield_entries.end());
  for (const CoordEntry& entry : entries) {
    if (entry.s_c.r() != 1) {
      check.pass = false;
      check.detail =
          fmt("denominator %s at k = %d", entry.s_c.r().str().c_str(),
              entry.k);
      return check;
    }
  }
  check.detail = fmt("denominator 1 in all %zu entries", entries.size());
  return check;
}

VerifyCheck check_complete_shells(const TilingConfig& ab,
                                  const TilingConfig& sh,
                                  const VerifyOptions& options) {
  VerifyCheck check{"complete shells and the split-shell control", true, ""};
  auto reports = verify_complete_shells(ab, 4, options.threads);
  for (const ShellReport& report : reports) {
    if (!report.complete) {
      check.pass = false;
      check.detail = ab.name + ": shell " + report.r_sq.str() + " split";
      return check;
    }
  }
  // The shield unit shell must be flagged: it links partially at two
  // steps and fully at three.
  auto control = verify_complete_shells(sh, 3, options.threads);
  bool flagged = false;
  for (const ShellReport& report : control) {
    if (report.r_sq == QuadRat::integer(1, sh.disc)) {
      flagged = !report.complete && report.violations.size() == 12;
    }
  }
  if (!flagged) {
    check.pass = false;
    check.detail = "shield unit shell not flagged";
    return check;
  }
  check.detail = fmt("%zu eightfold shells complete; shield unit shell "
                     "flagged as expected", reports.size());
  return check;
}

VerifyCheck check_margin(const TilingConfig& ab,
                         const VerifyOptions& options) {
  VerifyCheck check{"sampling margin does not leak", true, ""};
  Patch patch = enumerate_patch(ab, ab.scalar(12));
  auto narrow = coordination_bfs(patch, 2, ab.scalar(3), options.threads);
  auto wide = coordination_bfs(patch, 2, ab.scalar(6), options.threads);
  std::size_t n = 0;
  for (std::size_t c = 0, w = 0; w < wide.center_index.size(); ++w) {
    while (c < narrow.center_index.size() &&
           narrow.center_index[c] < wide.center_index[w]) {
      ++c;
    }
    if (c == narrow.center_index.size() ||
        narrow.center_index[c] != wide.center_index[w] ||
        narrow.counts[c] != wide.counts[w]) {
      check.pass = false;
      check.detail = fmt("count mismatch at center row %zu", w);
      return check;
    }
    ++n;
  }
  check.detail = fmt("doubling the margin keeps all %zu surviving centers' "
                     "counts identical", n);
  return check;
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& options) {
  TilingConfig ab = TilingConfig::ammann_beenker();
  TilingConfig sh = TilingConfig::shield();
  std::vector<TilingConfig> rings = {ab, sh};
  std::vector<VerifyCheck> checks;
  checks.push_back(check_nu_unit(rings));
  checks.push_back(check_nu_symmetry(rings, options));
  checks.push_back(check_patch_oracle(rings, options));
  checks.push_back(check_support_oracle(rings, options));
  checks.push_back(check_grid_oracle(rings, options));
  checks.push_back(check_reach_monotone(rings, options));
  checks.push_back(check_method_agreement(ab, options));
  checks.push_back(check_integrality(ab, sh, options));
  checks.push_back(check_complete_shells(ab, sh, options));
  checks.push_back(check_margin(ab, options));
  return checks;
}

std::string format_report(const std::vector<VerifyCheck>& checks) {
  std::string out;
  std::size_t passed = 0;
  for (const VerifyCheck& check : checks) {
    out += std::string(check.pass ? "[PASS] " : "[FAIL] ") + check.name +
           ": " + check.detail + "\n";
    if (check.pass) ++passed;
  }
  out += fmt("%zu/%zu checks passed\n", passed, checks.size());
  return out;
}

}  // namespace cycloshell
