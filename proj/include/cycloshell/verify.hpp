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

#ifndef CYCLOSHELL_VERIFY_HPP_
#define CYCLOSHELL_VERIFY_HPP_

#include <string>
#include <vector>

namespace cycloshell {

// Cross-validation of the exact pipeline against its independent
// oracles and its own claimed invariants, run on both tilings.  The
// checks re-derive everything from scratch; nothing is cached between
// them.

struct VerifyOptions {
  int threads = 1;
  // Orbit representatives with |z| <= symmetry_radius feed the symmetry
  // and range checks; |z| <= grid_radius feeds the grid comparison.
  int symmetry_radius = 3;
  int grid_radius = 3;
  int grid_resolution = 800;
  double grid_tolerance = 4e-3;
  // Radius of the box-enumeration cross-checks of the breadth-first
  // vertex and support enumerations.
  int box_radius = 10;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // counts, worst errors, first offender
};

std::vector<VerifyCheck> run_verification(const VerifyOptions& options = {});

// Render as "[PASS] name: detail" lines plus a summary line.
std::string format_report(const std::vector<VerifyCheck>& checks);

}  // namespace cycloshell

#endif  // CYCLOSHELL_VERIFY_HPP_
