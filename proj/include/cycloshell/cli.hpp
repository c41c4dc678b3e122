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

#ifndef CYCLOSHELL_CLI_HPP_
#define CYCLOSHELL_CLI_HPP_

namespace cycloshell {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // flag parsing or argument errors
inline constexpr int kExitBoundary = 2;    // window boundary hit; reshift
inline constexpr int kExitBadCombo = 3;    // method or command vs tiling
inline constexpr int kExitVerify = 4;      // a verification check failed
inline constexpr int kExitIo = 5;          // output file not writable

// Parses argv and runs one subcommand; returns the exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace cycloshell

#endif  // CYCLOSHELL_CLI_HPP_
