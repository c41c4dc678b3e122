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

#include "cycloshell/cli.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cycloshell/coordnum.hpp"
#include "cycloshell/frequencies.hpp"
#include "cycloshell/io.hpp"
#include "cycloshell/modelset.hpp"
#include "cycloshell/verify.hpp"

namespace cycloshell {

namespace {

struct ComboError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string tiling = "ammann-beenker";
  std::string shift;
  std::string output;
  std::string format = "csv";
  std::string method = "auto";
  std::string z_text;
  std::string radius = "10";
  std::string max_norm = "16";
  std::string margin = "3";
  int k_max = 4;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  int grid_resolution = 800;
  double grid_tolerance = 4e-3;
  int box_radius = 10;
};

int ring_disc(const std::string& tiling) {
  return tiling == "shield" ? 3 : 2;
}

TilingConfig make_config(const Options& opt) {
  if (opt.shift.empty()) return TilingConfig::make(opt.tiling);
  return TilingConfig::make(opt.tiling,
                            parse_shift(opt.shift, ring_disc(opt.tiling)));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string companion_path(const std::string& path,
                           const std::string& suffix) {
  const std::string ext = ".csv";
  if (path.size() > ext.size() &&
      path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size()) + suffix;
  }
  return path + suffix;
}

void add_common(CLI::App* cmd, Options& opt, bool with_format = true) {
  cmd->add_option("--tiling", opt.tiling, "Vertex set to work on")
      ->check(CLI::IsMember({"ammann-beenker", "shield"}))
      ->capture_default_str();
  cmd->add_option("--shift", opt.shift,
                  "Window shift in internal space as 'xn/xd,yn/yd' "
                  "(default 1/7,1/13)");
  cmd->add_option("--threads", opt.threads, "Worker thread count")
      ->capture_default_str();
  cmd->add_option("--output,-o", opt.output,
                  "Output file (default: stdout)");
  if (with_format) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
  }
}

int cmd_window(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  if (opt.format == "svg") {
    write_output(opt.output, svg_window(cfg.window));
  } else if (opt.format == "json") {
    write_output(opt.output, json_window(cfg.name, cfg.window));
  } else {
    write_output(opt.output, csv_window(cfg.window));
  }
  return kExitOk;
}

int cmd_patch(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  Patch patch = enumerate_patch(cfg, parse_quadrat(opt.radius, cfg.disc));
  if (opt.format == "svg") {
    write_output(opt.output, svg_patch(patch));
  } else if (opt.format == "json") {
    write_output(opt.output, json_patch(patch));
  } else {
    write_output(opt.output, csv_patch(patch));
    if (!opt.output.empty()) {
      write_output(companion_path(opt.output, ".edges.csv"),
                   csv_patch_edges(patch));
    }
  }
  return kExitOk;
}

int cmd_nu(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  CycloInt z = parse_cyclo(opt.z_text, cfg.n);
  QuadRat value = nu(cfg, z);
  if (opt.format == "json") {
    write_output(opt.output,
                 "{\"tiling\": \"" + cfg.name + "\", \"z\": \"" + z.str() +
                     "\", \"p\": " + value.p().str() + ", \"q\": " +
                     value.q().str() + ", \"r\": " + value.r().str() +
                     ", \"float\": " + value.to_decimal(6) + "}\n");
  } else {
    write_output(opt.output,
                 value.str() + " ~ " + value.to_decimal(6) + "\n");
  }
  return kExitOk;
}

int cmd_shelling(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  auto shells =
      shelling(cfg, parse_quadrat(opt.max_norm, cfg.disc), opt.threads);
  if (opt.format == "svg") {
    throw std::invalid_argument("shelling has no svg form");
  }
  if (opt.format == "json") {
    write_output(opt.output, json_shelling(cfg.name, shells));
  } else {
    write_output(opt.output, csv_shelling(shells));
  }
  return kExitOk;
}

int cmd_coordination(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  std::string method = opt.method;
  if (method == "auto") method = cfg.n == 8 ? "l1" : "regions";
  if (opt.format == "svg") {
    throw std::invalid_argument("coordination has no svg form");
  }

  if (method == "bfs") {
    Patch patch = enumerate_patch(cfg, parse_quadrat(opt.radius, cfg.disc));
    BfsCoordination stats = coordination_bfs(
        patch, opt.k_max, parse_quadrat(opt.margin, cfg.disc), opt.threads);
    write_output(opt.output, opt.format == "json"
                                 ? json_coordination(cfg.name, stats)
                                 : csv_coordination(stats));
    return kExitOk;
  }

  std::vector<CoordEntry> entries;
  if (method == "l1") {
    if (cfg.n != 8) {
      throw ComboError("method l1 requires --tiling ammann-beenker");
    }
    entries = coordination_l1(cfg, opt.k_max, opt.threads);
  } else {
    entries = coordination_regions(cfg, opt.k_max, opt.threads);
  }
  if (opt.format == "json") {
    write_output(opt.output, json_coordination(cfg.name, entries));
  } else {
    write_output(opt.output, csv_coordination(entries));
    if (!opt.output.empty()) {
      write_output(companion_path(opt.output, ".contributions.csv"),
                   csv_contributions(entries));
    }
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  VerifyOptions vopt;
  vopt.threads = opt.threads;
  vopt.grid_resolution = opt.grid_resolution;
  vopt.grid_tolerance = opt.grid_tolerance;
  vopt.box_radius = opt.box_radius;
  std::vector<VerifyCheck> checks = run_verification(vopt);
  std::string report = format_report(checks);
  std::cout << report;
  if (!opt.output.empty()) write_output(opt.output, report);
  for (const VerifyCheck& check : checks) {
    if (!check.pass) return kExitVerify;
  }
  return kExitOk;
}

int cmd_fig2(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  if (cfg.n != 8) {
    throw ComboError("fig2 requires --tiling ammann-beenker");
  }
  auto entries = coordination_l1(cfg, opt.k_max, opt.threads);
  auto deltas = delta_series(entries);
  write_output(opt.output, csv_delta(deltas));
  // The first 40 values are known to grow strictly; flag any regression.
  for (const auto& [k, delta] : deltas) {
    if (k <= 39 && delta.sign() <= 0) {
      std::cerr << "fig2: delta at k = " << k << " is not positive\n";
      return kExitVerify;
    }
  }
  return kExitOk;
}

int cmd_render(const Options& opt) {
  TilingConfig cfg = make_config(opt);
  Patch patch = enumerate_patch(cfg, parse_quadrat(opt.radius, cfg.disc));
  write_output(opt.output, svg_patch(patch));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  Options opt;
  CLI::App app{
      "cycloshell: exact shelling and coordination numbers of planar "
      "cyclotomic cut-and-project vertex sets"};
  app.require_subcommand(1);
  app.footer(
      "Lattice points are written in the power basis as 'a0,a1,a2,a3',\n"
      "meaning a0 + a1*xi + a2*xi^2 + a3*xi^3 with xi the primitive 8th\n"
      "(ammann-beenker) or 12th (shield) root of unity.  Exact field\n"
      "values appear as integer triples p,q,r meaning (p + q*sqrt(d))/r\n"
      "with d = 2 or 3.\n"
      "\n"
      "Exit codes: 0 success; 1 usage or argument error; 2 window\n"
      "boundary hit (choose another --shift); 3 method or command not\n"
      "available for the tiling; 4 verification failure; 5 output not\n"
      "writable.");

  CLI::App* window = app.add_subcommand("window", "Emit the window polygon");
  add_common(window, opt);

  CLI::App* patch =
      app.add_subcommand("patch", "Enumerate vertices within a radius");
  add_common(patch, opt);
  patch->add_option("--radius,-R", opt.radius, "Disk radius (p[,q[,r]])")
      ->capture_default_str();

  CLI::App* nu_cmd =
      app.add_subcommand("nu", "Frequency of one difference vector");
  add_common(nu_cmd, opt);
  nu_cmd->add_option("--z", opt.z_text, "Difference vector a0,a1,a2,a3")
      ->required();

  CLI::App* shell_cmd =
      app.add_subcommand("shelling", "Averaged shelling numbers");
  add_common(shell_cmd, opt);
  shell_cmd
      ->add_option("--max-norm", opt.max_norm,
                   "Largest squared radius (p[,q[,r]])")
      ->capture_default_str();

  CLI::App* coord =
      app.add_subcommand("coordination", "Averaged coordination numbers");
  add_common(coord, opt);
  coord->add_option("--method", opt.method,
                    "l1 (eightfold only), regions, bfs, or auto")
      ->check(CLI::IsMember({"auto", "l1", "regions", "bfs"}))
      ->capture_default_str();
  coord->add_option("--kmax,-k", opt.k_max, "Largest graph distance")
      ->capture_default_str();
  coord->add_option("--radius,-R", opt.radius, "Patch radius (bfs)")
      ->capture_default_str();
  coord->add_option("--margin", opt.margin,
                    "Extra center margin in edge lengths (bfs)")
      ->capture_default_str();

  CLI::App* verify =
      app.add_subcommand("verify", "Run the cross-validation suite");
  add_common(verify, opt, /*with_format=*/false);
  verify
      ->add_option("--grid-resolution", opt.grid_resolution,
                   "Cells per axis for the grid oracle")
      ->capture_default_str();
  verify
      ->add_option("--grid-tolerance", opt.grid_tolerance,
                   "Largest allowed |grid - exact|")
      ->capture_default_str();
  verify
      ->add_option("--box-radius", opt.box_radius,
                   "Radius of the box-oracle set comparisons")
      ->capture_default_str();

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "Consecutive coordination differences (eightfold)");
  add_common(fig2, opt, /*with_format=*/false);
  fig2->add_option("--kmax,-k", opt.k_max, "Largest graph distance")
      ->default_val(400);

  CLI::App* render = app.add_subcommand("render", "Draw a patch as SVG");
  add_common(render, opt, /*with_format=*/false);
  render->add_option("--radius,-R", opt.radius, "Disk radius (p[,q[,r]])")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (window->parsed()) return cmd_window(opt);
    if (patch->parsed()) return cmd_patch(opt);
    if (nu_cmd->parsed()) return cmd_nu(opt);
    if (shell_cmd->parsed()) return cmd_shelling(opt);
    if (coord->parsed()) return cmd_coordination(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (fig2->parsed()) return cmd_fig2(opt);
    if (render->parsed()) return cmd_render(opt);
  } catch (const BoundaryHit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBoundary;
  } catch (const ComboError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadCombo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cycloshell
