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

#include "cycloshell/io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cycloshell {

namespace {

std::string dec(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string triple(const QuadRat& v) {
  return v.p().str() + "," + v.q().str() + "," + v.r().str();
}

nlohmann::json json_big(const BigInt& b) {
  using Limit = std::numeric_limits<long long>;
  if (b >= Limit::min() && b <= Limit::max()) {
    return static_cast<long long>(b);
  }
  return b.str();
}

nlohmann::json json_exact(const QuadRat& v) {
  return {{"p", json_big(v.p())}, {"q", json_big(v.q())},
          {"r", json_big(v.r())}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct SvgFrame {
  double min_x = 0, min_y = 0, span = 1;

  // SVG's y axis points down; flip into the frame.
  double fx(double x) const { return x - min_x; }
  double fy(double y) const { return (min_y + span) - y; }
};

SvgFrame fit_frame(const std::vector<PlanePoint>& points) {
  SvgFrame frame;
  if (points.empty()) return frame;
  double min_x = points[0].x.to_double(), max_x = min_x;
  double min_y = points[0].y.to_double(), max_y = min_y;
  for (const PlanePoint& w : points) {
    min_x = std::min(min_x, w.x.to_double());
    max_x = std::max(max_x, w.x.to_double());
    min_y = std::min(min_y, w.y.to_double());
    max_y = std::max(max_y, w.y.to_double());
  }
  double span = std::max(max_x - min_x, max_y - min_y);
  if (span <= 0) span = 1;
  double pad = 0.05 * span;
  frame.min_x = min_x - pad;
  frame.min_y = min_y - pad;
  frame.span = span + 2 * pad;
  return frame;
}

std::string svg_open(const SvgFrame& frame) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 " +
         dec(frame.span, 6) + " " + dec(frame.span, 6) + "\">\n";
}

std::vector<long long> parse_ints(const std::string& text,
                                  std::size_t lo, std::size_t hi) {
  std::vector<long long> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    while (pos < token.size() && std::isspace(token[pos])) ++pos;
    if (pos != token.size()) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.size() < lo || out.size() > hi) {
    throw std::invalid_argument("expected " + std::to_string(lo) +
                                (lo == hi ? "" : ".." + std::to_string(hi)) +
                                " comma-separated integers in '" + text +
                                "'");
  }
  return out;
}

}  // namespace

std::string csv_coordination(const std::vector<CoordEntry>& entries) {
  std::string out = "k,p,q,r,float,method\n";
  for (const CoordEntry& e : entries) {
    out += std::to_string(e.k) + "," + triple(e.s_c) + "," +
           e.s_c.to_decimal(3) + "," + to_string(e.method) + "\n";
  }
  return out;
}

std::string csv_coordination(const BfsCoordination& stats) {
  std::string out = "k,p,q,r,float,method\n";
  for (int k = 1; k <= stats.k_max; ++k) {
    out += std::to_string(k) + ",,,," + dec(stats.mean[k], 6) + ",bfs\n";
  }
  return out;
}

std::string csv_contributions(const std::vector<CoordEntry>& entries) {
  std::string out = "k,rsq_p,rsq_q,rsq_r,part_p,part_q,part_r,part_float\n";
  for (const CoordEntry& e : entries) {
    for (const auto& [r_sq, part] : e.contributions) {
      out += std::to_string(e.k) + "," + triple(r_sq) + "," + triple(part) +
             "," + part.to_decimal(3) + "\n";
    }
  }
  return out;
}

std::string csv_shelling(const std::vector<ShellEntry>& shells) {
  std::string out = "rsq_p,rsq_q,rsq_r,p,q,r,float,count\n";
  for (const ShellEntry& e : shells) {
    out += triple(e.r_sq) + "," + triple(e.value) + "," +
           e.value.to_decimal(3) + "," + std::to_string(e.orbit_count) + "\n";
  }
  return out;
}

std::string csv_delta(const std::vector<std::pair<int, QuadRat>>& deltas) {
  std::string out = "k,delta\n";
  for (const auto& [k, delta] : deltas) {
    out += std::to_string(k) + "," + delta.to_decimal(6) + "\n";
  }
  return out;
}

std::string csv_patch(const Patch& patch) {
  std::string out = "a0,a1,a2,a3,x,y\n";
  for (const CycloInt& v : patch.vertices) {
    PlanePoint w = embed(v);
    out += std::to_string(v.a[0]) + "," + std::to_string(v.a[1]) + "," +
           std::to_string(v.a[2]) + "," + std::to_string(v.a[3]) + "," +
           dec(w.x.to_double(), 6) + "," + dec(w.y.to_double(), 6) + "\n";
  }
  return out;
}

std::string csv_patch_edges(const Patch& patch) {
  std::string out = "i,j\n";
  for (std::size_t i = 0; i < patch.adjacency.size(); ++i) {
    for (std::int32_t j : patch.adjacency[i]) {
      if (static_cast<std::size_t>(j) > i) {
        out += std::to_string(i) + "," + std::to_string(j) + "\n";
      }
    }
  }
  return out;
}

std::string csv_window(const ConvexPolygon& window) {
  std::string out = "xp,xq,xr,yp,yq,yr,x,y\n";
  for (const PlanePoint& w : window.vertices()) {
    out += triple(w.x) + "," + triple(w.y) + "," + dec(w.x.to_double(), 6) +
           "," + dec(w.y.to_double(), 6) + "\n";
  }
  return out;
}

std::string json_coordination(const std::string& tiling,
                              const std::vector<CoordEntry>& entries) {
  nlohmann::json root;
  root["tiling"] = tiling;
  root["method"] =
      entries.empty() ? "none" : to_string(entries.front().method);
  root["entries"] = nlohmann::json::array();
  for (const CoordEntry& e : entries) {
    nlohmann::json entry = json_exact(e.s_c);
    entry["k"] = e.k;
    entry["float"] = e.s_c.to_double();
    entry["contributions"] = nlohmann::json::array();
    for (const auto& [r_sq, part] : e.contributions) {
      entry["contributions"].push_back(
          {{"rsq", json_exact(r_sq)}, {"part", json_exact(part)}});
    }
    root["entries"].push_back(std::move(entry));
  }
  return dump(root);
}

std::string json_coordination(const std::string& tiling,
                              const BfsCoordination& stats) {
  nlohmann::json root;
  root["tiling"] = tiling;
  root["method"] = "bfs";
  root["centers"] = stats.centers;
  root["entries"] = nlohmann::json::array();
  for (int k = 1; k <= stats.k_max; ++k) {
    root["entries"].push_back({{"k", k}, {"mean", stats.mean[k]}});
  }
  return dump(root);
}

std::string json_shelling(const std::string& tiling,
                          const std::vector<ShellEntry>& shells) {
  nlohmann::json root;
  root["tiling"] = tiling;
  root["shells"] = nlohmann::json::array();
  for (const ShellEntry& e : shells) {
    root["shells"].push_back({{"rsq", json_exact(e.r_sq)},
                              {"value", json_exact(e.value)},
                              {"float", e.value.to_double()},
                              {"count", e.orbit_count}});
  }
  return dump(root);
}

std::string json_patch(const Patch& patch) {
  nlohmann::json root;
  root["tiling"] = patch.config.name;
  root["radius"] = patch.radius.to_double();
  root["vertices"] = nlohmann::json::array();
  for (const CycloInt& v : patch.vertices) {
    PlanePoint w = embed(v);
    root["vertices"].push_back({{"a", {v.a[0], v.a[1], v.a[2], v.a[3]}},
                                {"x", w.x.to_double()},
                                {"y", w.y.to_double()}});
  }
  root["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < patch.adjacency.size(); ++i) {
    for (std::int32_t j : patch.adjacency[i]) {
      if (static_cast<std::size_t>(j) > i) {
        root["edges"].push_back({i, j});
      }
    }
  }
  return dump(root);
}

std::string json_window(const std::string& tiling,
                        const ConvexPolygon& window) {
  nlohmann::json root;
  root["tiling"] = tiling;
  root["area"] = area(window).to_double();
  root["vertices"] = nlohmann::json::array();
  for (const PlanePoint& w : window.vertices()) {
    root["vertices"].push_back({{"x", json_exact(w.x)},
                                {"y", json_exact(w.y)},
                                {"xf", w.x.to_double()},
                                {"yf", w.y.to_double()}});
  }
  return dump(root);
}

std::string svg_patch(const Patch& patch) {
  std::vector<PlanePoint> points;
  points.reserve(patch.vertices.size());
  for (const CycloInt& v : patch.vertices) points.push_back(embed(v));
  SvgFrame frame = fit_frame(points);
  std::string out = svg_open(frame);
  out += "  <g stroke=\"#345995\" stroke-width=\"" +
         dec(frame.span * 0.002, 6) + "\">\n";
  for (std::size_t i = 0; i < patch.adjacency.size(); ++i) {
    for (std::int32_t j : patch.adjacency[i]) {
      if (static_cast<std::size_t>(j) <= i) continue;
      const PlanePoint& a = points[i];
      const PlanePoint& b = points[j];
      out += "    <line x1=\"" + dec(frame.fx(a.x.to_double()), 6) +
             "\" y1=\"" + dec(frame.fy(a.y.to_double()), 6) + "\" x2=\"" +
             dec(frame.fx(b.x.to_double()), 6) + "\" y2=\"" +
             dec(frame.fy(b.y.to_double()), 6) + "\"/>\n";
    }
  }
  out += "  </g>\n  <g fill=\"#1d2f4f\">\n";
  for (const PlanePoint& w : points) {
    out += "    <circle cx=\"" + dec(frame.fx(w.x.to_double()), 6) +
           "\" cy=\"" + dec(frame.fy(w.y.to_double()), 6) + "\" r=\"" +
           dec(frame.span * 0.004, 6) + "\"/>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

std::string svg_window(const ConvexPolygon& window) {
  SvgFrame frame = fit_frame(window.vertices());
  std::string out = svg_open(frame);
  out += "  <polygon fill=\"#e8edf7\" stroke=\"#345995\" stroke-width=\"" +
         dec(frame.span * 0.004, 6) + "\" points=\"";
  for (std::size_t i = 0; i < window.size(); ++i) {
    const PlanePoint& w = window.vertex(i);
    if (i > 0) out += " ";
    out += dec(frame.fx(w.x.to_double()), 6) + "," +
           dec(frame.fy(w.y.to_double()), 6);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

CycloInt parse_cyclo(const std::string& text, int n) {
  std::vector<long long> a = parse_ints(text, 4, 4);
  return CycloInt(a[0], a[1], a[2], a[3], n);
}

QuadRat parse_quadrat(const std::string& text, int disc) {
  std::vector<long long> v = parse_ints(text, 1, 3);
  long long q = v.size() > 1 ? v[1] : 0;
  long long r = v.size() > 2 ? v[2] : 1;
  return QuadRat(v[0], q, r, disc);
}

PlanePoint parse_shift(const std::string& text, int disc) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("expected 'x,y' in '" + text + "'");
  }
  auto rational = [disc](const std::string& token) {
    std::size_t slash = token.find('/');
    std::string num = token.substr(0, slash);
    std::string den =
        slash == std::string::npos ? "1" : token.substr(slash + 1);
    long long p = parse_ints(num, 1, 1)[0];
    long long r = parse_ints(den, 1, 1)[0];
    return QuadRat(p, 0, r, disc);
  };
  return PlanePoint(rational(text.substr(0, comma)),
                    rational(text.substr(comma + 1)));
}

}  // namespace cycloshell
