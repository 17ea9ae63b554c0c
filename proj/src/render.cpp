// Copyright 2026 The Gridlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gridlink/render.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "gridlink/validate.hpp"

namespace gridlink {

namespace {

void require_valid(const GridGraph& g, const Pairing& p, const Linkage& l) {
  if (l.empty()) throw InputError("nothing to render: the input has no paths");
  const auto v = validate_linkage(g, p, l);
  if (!v.empty()) {
    throw InputError("refusing to render an invalid linkage (" + std::string(violation_name(v.front().kind)) +
                     ")");
  }
}

// Pair index per canonical edge, -1 when unused.
std::vector<int> edge_owner(const GridGraph& g, const Linkage& l) {
  std::vector<int> owner(g.full_edge_count(), -1);
  for (int i = 0; i < static_cast<int>(l.size()); ++i) {
    path_edges(g, l[i])->for_each([&](int e) { owner[e] = i; });
  }
  return owner;
}

constexpr std::array<const char*, 10> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                 "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

}  // namespace

char pair_mark(int index) {
  if (index < 9) return static_cast<char>('1' + index);
  if (index < 9 + 26) return static_cast<char>('A' + index - 9);
  return '*';
}

std::string render_ascii(const GridGraph& g, const Pairing& p, const Linkage& l, const RenderOptions& opt) {
  require_valid(g, p, l);
  const auto owner = edge_owner(g, l);
  const int h = 2 * g.rows() - 1;
  const int w = 2 * g.cols() - 1;
  std::vector<std::string> canvas(h, std::string(w, ' '));
  for (int r = 1; r <= g.rows(); ++r) {
    for (int c = 1; c <= g.cols(); ++c) {
      if (g.has_vertex({r, c})) canvas[2 * (r - 1)][2 * (c - 1)] = '+';
    }
  }
  for (int e = 0; e < g.full_edge_count(); ++e) {
    const auto [u, v] = g.grid_edge(e);
    const int y = (u.row - 1) + (v.row - 1);
    const int x = (u.col - 1) + (v.col - 1);
    if (owner[e] >= 0) {
      canvas[y][x] = pair_mark(owner[e]);
    } else if (opt.show_grid && g.edges().test(e)) {
      canvas[y][x] = u.row == v.row ? '-' : '|';
    }
  }
  std::ostringstream os;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

std::string render_svg(const GridGraph& g, const Pairing& p, const Linkage& l) {
  require_valid(g, p, l);
  constexpr int kStep = 40;
  constexpr int kMargin = 30;
  auto px = [](int i) { return kMargin + (i - 1) * kStep; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kMargin + (g.cols() - 1) * kStep
     << "\" height=\"" << 2 * kMargin + (g.rows() - 1) * kStep << "\">\n";
  g.edges().for_each([&](int e) {
    const auto [u, v] = g.grid_edge(e);
    os << "  <line x1=\"" << px(u.col) << "\" y1=\"" << px(u.row) << "\" x2=\"" << px(v.col) << "\" y2=\""
       << px(v.row) << "\" stroke=\"#dddddd\" stroke-width=\"2\"/>\n";
  });
  for (int i = 0; i < static_cast<int>(l.size()); ++i) {
    const char* color = kColors[i % kColors.size()];
    os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"4\" points=\"";
    for (std::size_t j = 0; j < l[i].vertices.size(); ++j) {
      const Vertex v = l[i].vertices[j];
      os << (j ? " " : "") << px(v.col) << "," << px(v.row);
    }
    os << "\"/>\n";
  }
  for (int i = 0; i < p.size(); ++i) {
    const char* color = kColors[i % kColors.size()];
    for (const Vertex v : {p.pairs[i].s, p.pairs[i].t}) {
      os << "  <circle cx=\"" << px(v.col) << "\" cy=\"" << px(v.row) << "\" r=\"9\" fill=\"white\" stroke=\""
         << color << "\" stroke-width=\"2\"/>\n";
      os << "  <text x=\"" << px(v.col) << "\" y=\"" << px(v.row) + 4
         << "\" font-size=\"11\" text-anchor=\"middle\">" << pair_mark(i) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gridlink
