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

#include "gridlink/layout.hpp"

namespace gridlink {

std::string_view quadrant_name(QuadrantId q) {
  static constexpr std::array<std::string_view, 4> kNames = {"NW", "NE", "SW", "SE"};
  return kNames[static_cast<int>(q)];
}

QuadrantId quadrant_of(Vertex v) {
  if (v.row <= 3) return v.col <= 3 ? QuadrantId::kNW : QuadrantId::kNE;
  return v.col <= 3 ? QuadrantId::kSW : QuadrantId::kSE;
}

Quadrant quadrant(QuadrantId q) {
  switch (q) {
    case QuadrantId::kNW: return {q, 1, 1};
    case QuadrantId::kNE: return {q, 1, 4};
    case QuadrantId::kSW: return {q, 4, 1};
    case QuadrantId::kSE: return {q, 4, 4};
  }
  return {q, 1, 1};
}

std::array<Vertex, 3> Quadrant::line_a() const {
  return {Vertex{a_row(), col0}, Vertex{a_row(), col0 + 1}, Vertex{a_row(), col0 + 2}};
}

std::array<Vertex, 3> Quadrant::line_b() const {
  return {Vertex{row0, b_col()}, Vertex{row0 + 1, b_col()}, Vertex{row0 + 2, b_col()}};
}

Vertex Quadrant::x1() const {
  return {row0 == 1 ? 2 : 5, col0 == 1 ? 2 : 5};
}

Vertex Quadrant::far_corner() const {
  return {row0 == 1 ? 1 : 6, col0 == 1 ? 1 : 6};
}

VertexSet quadrant_vertices(const GridGraph& g6, QuadrantId q) {
  const Quadrant Q = quadrant(q);
  return rect(g6, Q.row0, Q.row0 + 2, Q.col0, Q.col0 + 2);
}

CentralCycles central_cycles(const GridGraph& g) {
  if (g.rows() != 6 || g.cols() != 6 || g.edge_count() != 60) {
    throw InputError("central cycles are defined on the unmodified 6x6 grid");
  }
  CentralCycles out;
  out.c0.vertices = {{3, 3}, {3, 4}, {4, 4}, {4, 3}, {3, 3}};
  for (int c = 2; c <= 5; ++c) out.c1.vertices.push_back({2, c});
  for (int r = 3; r <= 5; ++r) out.c1.vertices.push_back({r, 5});
  for (int c = 4; c >= 2; --c) out.c1.vertices.push_back({5, c});
  for (int r = 4; r >= 2; --r) out.c1.vertices.push_back({r, 2});
  for (auto q : kQuadrants) {
    out.x0[static_cast<int>(q)] = quadrant(q).x0();
    out.x1[static_cast<int>(q)] = quadrant(q).x1();
  }
  return out;
}

EdgeSet cycle_edges(const GridGraph& g, const Path& cycle) {
  auto e = path_edges(g, cycle);
  if (!e) throw InputError("not a cycle of the graph: " + to_string(cycle));
  return *e;
}

int QDiagram::degree(QuadrantId q) const {
  int d = 0;
  for (int j = 0; j < 4; ++j) d += mult[idx(q)][j];
  return d + loops(q);
}

bool QDiagram::has_loop() const {
  for (auto q : kQuadrants) {
    if (loops(q) > 0) return true;
  }
  return false;
}

QDiagram build_qdiagram(const Pairing& p) {
  const GridGraph g6(6, 6);
  check_pairing(g6, p);
  QDiagram d;
  for (const auto& pr : p.pairs) {
    const auto a = quadrant_of(pr.s);
    const auto b = quadrant_of(pr.t);
    d.pair_edges.emplace_back(a, b);
    ++d.mult[static_cast<int>(a)][static_cast<int>(b)];
    if (a != b) ++d.mult[static_cast<int>(b)][static_cast<int>(a)];
  }
  return d;
}

GridGraph subgrid(const GridGraph& g, const SubgridSpec& spec) {
  VertexSet drop = spec.remove_vertices;
  for (int r : spec.remove_rows) {
    if (r < 1 || r > g.rows()) throw InputError("subgrid: row out of range");
    drop |= row_set(g, r);
  }
  for (int c : spec.remove_cols) {
    if (c < 1 || c > g.cols()) throw InputError("subgrid: column out of range");
    drop |= col_set(g, c);
  }
  if (!(drop - rect(g, 1, g.rows(), 1, g.cols())).empty()) {
    throw InputError("subgrid: vertex id out of range");
  }
  EdgeSet all;
  for (int e = 0; e < g.full_edge_count(); ++e) all.set(e);
  if (!(spec.remove_edges - all).empty()) throw InputError("subgrid: edge index out of range");
  return g.without_edges(spec.remove_edges).without_vertices(drop);
}

std::string_view adjusted_name(Adjusted h) {
  static constexpr std::array<std::string_view, 5> kNames = {"Q0", "Q1", "Q2", "Q3", "Q4"};
  return kNames[static_cast<int>(h)];
}

GridGraph adjusted_quadrant(Adjusted h) {
  const GridGraph q(3, 3);
  auto edge = [&](Vertex u, Vertex v) { return q.grid_edge_index(u, v); };
  EdgeSet drop;
  drop.set(edge({3, 1}, {3, 2}));
  drop.set(edge({3, 2}, {3, 3}));
  const GridGraph q0 = q.without_edges(drop);
  EdgeSet more;
  switch (h) {
    case Adjusted::kQ0:
      return q0;
    case Adjusted::kQ1:
      more.set(edge({1, 1}, {1, 2}));
      more.set(edge({1, 2}, {1, 3}));
      return q0.without_edges(more).with_merge({1, 1}, {2, 1});
    case Adjusted::kQ2:
      more.set(edge({1, 2}, {1, 3}));
      return q0.without_edges(more).with_merge({1, 2}, {1, 1});
    case Adjusted::kQ3:
      more.set(edge({2, 1}, {2, 2}));
      more.set(edge({2, 2}, {2, 3}));
      return q0.without_edges(more).with_merge({2, 1}, {1, 1});
    case Adjusted::kQ4:
      more.set(edge({2, 1}, {2, 2}));
      more.set(edge({2, 2}, {2, 3}));
      return q0.without_edges(more).with_merge({2, 2}, {1, 2});
  }
  return q0;
}

Symmetry quadrant_frame(QuadrantId q, bool swap_lines) {
  switch (q) {
    case QuadrantId::kNW: return swap_lines ? Symmetry::kTranspose : Symmetry::kIdentity;
    case QuadrantId::kNE: return swap_lines ? Symmetry::kRot90 : Symmetry::kFlipCols;
    case QuadrantId::kSW: return swap_lines ? Symmetry::kRot270 : Symmetry::kFlipRows;
    case QuadrantId::kSE: return swap_lines ? Symmetry::kAntiTranspose : Symmetry::kRot180;
  }
  return Symmetry::kIdentity;
}

}  // namespace gridlink
