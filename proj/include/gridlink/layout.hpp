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

// Structure of the 6x6 grid: quadrants, boundary lines, the central cycles
// and q-diagrams; plus subgrid construction.

#ifndef GRIDLINK_LAYOUT_HPP_
#define GRIDLINK_LAYOUT_HPP_

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/symmetry.hpp"

namespace gridlink {

enum class QuadrantId : std::uint8_t { kNW, kNE, kSW, kSE };

inline constexpr std::array<QuadrantId, 4> kQuadrants = {QuadrantId::kNW, QuadrantId::kNE,
                                                          QuadrantId::kSW, QuadrantId::kSE};

std::string_view quadrant_name(QuadrantId q);
QuadrantId quadrant_of(Vertex v);

struct Quadrant {
  QuadrantId which;
  int row0;  // top-left corner
  int col0;

  bool contains(Vertex v) const {
    return v.row >= row0 && v.row < row0 + 3 && v.col >= col0 && v.col < col0 + 3;
  }
  // Horizontal side facing the center (row 3 or 4 within the quadrant).
  int a_row() const { return row0 == 1 ? 3 : 4; }
  // Vertical side facing the center.
  int b_col() const { return col0 == 1 ? 3 : 4; }
  std::array<Vertex, 3> line_a() const;
  std::array<Vertex, 3> line_b() const;
  Vertex x0() const { return {a_row(), b_col()}; }
  // Middle vertex of the quadrant's part of the 12-cycle.
  Vertex x1() const;
  // Corner diagonally opposite x0.
  Vertex far_corner() const;
};

Quadrant quadrant(QuadrantId q);
// Quadrant vertex sets in the 6x6 grid.
VertexSet quadrant_vertices(const GridGraph& g6, QuadrantId q);

struct CentralCycles {
  Path c0;  // closed: first vertex repeated at the end
  Path c1;
  std::array<Vertex, 4> x0;  // indexed by QuadrantId
  std::array<Vertex, 4> x1;
};
// Requires the unmodified 6x6 grid.
CentralCycles central_cycles(const GridGraph& g);
EdgeSet cycle_edges(const GridGraph& g, const Path& cycle);

// Multigraph on the quadrants; pair i contributes the edge
// quadrant_of(s_i) - quadrant_of(t_i), a loop when both agree.
struct QDiagram {
  std::vector<std::pair<QuadrantId, QuadrantId>> pair_edges;
  std::array<std::array<int, 4>, 4> mult{};  // symmetric; diagonal counts loops

  int degree(QuadrantId q) const;  // loops count twice, equals terminals in q
  int loops(QuadrantId q) const { return mult[idx(q)][idx(q)]; }
  bool has_loop() const;
  int between(QuadrantId a, QuadrantId b) const { return mult[idx(a)][idx(b)]; }

 private:
  static int idx(QuadrantId q) { return static_cast<int>(q); }
};

QDiagram build_qdiagram(const Pairing& p);

struct SubgridSpec {
  std::vector<int> remove_rows;
  std::vector<int> remove_cols;
  VertexSet remove_vertices;
  EdgeSet remove_edges;
};
GridGraph subgrid(const GridGraph& g, const SubgridSpec& spec);

// Adjusted quadrants in the orientation where the quadrant is the 3x3 grid,
// the boundary line A is row 3 and B is column 3. Q0 drops the edges of A;
// Q1..Q4 additionally delete and contract edges.
enum class Adjusted : std::uint8_t { kQ0, kQ1, kQ2, kQ3, kQ4 };
inline constexpr std::array<Adjusted, 5> kAdjustedShapes = {Adjusted::kQ0, Adjusted::kQ1,
                                                            Adjusted::kQ2, Adjusted::kQ3,
                                                            Adjusted::kQ4};
std::string_view adjusted_name(Adjusted h);
GridGraph adjusted_quadrant(Adjusted h);

// Dihedral element of the 6x6 grid taking canonical NW (A = row 3,
// B = col 3) onto quadrant q with its lines; when `swap_lines` is set the
// canonical A is mapped onto q's vertical line instead.
Symmetry quadrant_frame(QuadrantId q, bool swap_lines = false);

}  // namespace gridlink

#endif  // GRIDLINK_LAYOUT_HPP_
