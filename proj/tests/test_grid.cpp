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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gridlink/grid.hpp"
#include "gridlink/instance_io.hpp"
#include "gridlink/layout.hpp"
#include "gridlink/symmetry.hpp"

using namespace gridlink;

TEST_CASE("bitset basics") {
  VertexSet a;
  a.set(3);
  a.set(63);
  CHECK(a.count() == 2);
  CHECK(a.first() == 3);
  VertexSet b;
  b.set(63);
  CHECK(b.subset_of(a));
  CHECK(a.intersects(b));
  CHECK((a - b).count() == 1);
  CHECK((a ^ b).test(3));
  EdgeSet e;
  e.set(100);
  CHECK(e.test(100));
  std::vector<int> seen;
  e.for_each([&](int i) { seen.push_back(i); });
  CHECK(seen == std::vector<int>{100});
}

TEST_CASE("grid sizes and edge indices") {
  const auto g = make_grid(4, 5);
  CHECK(g.vertex_count() == 20);
  CHECK(g.edge_count() == 4 * 4 + 3 * 5);
  CHECK(g.full_edge_count() == g.edge_count());
  std::set<int> ids;
  for (int e = 0; e < g.full_edge_count(); ++e) {
    const auto [u, v] = g.grid_edge(e);
    CHECK(g.grid_edge_index(u, v) == e);
    CHECK(g.grid_edge_index(v, u) == e);
    ids.insert(e);
  }
  CHECK(static_cast<int>(ids.size()) == g.full_edge_count());
  CHECK(g.degree({1, 1}) == 2);
  CHECK(g.degree({2, 2}) == 4);
  CHECK(g.degree({1, 3}) == 3);
  CHECK(g.id({2, 3}) == 7);
  CHECK(g.vertex(7) == Vertex{2, 3});
}

TEST_CASE("oversized grids are rejected") {
  CHECK_THROWS_AS(make_grid(9, 9), InputError);
  CHECK_THROWS_AS(make_grid(0, 3), InputError);
}

TEST_CASE("regions") {
  const auto g = make_grid(6, 6);
  const auto r = rect(g, 1, 3, 1, 3);
  CHECK(r.count() == 9);
  CHECK(induced_edges(g, r).count() == 12);
  CHECK(boundary_edges(g, r).count() == 6);
  CHECK(row_set(g, 2).count() == 6);
  CHECK(col_set(g, 6).count() == 6);
}

TEST_CASE("paths") {
  const auto g = make_grid(3, 3);
  const Path p{{{1, 1}, {1, 2}, {2, 2}}};
  const auto e = path_edges(g, p);
  REQUIRE(e);
  CHECK(e->count() == 2);
  CHECK_FALSE(path_edges(g, Path{{{1, 1}, {2, 2}}}));
  CHECK_FALSE(path_edges(g, Path{{{1, 1}, {1, 2}, {1, 1}}}));
  CHECK(reversed(p).front() == Vertex{2, 2});
  const auto j = joined(p, Path{{{2, 2}, {3, 2}}});
  CHECK(j.length() == 3);
  CHECK(Path{{{1, 1}}}.trivial());
}

TEST_CASE("deleted edges and merges") {
  const auto g = make_grid(3, 3);
  EdgeSet cut;
  cut.set(g.grid_edge_index({1, 1}, {1, 2}));
  const auto h = g.without_edges(cut);
  CHECK(h.edge_count() == g.edge_count() - 1);
  CHECK_FALSE(h.edge_between({1, 1}, {1, 2}));
  const auto m = g.with_merge({1, 1}, {1, 2});
  CHECK(m.vertex_count() == 8);
  CHECK(m.representative({1, 1}) == Vertex{1, 2});
}

TEST_CASE("symmetries form a group") {
  for (Symmetry a : kAllSymmetries) {
    CHECK(compose(a, inverse(a)) == Symmetry::kIdentity);
    for (Symmetry b : kAllSymmetries) {
      for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= 4; ++c) {
          const Vertex v{r, c};
          CHECK(apply_symmetry(compose(a, b), v, 4, 4) == apply_symmetry(a, apply_symmetry(b, v, 4, 4), 4, 4));
        }
      }
    }
  }
  CHECK(apply_symmetry(Symmetry::kRot90, Vertex{1, 1}, 4, 4) == Vertex{1, 4});
  CHECK(apply_symmetry(Symmetry::kTranspose, Vertex{1, 3}, 4, 4) == Vertex{3, 1});
  CHECK(symmetry_group(3, 5).size() == 4);
  CHECK_THROWS_AS(apply_symmetry(Symmetry::kTranspose, Vertex{1, 1}, 3, 5), InputError);
}

TEST_CASE("canonical form is constant on orbits") {
  const Pairing p{{{{1, 1}, {3, 2}}, {{2, 3}, {1, 2}}}};
  const auto cf = canonical_form(p, 3, 3);
  for (Symmetry s : kAllSymmetries) {
    const auto q = apply_symmetry(s, p, 3, 3);
    CHECK(canonical_form(q, 3, 3).key == cf.key);
  }
  CHECK(cf.orbit_size >= 1);
  CHECK(8 % cf.orbit_size == 0);
}

TEST_CASE("quadrants and central cycles") {
  const auto g = make_grid(6, 6);
  CHECK(quadrant_of({1, 1}) == QuadrantId::kNW);
  CHECK(quadrant_of({3, 4}) == QuadrantId::kNE);
  CHECK(quadrant_of({4, 3}) == QuadrantId::kSW);
  CHECK(quadrant_of({6, 6}) == QuadrantId::kSE);
  for (QuadrantId q : kQuadrants) CHECK(quadrant_vertices(g, q).count() == 9);
  const auto cc = central_cycles(g);
  CHECK(cc.c0.length() == 4);
  CHECK(cc.c1.length() == 12);
  CHECK(cc.c0.front() == cc.c0.back());
  CHECK(cycle_edges(g, cc.c0).count() == 4);
  CHECK(cycle_edges(g, cc.c1).count() == 12);
  CHECK_FALSE(cycle_edges(g, cc.c0).intersects(cycle_edges(g, cc.c1)));
}

TEST_CASE("quadrant frames map the canonical lines") {
  for (QuadrantId q : kQuadrants) {
    for (bool swap : {false, true}) {
      const Symmetry s = quadrant_frame(q, swap);
      const auto quad = quadrant(q);
      // Canonical x0 = (3,3) lands on the quadrant's center-facing corner.
      CHECK(apply_symmetry(s, Vertex{3, 3}, 6, 6) == quad.x0());
      CHECK(quad.contains(apply_symmetry(s, Vertex{1, 1}, 6, 6)));
    }
  }
}

TEST_CASE("q-diagram degrees") {
  const Pairing p{{{{1, 1}, {2, 2}}, {{1, 6}, {6, 6}}, {{6, 1}, {3, 3}}, {{4, 4}, {1, 4}}}};
  const auto d = build_qdiagram(p);
  CHECK(d.loops(QuadrantId::kNW) == 1);
  CHECK(d.degree(QuadrantId::kNW) == 3);
  CHECK(d.degree(QuadrantId::kNE) == 2);
  CHECK(d.between(QuadrantId::kNE, QuadrantId::kSE) == 2);
  CHECK(d.has_loop());
}

TEST_CASE("instance text round trip") {
  const std::string text =
      "# sample\n"
      "grid 3 3\n"
      "pair (1,1) (3,3)\n"
      "pair ( 1 , 3 ) (3,1)\n"
      "path 1 (1,1) (1,2) (2,2) (3,2) (3,3)\n";
  const auto inst = parse_instance(text);
  CHECK(inst.rows == 3);
  CHECK(inst.pairing.size() == 2);
  CHECK(inst.pairing.pairs[1].s == Vertex{1, 3});
  REQUIRE(inst.linkage.size() == 2);
  CHECK(inst.linkage[0].length() == 4);
  CHECK(inst.linkage[1].vertices.empty());
  const auto again = parse_instance(format_instance(inst));
  CHECK(again.pairing == inst.pairing);
  CHECK(again.linkage[0] == inst.linkage[0]);
}

TEST_CASE("instance parse errors carry line numbers") {
  try {
    parse_instance("grid 6 6\npair (0,1) (2,2)\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_instance("pair (1,1) (2,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("grid 3 3\npair (1,1) (1,1)\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("grid 3 3\npair (1,1) (2,2)\npair (2,2) (3,3)\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("grid 3 3\nfoo\n"), ParseError);
  CHECK(parse_vertex("4,5") == Vertex{4, 5});
  CHECK(parse_vertex("(4,5)") == Vertex{4, 5});
}
