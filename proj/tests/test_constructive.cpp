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

#include <map>

#include "gridlink/constructive.hpp"
#include "gridlink/enumerate.hpp"
#include "gridlink/layout.hpp"
#include "gridlink/validate.hpp"

using namespace gridlink;

TEST_CASE("case names") {
  CHECK(case_name(Case::kA1) == "A1");
  CHECK(case_name(Case::kA3_II) == "A3(II)");
  CHECK(case_name(Case::kA4_1) == "A4_1");
  CHECK(case_name(Case::kB4_2) == "B4_2");
}

TEST_CASE("classification examples") {
  // Two terminals per quadrant and no pair inside a quadrant.
  const Pairing a1{{{{1, 1}, {6, 6}}, {{1, 6}, {6, 1}}, {{2, 2}, {5, 5}}, {{2, 5}, {5, 2}}}};
  CHECK(classify(a1).which == Case::kA1);
  // All eight terminals in one quadrant is the heaviest pair-inside case.
  const Pairing b1{{{{1, 1}, {1, 2}}, {{1, 3}, {2, 1}}, {{2, 2}, {2, 3}}, {{3, 1}, {3, 2}}}};
  CHECK(classify(b1).which == Case::kB1);
  const Pairing b{{{{1, 1}, {2, 2}}, {{1, 6}, {6, 1}}, {{3, 4}, {5, 5}}, {{4, 3}, {6, 6}}}};
  const auto lb = classify(b);
  CHECK(case_name(lb.which)[0] == 'B');
}

TEST_CASE("classification is total and follows the q-diagram") {
  const auto g = make_grid(6, 6);
  std::map<std::string, int> seen;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    const auto p = sample_pairing(g, 4, 21, i);
    const auto label = classify(p);
    const auto name = case_name(label.which);
    ++seen[name];
    CHECK((name[0] == 'B') == build_qdiagram(p).has_loop());
    // The letter is a property of the diagram, so every image agrees on it.
    for (Symmetry s : kAllSymmetries) {
      CHECK(case_name(classify(apply_symmetry(s, p, 6, 6)).which)[0] == name[0]);
    }
  }
  CHECK(seen.size() >= 12);
}

TEST_CASE("constructive output is a valid linkage") {
  const auto g = make_grid(6, 6);
  int fallbacks = 0;
  for (std::uint64_t i = 0; i < 1500; ++i) {
    const auto p = sample_pairing(g, 4, 7, i);
    const auto r = solve_constructive(p);
    REQUIRE(r.status == SolveStatus::kSat);
    CHECK(validate_linkage(g, p, r.linkage).empty());
    CHECK(r.label.which == classify(p).which);
    if (r.fallback) {
      ++fallbacks;
      CHECK_FALSE(r.failure.empty());
      continue;
    }
    // The trace pieces of each pair cover its path exactly.
    std::vector<EdgeSet> pieces(4);
    for (const auto& st : r.trace) {
      for (const auto& [pair, path] : st.paths) {
        if (path.vertices.size() <= 1) continue;
        const auto e = path_edges(g, path);
        REQUIRE(e);
        CHECK_FALSE(e->intersects(pieces[pair]));
        pieces[pair] |= *e;
      }
    }
    for (int j = 0; j < 4; ++j) CHECK(pieces[j] == *path_edges(g, r.linkage[j]));
  }
  CHECK(fallbacks < 15);
}

TEST_CASE("counterexample instance") {
  const auto p = counterexample_instance({6, 1}, {6, 6});
  CHECK(p.size() == 5);
  CHECK(p.pairs[0].s == Vertex{1, 1});
  CHECK(p.pairs[0].t == Vertex{6, 1});
  CHECK(p.pairs[4].t == Vertex{6, 6});
  int in_nw = 0;
  for (const auto& pr : p.pairs) {
    for (Vertex v : {pr.s, pr.t}) in_nw += quadrant_of(v) == QuadrantId::kNW;
  }
  CHECK(in_nw == 8);
  CHECK_THROWS_AS(counterexample_instance({1, 1}, {6, 6}), InputError);
  CHECK_THROWS_AS(counterexample_instance({6, 6}, {6, 6}), InputError);
  CHECK_THROWS_AS(counterexample_instance({7, 1}, {6, 6}), InputError);
}

TEST_CASE("three pairs in a four-row strip") {
  const auto sub = make_grid(4, 4);
  const Pairing nested{{{{1, 1}, {4, 4}}, {{1, 2}, {4, 3}}, {{2, 1}, {3, 4}}}};
  const auto l = route_in_subgrid_3pp(sub, nested);
  CHECK(validate_linkage(sub, nested, l).empty());
  const auto wide = make_grid(4, 6);
  const Pairing corners{{{{1, 1}, {4, 6}}, {{1, 6}, {4, 1}}, {{2, 3}, {3, 4}}}};
  CHECK(validate_linkage(wide, corners, route_in_subgrid_3pp(wide, corners)).empty());
  CHECK_THROWS_AS(route_in_subgrid_3pp(make_grid(3, 5), corners), InputError);
  CHECK_THROWS_AS(route_in_subgrid_3pp(sub, Pairing{{{{1, 1}, {4, 4}}}}), InputError);
}
