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

#include "gridlink/lemmas.hpp"

using namespace gridlink;

namespace {

// Edges of all paths in the canonical 3x3 grid; fails the test on overlap.
EdgeSet disjoint_union(const std::vector<Path>& paths) {
  const auto& g = canon::grid();
  EdgeSet all;
  for (const auto& p : paths) {
    if (p.vertices.size() <= 1) continue;
    const auto e = path_edges(g, p);
    REQUIRE(e);
    CHECK_FALSE(e->intersects(all));
    all |= *e;
  }
  return all;
}

bool on_line(Vertex v, const VertexSet& line) { return line.test(canon::grid().id(v)); }

}  // namespace

TEST_CASE("canonical quadrant") {
  CHECK(canon::line_a().count() == 3);
  CHECK(canon::line_b().count() == 3);
  CHECK(canon::cycle_vertices(0).count() == 1);
  CHECK(canon::cycle_vertices(1).count() == 3);
  CHECK(canon::c1_edges().count() == 2);
  CHECK(canon::q0_edges().count() == 10);
  const auto ne = quad_frame(QuadrantId::kNE);
  CHECK(ne.to_host(canon::kX0) == Vertex{3, 4});
  CHECK(ne.to_host(canon::kX1) == Vertex{2, 5});
  CHECK(ne.to_canon(ne.to_host(Vertex{1, 2})) == Vertex{1, 2});
}

TEST_CASE("crowded quadrant with a designated pair") {
  const std::vector<TerminalPair> pairs{{{1, 1}, {3, 3}}};
  const std::vector<Vertex> singles{{1, 2}, {2, 1}, {2, 2}};
  const auto plan = escape_crowded(CrowdedVariant::k5, pairs, singles);
  REQUIRE(plan);
  REQUIRE(plan->linked.size() == 1);
  CHECK(plan->linked[0].second.front() == Vertex{1, 1});
  CHECK(plan->linked[0].second.back() == Vertex{3, 3});
  CHECK(plan->mating.size() == 3);
  std::vector<Path> all{plan->linked[0].second};
  std::set<Vertex> exits;
  int in_b_only = 0;
  for (const auto& [t, p] : plan->mating) {
    all.push_back(p);
    exits.insert(p.back());
    const bool a = on_line(p.back(), canon::line_a());
    CHECK((a || on_line(p.back(), canon::line_b())));
    if (!a) ++in_b_only;
  }
  CHECK(exits.size() == 3);
  CHECK(in_b_only <= 1);
  disjoint_union(all);
}

TEST_CASE("crowded quadrant with eight terminals") {
  const std::vector<TerminalPair> pairs{{{1, 1}, {2, 2}}, {{1, 2}, {3, 1}}, {{1, 3}, {2, 1}}, {{2, 3}, {3, 2}}};
  const auto plan = escape_crowded(CrowdedVariant::k78, pairs, {});
  REQUIRE(plan);
  CHECK(plan->linked.size() >= 2);
}

TEST_CASE("mating onto the central cycles") {
  const auto both = mate_to_cycles({{1, 1}, {1, 1}}, {0, 0});
  REQUIRE(both);
  REQUIRE(both->size() == 2);
  for (const auto& p : *both) {
    CHECK(p.front() == Vertex{1, 1});
    CHECK(p.back() == canon::kX0);
  }
  const auto e = disjoint_union(*both);
  CHECK_FALSE(e.intersects(canon::c1_edges()));
  const auto trivial = mate_to_cycles({canon::kX0}, {0});
  REQUIRE(trivial);
  CHECK((*trivial)[0].length() == 0);
}

TEST_CASE("framing") {
  const auto ne = quad_frame(QuadrantId::kNE);
  const auto f = build_framing(ne.to_canon({1, 4}), ne.to_canon({1, 6}), 0);
  REQUIRE(f);
  CHECK(ne.to_host(f->apex) == Vertex{3, 4});
  const auto e = disjoint_union({f->feeders[0], f->feeders[1]});
  CHECK_FALSE(e.intersects(canon::c1_edges()));
  const auto f1 = build_framing({1, 1}, {1, 1}, 1);
  REQUIRE(f1);
  CHECK(f1->apex == canon::kX1);
}

TEST_CASE("framing two plus one") {
  const auto r = framing_two_plus_one({1, 1}, {1, 2}, {1, 3});
  REQUIRE(r);
  CHECK(canon::cycle_vertices(1 - r->frame.alpha).test(canon::grid().id(r->third.back())));
  disjoint_union({r->frame.feeders[0], r->frame.feeders[1], r->third});
  // A placement the certificate reports as failing.
  CHECK_FALSE(framing_two_plus_one({1, 2}, {1, 3}, {1, 1}));
}

TEST_CASE("framing with a chosen pair") {
  const auto r = framing_choose_pq({{{1, 1}, {2, 2}, {3, 3}}}, 0, canon::kX0);
  REQUIRE(r);
  CHECK(r->p != r->q);
  CHECK(r->r != r->p);
  const auto z = framing_choose_pq({{{1, 1}, {2, 2}, {3, 3}}}, 1, Vertex{1, 3});
  REQUIRE(z);
  CHECK(z->third.back() == Vertex{1, 3});
}

TEST_CASE("exit matings") {
  const auto r = exit_mating(Adjusted::kQ0, ExitVariant::kDistinct, {{1, 1}, {1, 2}, {1, 3}});
  REQUIRE(r);
  std::set<Vertex> ends;
  for (const auto& p : *r) {
    CHECK(on_line(p.back(), canon::line_a()));
    ends.insert(p.back());
  }
  CHECK(ends.size() == 3);
  const auto lm = exit_mating(Adjusted::kQ0, ExitVariant::kLinkAndMate, {{2, 2}, {2, 2}, {1, 1}});
  REQUIRE(lm);
  CHECK((*lm)[0].length() == 0);
}

TEST_CASE("projection exceptions") {
  CHECK(shape_t1().size() == 3);
  CHECK(shape_t2().size() == 4);
  CHECK(projection_choices(shape_t1()) == std::vector<int>{0, 1});
  CHECK(projection_choices(shape_t2()) == std::vector<int>{0, 1});
  CHECK(project_to_A(shape_t1(), 2).refused);
  const auto ok = project_to_A(shape_t1(), 0);
  REQUIRE_FALSE(ok.refused);
  CHECK(ok.link.back() == canon::kB);
  CHECK(ok.mates.size() == 2);
  // Any other three-terminal set allows every choice.
  CHECK(projection_choices({{1, 2}, {2, 1}, {2, 2}}).size() == 3);
}

TEST_CASE("boundary linkage") {
  const auto r = boundary_linkage({2, 2}, {2, 2}, {1, 1}, {1, 2}, Line::kA, Line::kB);
  REQUIRE(r);
  CHECK(r->p1.length() == 0);
  CHECK(on_line(r->mates[0].back(), canon::line_a()));
  CHECK(on_line(r->mates[1].back(), canon::line_b()));
  CHECK(r->mates[0].back() != r->mates[1].back());
  const auto s = boundary_linkage({1, 1}, {2, 2}, {3, 1}, {1, 2}, Line::kA, Line::kA);
  REQUIRE(s);
  CHECK(s->mates[0].length() == 0);
}

TEST_CASE("lemma names") {
  CHECK(lemma_names().size() == 11);
  CHECK_FALSE(lemma_claim("heavy4").empty());
  CHECK_THROWS_AS(certify_lemma("nope"), InputError);
}

// Counts frozen from the certificate runs.
TEST_CASE("lemma certificates") {
  struct Want {
    const char* name;
    std::uint64_t configurations;
    std::uint64_t violations;
  };
  const Want wants[] = {
      {"heavy78", 4725, 0}, {"heavy6", 5040, 0}, {"heavy5", 1260, 0}, {"frame", 486, 0},
      {"12toCa", 504, 4},   {"Caforpq", 336, 0}, {"exit", 1085, 0},   {"heavy4", 1122, 0},
      {"boundary", 6048, 0},
  };
  for (const auto& w : wants) {
    CAPTURE(w.name);
    const auto c = certify_lemma(w.name, {}, 1);
    CHECK(c.configurations == w.configurations);
    CHECK(c.violations == w.violations);
    CHECK(c.complete);
    if (w.violations) CHECK(c.failures.size() == w.violations);
  }
}
