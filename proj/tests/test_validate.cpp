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

#include "gridlink/symmetry.hpp"
#include "gridlink/validate.hpp"

using namespace gridlink;

namespace {

Path P(std::initializer_list<Vertex> vs) { return Path{std::vector<Vertex>(vs)}; }

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  for (const auto& v : vs) {
    if (v.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("single pair on an edge") {
  const auto g = make_grid(6, 6);
  const Pairing p{{{{1, 1}, {1, 2}}}};
  CHECK(validate_linkage(g, p, {P({{1, 1}, {1, 2}})}).empty());
}

TEST_CASE("shared edge is reported") {
  const auto g = make_grid(6, 6);
  const Pairing p{{{{3, 2}, {3, 5}}, {{2, 3}, {4, 4}}}};
  const Linkage l{P({{3, 2}, {3, 3}, {3, 4}, {3, 5}}), P({{2, 3}, {3, 3}, {3, 4}, {4, 4}})};
  const auto vs = validate_linkage(g, p, l);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::kSharedEdge);
  CHECK(vs[0].u == Vertex{3, 3});
  CHECK(vs[0].v == Vertex{3, 4});
  CHECK(vs[0].describe().find("(3,3)") != std::string::npos);
}

TEST_CASE("crossing at a vertex is allowed") {
  const auto g = make_grid(6, 6);
  const Pairing p{{{{3, 2}, {3, 4}}, {{2, 3}, {4, 3}}}};
  const Linkage l{P({{3, 2}, {3, 3}, {3, 4}}), P({{2, 3}, {3, 3}, {4, 3}})};
  CHECK(validate_linkage(g, p, l).empty());
}

TEST_CASE("malformed linkages") {
  const auto g = make_grid(3, 3);
  const Pairing p{{{{1, 1}, {1, 3}}}};
  CHECK(has_kind(validate_linkage(g, p, {}), ViolationKind::kPathCount));
  CHECK(has_kind(validate_linkage(g, p, {Path{}}), ViolationKind::kEmptyPath));
  CHECK(has_kind(validate_linkage(g, p, {P({{1, 1}, {1, 2}})}), ViolationKind::kWrongEndpoints));
  CHECK(has_kind(validate_linkage(g, p, {P({{1, 1}, {2, 2}, {1, 3}})}), ViolationKind::kNotAdjacent));
  CHECK(has_kind(validate_linkage(g, p, {P({{1, 1}, {0, 1}, {1, 3}})}), ViolationKind::kNotAVertex));
  CHECK(has_kind(validate_linkage(g, p, {P({{1, 1}, {1, 2}, {1, 1}, {1, 2}, {1, 3}})}),
                 ViolationKind::kRepeatedEdge));
  EdgeSet cut;
  cut.set(g.grid_edge_index({1, 1}, {1, 2}));
  const auto h = g.without_edges(cut);
  CHECK(has_kind(validate_linkage(h, p, {P({{1, 1}, {1, 2}, {1, 3}})}), ViolationKind::kMissingEdge));
  CHECK(validate_linkage(h, p, {P({{1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}})}).empty());
}

TEST_CASE("restricted edge set") {
  const auto g = make_grid(3, 3);
  const Pairing p{{{{1, 1}, {1, 3}}}};
  const auto allowed = induced_edges(g, row_set(g, 2) | row_set(g, 1)) - induced_edges(g, row_set(g, 1));
  CHECK(has_kind(validate_linkage(g, p, {P({{1, 1}, {1, 2}, {1, 3}})}, allowed), ViolationKind::kMissingEdge));
  EdgeSet with_row1 = allowed | induced_edges(g, row_set(g, 1));
  CHECK(validate_linkage(g, p, {P({{1, 1}, {1, 2}, {1, 3}})}, with_row1).empty());
}

TEST_CASE("validation outcome is invariant under symmetries") {
  const auto g = make_grid(6, 6);
  const Pairing p{{{{3, 2}, {3, 5}}, {{2, 3}, {4, 4}}}};
  const Linkage bad{P({{3, 2}, {3, 3}, {3, 4}, {3, 5}}), P({{2, 3}, {3, 3}, {3, 4}, {4, 4}})};
  const Linkage good{P({{3, 2}, {3, 3}, {3, 4}, {3, 5}}), P({{2, 3}, {2, 4}, {3, 4}, {4, 4}})};
  for (Symmetry s : kAllSymmetries) {
    const auto sp = apply_symmetry(s, p, 6, 6);
    CHECK(validate_linkage(g, sp, apply_symmetry(s, good, 6, 6)).empty());
    CHECK(validate_linkage(g, sp, apply_symmetry(s, bad, 6, 6)).size() == 1);
  }
}

TEST_CASE("linkage edges") {
  const auto g = make_grid(3, 3);
  const Linkage l{P({{1, 1}, {1, 2}, {2, 2}}), P({{3, 3}, {3, 2}})};
  CHECK(linkage_edges(g, l).count() == 3);
}
