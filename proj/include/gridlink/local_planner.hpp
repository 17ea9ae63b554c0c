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


// Exhaustive planner for small path systems: each demand either links two
// vertices or mates a vertex into a target set. Candidates are the simple
// paths inside the allowed edges, tried in (length, vertex sequence) order,
// so the first plan found is the lexicographically smallest one.

#ifndef GRIDLINK_LOCAL_PLANNER_HPP_
#define GRIDLINK_LOCAL_PLANNER_HPP_

#include <optional>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

struct Demand {
  Vertex from;
  std::optional<Vertex> to;  // link target; otherwise mate into `targets`
  VertexSet targets;
  // Extra edges this demand may not use (on top of the request's mask).
  EdgeSet forbidden;
  // Mate ends that are not acceptable for this demand.
  VertexSet avoid_ends;
};

struct PlanRequest {
  std::vector<Demand> demands;
  EdgeSet allowed;
  // Ends pairwise distinct within each group.
  std::vector<std::vector<int>> distinct;
  // Ends equal within each group.
  std::vector<std::vector<int>> same;
  // At most `cap` of the listed demands may end in `cap_set` (ignored if cap < 0).
  std::vector<int> capped;
  VertexSet cap_set;
  int cap = -1;
};

// Returns one path per demand (paths pairwise edge-disjoint), or nullopt.
std::optional<std::vector<Path>> plan_paths(const GridGraph& g, const PlanRequest& req);

}  // namespace gridlink

#endif  // GRIDLINK_LOCAL_PLANNER_HPP_
