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

// Exact decision procedures for weak linkage (edge-disjoint paths).
//
// Two independent engines are provided:
//
//  * kSearch: backtracking over vertex-simple paths, extending one path
//    head at a time. Optional pruning: every unfinished pair must still be
//    connected in the residual graph, and no vertex may carry more path
//    ends than it has free edges.
//  * kParity: a row sweep over edge labelings. Label every edge with a pair
//    index or 0; a labeling in which the edges of label i have odd degree
//    exactly at s_i and t_i contains an s_i-t_i path per label, and every
//    linkage induces such a labeling. The sweep keeps the residual parity
//    vectors of one row of vertices and merges equal states.
//
// kAuto runs kSearch under a small node budget and hands over to kParity
// when that budget runs out. Both engines only answer UNSAT after
// exhausting their space.

#ifndef GRIDLINK_ORACLE_HPP_
#define GRIDLINK_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class SolveStatus : std::uint8_t { kSat, kUnsat, kTimeout };
std::string_view status_name(SolveStatus s);

struct SolveLimits {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
};

enum class OracleEngine : std::uint8_t { kAuto, kSearch, kParity };
std::string_view engine_name(OracleEngine e);

struct SolveOptions {
  SolveLimits limits;
  OracleEngine engine = OracleEngine::kAuto;
  bool pruning = true;
  // Permits terminals shared between pairs (weak 2-linkage queries).
  bool allow_coincident = false;
  // Restricts routing to these edges of the graph.
  std::optional<EdgeSet> allowed_edges;
  // Node budget of the search phase under kAuto.
  std::uint64_t auto_search_nodes = 20'000;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kTimeout;
  Linkage linkage;  // path i runs from s_i to t_i when SAT
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  SolveLimits limits;
  OracleEngine engine_used = OracleEngine::kSearch;
};

// Throws InputError for off-grid or (without the flag) repeated terminals.
SolveReport find_weak_linkage(const GridGraph& g, const Pairing& p, const SolveOptions& opt = {});

struct Weak2Result {
  bool linked = true;
  std::optional<std::array<Vertex, 4>> failure;  // u1, v1, u2, v2
  std::uint64_t quadruples = 0;
  bool complete = true;  // false if some query timed out
};

// All quadruples of (not necessarily distinct) vertices of g.
Weak2Result check_weakly_2_linked(const GridGraph& g, const SolveLimits& limits = {});

}  // namespace gridlink

#endif  // GRIDLINK_ORACLE_HPP_
