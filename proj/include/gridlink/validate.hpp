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

#ifndef GRIDLINK_VALIDATE_HPP_
#define GRIDLINK_VALIDATE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class ViolationKind : std::uint8_t {
  kPathCount,      // number of paths differs from number of pairs
  kEmptyPath,      // no vertices at all
  kWrongEndpoints,
  kNotAVertex,     // off-grid or removed vertex
  kNotAdjacent,    // consecutive vertices not unit-adjacent
  kMissingEdge,    // adjacent positions but the edge is deleted or unusable
  kRepeatedEdge,   // same edge twice within one path
  kSharedEdge,     // edge used by two different paths
};

std::string_view violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  int pair = -1;        // 0-based
  int other_pair = -1;  // for kSharedEdge
  int step = -1;        // index into the path's vertex list
  Vertex u{0, 0};
  Vertex v{0, 0};

  std::string describe() const;
};

// Empty result means the linkage is valid. When `allowed` is given, paths
// must also stay inside that edge set.
std::vector<Violation> validate_linkage(const GridGraph& g, const Pairing& p, const Linkage& l);
std::vector<Violation> validate_linkage(const GridGraph& g, const Pairing& p, const Linkage& l,
                                        const EdgeSet& allowed);

// Edges used by all paths; assumes a valid linkage.
EdgeSet linkage_edges(const GridGraph& g, const Linkage& l);

}  // namespace gridlink

#endif  // GRIDLINK_VALIDATE_HPP_
