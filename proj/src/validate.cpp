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

#include "gridlink/validate.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace gridlink {

std::string_view violation_name(ViolationKind k) {
  static constexpr std::array<std::string_view, 8> kNames = {
      "path-count", "empty-path",    "wrong-endpoints", "not-a-vertex",
      "not-adjacent", "missing-edge", "repeated-edge",  "shared-edge"};
  return kNames[static_cast<int>(k)];
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << violation_name(kind);
  if (pair >= 0) os << " pair " << pair + 1;
  if (other_pair >= 0) os << " and pair " << other_pair + 1;
  if (step >= 0) os << " step " << step;
  if (u.row > 0) os << ' ' << to_string(u);
  if (v.row > 0) os << '-' << to_string(v);
  return os.str();
}

namespace {

std::vector<Violation> validate_impl(const GridGraph& g, const Pairing& p, const Linkage& l,
                                     const EdgeSet* allowed) {
  std::vector<Violation> out;
  if (l.size() != p.pairs.size()) {
    out.push_back({ViolationKind::kPathCount});
    return out;
  }
  std::vector<int> owner(g.full_edge_count(), -1);
  for (int i = 0; i < p.size(); ++i) {
    const auto& path = l[i].vertices;
    if (path.empty()) {
      out.push_back({ViolationKind::kEmptyPath, i});
      continue;
    }
    const auto& pr = p.pairs[i];
    if (!((path.front() == pr.s && path.back() == pr.t) ||
          (path.front() == pr.t && path.back() == pr.s))) {
      out.push_back({ViolationKind::kWrongEndpoints, i, -1, -1, path.front(), path.back()});
    }
    bool vertices_ok = true;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (!g.has_vertex(path[k])) {
        out.push_back({ViolationKind::kNotAVertex, i, -1, static_cast<int>(k), path[k]});
        vertices_ok = false;
      }
    }
    if (!vertices_ok) continue;
    std::vector<bool> mine(g.full_edge_count(), false);
    for (std::size_t k = 1; k < path.size(); ++k) {
      const Vertex a = path[k - 1];
      const Vertex b = path[k];
      const auto e = g.edge_between(a, b);
      if (!e) {
        // Merged vertices may be adjacent without being unit-adjacent.
        const bool unit = std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
        out.push_back({unit ? ViolationKind::kMissingEdge : ViolationKind::kNotAdjacent, i, -1,
                       static_cast<int>(k), a, b});
        continue;
      }
      if (allowed != nullptr && !allowed->test(*e)) {
        out.push_back({ViolationKind::kMissingEdge, i, -1, static_cast<int>(k), a, b});
        continue;
      }
      if (mine[*e]) {
        out.push_back({ViolationKind::kRepeatedEdge, i, -1, static_cast<int>(k), a, b});
        continue;
      }
      mine[*e] = true;
      if (owner[*e] >= 0) {
        out.push_back({ViolationKind::kSharedEdge, owner[*e], i, static_cast<int>(k), a, b});
      } else {
        owner[*e] = i;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> validate_linkage(const GridGraph& g, const Pairing& p, const Linkage& l) {
  return validate_impl(g, p, l, nullptr);
}

std::vector<Violation> validate_linkage(const GridGraph& g, const Pairing& p, const Linkage& l,
                                        const EdgeSet& allowed) {
  return validate_impl(g, p, l, &allowed);
}

EdgeSet linkage_edges(const GridGraph& g, const Linkage& l) {
  EdgeSet out;
  for (const auto& path : l) {
    for (std::size_t k = 1; k < path.vertices.size(); ++k) {
      if (auto e = g.edge_between(path.vertices[k - 1], path.vertices[k])) out.set(*e);
    }
  }
  return out;
}

}  // namespace gridlink
