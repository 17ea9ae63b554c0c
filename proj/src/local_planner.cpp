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


#include "gridlink/local_planner.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridlink {

namespace {

constexpr std::size_t kMaxCandidates = 2'000'000;

struct Candidate {
  Path path;
  EdgeSet edges;
  int end = 0;
};

void walk(const GridGraph& g, const EdgeSet& allowed, const Demand& d, std::vector<int>& stack,
          EdgeSet& used, VertexSet& seen, std::vector<Candidate>& out) {
  const int cur = stack.back();
  const Vertex cv = g.vertex(cur);
  const bool is_end = d.to ? cv == *d.to : (d.targets.test(cur) && !d.avoid_ends.test(cur));
  if (is_end) {
    Candidate c;
    for (int id : stack) c.path.vertices.push_back(g.vertex(id));
    c.edges = used;
    c.end = cur;
    out.push_back(std::move(c));
    if (out.size() > kMaxCandidates) throw std::length_error("planner candidate limit exceeded");
    if (d.to) return;
  }
  for (const auto& inc : g.incident(cur)) {
    if (!allowed.test(inc.edge) || seen.test(inc.neighbor)) continue;
    seen.set(inc.neighbor);
    used.set(inc.edge);
    stack.push_back(inc.neighbor);
    walk(g, allowed, d, stack, used, seen, out);
    stack.pop_back();
    used.reset(inc.edge);
    seen.reset(inc.neighbor);
  }
}

std::vector<Candidate> candidates(const GridGraph& g, const EdgeSet& allowed, const Demand& d) {
  std::vector<Candidate> out;
  if (!g.has_vertex(d.from)) return out;
  EdgeSet mask = allowed;
  mask -= d.forbidden;
  const int start = g.id(g.representative(d.from));
  std::vector<int> stack{start};
  EdgeSet used;
  VertexSet seen;
  seen.set(start);
  walk(g, mask, d, stack, used, seen, out);
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.path.vertices.size() != b.path.vertices.size()) {
      return a.path.vertices.size() < b.path.vertices.size();
    }
    return a.path.vertices < b.path.vertices;
  });
  return out;
}

class Search {
 public:
  Search(const PlanRequest& req, std::vector<std::vector<Candidate>> cands)
      : req_(req), cands_(std::move(cands)), choice_(cands_.size(), -1) {
    for (int c : req_.capped) capped_.push_back(c);
  }

  bool run(std::size_t i, const EdgeSet& used) {
    if (i == cands_.size()) return true;
    const auto& list = cands_[i];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const auto& c = list[k];
      if (c.edges.intersects(used)) continue;
      choice_[i] = static_cast<int>(k);
      if (consistent(i) && lookahead(i, used | c.edges) && run(i + 1, used | c.edges)) return true;
    }
    choice_[i] = -1;
    return false;
  }

  std::vector<Path> paths() const {
    std::vector<Path> out;
    for (std::size_t i = 0; i < cands_.size(); ++i) out.push_back(cands_[i][choice_[i]].path);
    return out;
  }

 private:
  int end(std::size_t i) const { return cands_[i][choice_[i]].end; }

  bool consistent(std::size_t i) const {
    auto in = [&](const std::vector<int>& grp) {
      return std::find(grp.begin(), grp.end(), static_cast<int>(i)) != grp.end();
    };
    for (const auto& grp : req_.distinct) {
      if (!in(grp)) continue;
      for (int j : grp) {
        if (j != static_cast<int>(i) && choice_[j] >= 0 && end(j) == end(i)) return false;
      }
    }
    for (const auto& grp : req_.same) {
      if (!in(grp)) continue;
      for (int j : grp) {
        if (j != static_cast<int>(i) && choice_[j] >= 0 && end(j) != end(i)) return false;
      }
    }
    if (req_.cap >= 0 && in(capped_)) {
      int n = 0;
      for (int j : capped_) {
        if (choice_[j] >= 0 && req_.cap_set.test(end(j))) ++n;
      }
      if (n > req_.cap) return false;
    }
    return true;
  }

  // Every later demand still has an edge-compatible candidate.
  bool lookahead(std::size_t i, const EdgeSet& used) const {
    for (std::size_t j = i + 1; j < cands_.size(); ++j) {
      bool ok = false;
      for (const auto& c : cands_[j]) {
        if (!c.edges.intersects(used)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  const PlanRequest& req_;
  std::vector<std::vector<Candidate>> cands_;
  std::vector<int> choice_;
  std::vector<int> capped_;
};

}  // namespace

std::optional<std::vector<Path>> plan_paths(const GridGraph& g, const PlanRequest& req) {
  EdgeSet allowed = req.allowed;
  allowed &= g.edges();
  std::vector<std::vector<Candidate>> cands;
  for (const auto& d : req.demands) {
    cands.push_back(candidates(g, allowed, d));
    if (cands.back().empty()) return std::nullopt;
  }
  Search s(req, std::move(cands));
  if (!s.run(0, EdgeSet{})) return std::nullopt;
  return s.paths();
}

}  // namespace gridlink
