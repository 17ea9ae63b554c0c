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

#include "gridlink/grid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gridlink {

std::string to_string(Vertex v) {
  std::ostringstream os;
  os << '(' << v.row << ',' << v.col << ')';
  return os.str();
}

GridGraph::GridGraph(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw InputError("grid dimensions must be positive");
  }
  if (rows * cols > kMaxVertices || full_edge_count() > kMaxEdges) {
    throw InputError("grid too large: at most 64 vertices and 128 edges are supported");
  }
  rebuild();
}

GridGraph make_grid(int rows, int cols) { return GridGraph(rows, cols); }

int GridGraph::grid_edge_index(Vertex u, Vertex v) const {
  if (!in_bounds(u) || !in_bounds(v)) {
    throw InputError("edge endpoint off grid: " + to_string(u) + "-" + to_string(v));
  }
  if (v < u) std::swap(u, v);
  if (u.row == v.row && v.col == u.col + 1) {
    return (u.row - 1) * (cols_ - 1) + (u.col - 1);
  }
  if (u.col == v.col && v.row == u.row + 1) {
    return rows_ * (cols_ - 1) + (u.row - 1) * cols_ + (u.col - 1);
  }
  throw InputError("not a grid edge: " + to_string(u) + "-" + to_string(v));
}

std::pair<Vertex, Vertex> GridGraph::grid_edge(int index) const {
  if (index < 0 || index >= full_edge_count()) {
    throw InputError("edge index out of range");
  }
  const int horizontal = rows_ * (cols_ - 1);
  if (index < horizontal) {
    const int i = index / (cols_ - 1) + 1;
    const int j = index % (cols_ - 1) + 1;
    return {{i, j}, {i, j + 1}};
  }
  const int rest = index - horizontal;
  const int i = rest / cols_ + 1;
  const int j = rest % cols_ + 1;
  return {{i, j}, {i + 1, j}};
}

void GridGraph::rebuild() {
  const int n = rows_ * cols_;
  rep_.assign(n, 0);
  for (int i = 0; i < n; ++i) rep_[i] = i;
  vertices_.clear();
  for (int i = 0; i < n; ++i) {
    if (!removed_vertices_.test(i)) vertices_.set(i);
  }
  EdgeSet contracted;
  for (const auto& m : merges_) {
    const int from = id(m.from);
    int into = id(m.into);
    while (rep_[into] != into) into = rep_[into];
    for (int i = 0; i < n; ++i) {
      if (rep_[i] == from) rep_[i] = into;
    }
    vertices_.reset(from);
    contracted.set(grid_edge_index(m.from, m.into));
  }
  edges_.clear();
  ends_.assign(full_edge_count(), {-1, -1});
  adj_.assign(n, {});
  for (int e = 0; e < full_edge_count(); ++e) {
    if (removed_edges_.test(e) || contracted.test(e)) continue;
    const auto [u, v] = grid_edge(e);
    const int a = rep_[id(u)];
    const int b = rep_[id(v)];
    if (removed_vertices_.test(id(u)) || removed_vertices_.test(id(v)) || a == b) continue;
    edges_.set(e);
    ends_[e] = {a, b};
    adj_[a].push_back({e, b});
    adj_[b].push_back({e, a});
  }
}

std::pair<Vertex, Vertex> GridGraph::endpoints(int edge) const {
  if (edge < 0 || edge >= full_edge_count() || !edges_.test(edge)) {
    throw InputError("not an active edge");
  }
  return {vertex(ends_[edge].first), vertex(ends_[edge].second)};
}

std::optional<int> GridGraph::edge_between(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  const int b = id(v);
  for (const auto& inc : adj_[id(u)]) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

GridGraph GridGraph::without_edges(const EdgeSet& removed) const {
  GridGraph g = *this;
  g.removed_edges_ |= removed;
  g.rebuild();
  return g;
}

GridGraph GridGraph::without_vertices(const VertexSet& removed) const {
  GridGraph g = *this;
  g.removed_vertices_ |= removed;
  g.rebuild();
  return g;
}

GridGraph GridGraph::with_merge(Vertex from, Vertex into) const {
  if (!has_vertex(from) || !has_vertex(into)) {
    throw InputError("merge endpoints must be vertices of the graph");
  }
  const int e = grid_edge_index(from, into);
  if (!edges_.test(e)) {
    throw InputError("merge requires an existing edge " + to_string(from) + "-" + to_string(into));
  }
  GridGraph g = *this;
  g.merges_.push_back({from, into});
  g.rebuild();
  return g;
}

VertexSet rect(const GridGraph& g, int r1, int r2, int c1, int c2) {
  VertexSet out;
  for (int r = std::max(r1, 1); r <= std::min(r2, g.rows()); ++r) {
    for (int c = std::max(c1, 1); c <= std::min(c2, g.cols()); ++c) {
      out.set(g.id({r, c}));
    }
  }
  return out;
}

VertexSet row_set(const GridGraph& g, int row) { return rect(g, row, row, 1, g.cols()); }
VertexSet col_set(const GridGraph& g, int col) { return rect(g, 1, g.rows(), col, col); }

VertexSet vertex_set(const GridGraph& g, std::span<const Vertex> vs) {
  VertexSet out;
  for (auto v : vs) out.set(g.id(v));
  return out;
}

EdgeSet induced_edges(const GridGraph& g, const VertexSet& vs) {
  EdgeSet out;
  g.edges().for_each([&](int e) {
    const auto [u, v] = g.endpoints(e);
    if (vs.test(g.id(u)) && vs.test(g.id(v))) out.set(e);
  });
  return out;
}

EdgeSet boundary_edges(const GridGraph& g, const VertexSet& vs) {
  EdgeSet out;
  g.edges().for_each([&](int e) {
    const auto [u, v] = g.endpoints(e);
    if (vs.test(g.id(u)) != vs.test(g.id(v))) out.set(e);
  });
  return out;
}

void check_pairing(const GridGraph& g, const Pairing& p, bool allow_coincident) {
  std::set<Vertex> seen;
  for (const auto& pr : p.pairs) {
    for (Vertex v : {pr.s, pr.t}) {
      if (!g.has_vertex(v)) {
        throw InputError("terminal " + to_string(v) + " is not a vertex of the grid");
      }
      if (!allow_coincident && !seen.insert(v).second) {
        throw InputError("duplicate terminal " + to_string(v));
      }
    }
  }
}

std::string to_string(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) out += ' ';
    out += to_string(p.vertices[i]);
  }
  return out;
}

Path reversed(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Path joined(const Path& a, const Path& b) {
  if (a.vertices.empty()) return b;
  if (b.vertices.empty()) return a;
  if (a.back() != b.front()) {
    throw std::logic_error("joined: paths do not meet: " + to_string(a) + " | " + to_string(b));
  }
  Path out = a;
  out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  return out;
}

std::optional<EdgeSet> path_edges(const GridGraph& g, const Path& p) {
  EdgeSet out;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    const auto e = g.edge_between(p.vertices[i - 1], p.vertices[i]);
    if (!e || out.test(*e)) return std::nullopt;
    out.set(*e);
  }
  return out;
}

}  // namespace gridlink
