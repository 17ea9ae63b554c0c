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

#ifndef GRIDLINK_GRID_HPP_
#define GRIDLINK_GRID_HPP_

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridlink/bitset.hpp"

namespace gridlink {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 128;

using EdgeSet = FixedBitSet<2>;
using VertexSet = FixedBitSet<1>;

// Raised for malformed or out-of-range input (bad dimensions, off-grid
// terminals, invalid symmetry for a rectangular grid, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grid position, 1-based, row 1 at the top.
struct Vertex {
  int row = 1;
  int col = 1;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(Vertex v);

struct Incidence {
  int edge = -1;
  int neighbor = -1;  // vertex id
};

// Record of an edge contraction: `from` is merged into `into`.
struct VertexMerge {
  Vertex from;
  Vertex into;
};

// P_rows x P_cols with optional deleted edges, removed vertices and vertex
// merges. Edges keep their canonical index from the full grid; vertices keep
// their full-grid id (row-major). Values are immutable once built.
class GridGraph {
 public:
  GridGraph(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool in_bounds(Vertex v) const {
    return v.row >= 1 && v.row <= rows_ && v.col >= 1 && v.col <= cols_;
  }
  // True when v is a vertex of the (possibly modified) graph.
  bool has_vertex(Vertex v) const { return in_bounds(v) && vertices_.test(id(v)); }

  int id(Vertex v) const { return (v.row - 1) * cols_ + (v.col - 1); }
  Vertex vertex(int id) const { return {id / cols_ + 1, id % cols_ + 1}; }

  // a(b-1) + (a-1)b.
  int full_edge_count() const { return rows_ * (cols_ - 1) + (rows_ - 1) * cols_; }
  // Canonical index of the grid edge between unit-adjacent positions.
  int grid_edge_index(Vertex u, Vertex v) const;
  // Inverse of grid_edge_index; endpoints ordered (smaller first).
  std::pair<Vertex, Vertex> grid_edge(int index) const;

  const EdgeSet& edges() const { return edges_; }
  const VertexSet& vertices() const { return vertices_; }
  int vertex_count() const { return vertices_.count(); }
  int edge_count() const { return edges_.count(); }

  // Endpoints of an active edge after merges.
  std::pair<Vertex, Vertex> endpoints(int edge) const;
  std::optional<int> edge_between(Vertex u, Vertex v) const;
  Vertex representative(Vertex v) const { return vertex(rep_[id(v)]); }
  std::span<const Incidence> incident(int vertex_id) const { return adj_[vertex_id]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[id(v)].size()); }
  const std::vector<VertexMerge>& merges() const { return merges_; }

  GridGraph without_edges(const EdgeSet& removed) const;
  GridGraph without_vertices(const VertexSet& removed) const;
  // Contracts the edge from-into; `from` disappears and its other edges
  // attach to `into`.
  GridGraph with_merge(Vertex from, Vertex into) const;

 private:
  void rebuild();

  int rows_;
  int cols_;
  EdgeSet removed_edges_;
  VertexSet removed_vertices_;
  std::vector<VertexMerge> merges_;
  std::vector<int> rep_;
  EdgeSet edges_;
  VertexSet vertices_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<std::pair<int, int>> ends_;
};

GridGraph make_grid(int rows, int cols);

// Vertices of the rectangle [r1,r2] x [c1,c2] (clipped to the grid).
VertexSet rect(const GridGraph& g, int r1, int r2, int c1, int c2);
VertexSet row_set(const GridGraph& g, int row);
VertexSet col_set(const GridGraph& g, int col);
VertexSet vertex_set(const GridGraph& g, std::span<const Vertex> vs);
// Active edges with both endpoints in vs.
EdgeSet induced_edges(const GridGraph& g, const VertexSet& vs);
// Active edges with exactly one endpoint in vs.
EdgeSet boundary_edges(const GridGraph& g, const VertexSet& vs);

struct TerminalPair {
  Vertex s;
  Vertex t;

  friend constexpr bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

struct Pairing {
  std::vector<TerminalPair> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

// Checks that terminals lie in g and (unless allowed) are pairwise distinct.
void check_pairing(const GridGraph& g, const Pairing& p, bool allow_coincident = false);

// Walk given by its vertex sequence; a single vertex is the empty path.
struct Path {
  std::vector<Vertex> vertices;

  bool trivial() const { return vertices.size() <= 1; }
  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

using Linkage = std::vector<Path>;

std::string to_string(const Path& p);
Path reversed(Path p);
// Appends b to a; b must start where a ends.
Path joined(const Path& a, const Path& b);
// Edge indices of a walk; nullopt if some step is not an edge of g or an
// edge repeats.
std::optional<EdgeSet> path_edges(const GridGraph& g, const Path& p);

}  // namespace gridlink

#endif  // GRIDLINK_GRID_HPP_
