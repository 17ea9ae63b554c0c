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

#include "gridlink/symmetry.hpp"

#include <algorithm>
#include <set>

namespace gridlink {
namespace {

// Signed permutation matrix acting on centered coordinates
// x = 2r - (rows+1), y = 2c - (cols+1).
struct Mat {
  int a, b, c, d;  // [[a, b], [c, d]]
  friend constexpr bool operator==(const Mat&, const Mat&) = default;
};

constexpr std::array<Mat, 8> kMats = {{
    {1, 0, 0, 1},
    {0, 1, -1, 0},
    {-1, 0, 0, -1},
    {0, -1, 1, 0},
    {-1, 0, 0, 1},
    {1, 0, 0, -1},
    {0, 1, 1, 0},
    {0, -1, -1, 0},
}};

constexpr Mat mat(Symmetry s) { return kMats[static_cast<int>(s)]; }

bool swaps_axes(Symmetry s) { return mat(s).a == 0; }

void require_valid(Symmetry s, int rows, int cols) {
  if (!symmetry_valid(s, rows, cols)) {
    throw InputError(std::string("symmetry ") + std::string(symmetry_name(s)) +
                     " is not defined on a non-square grid");
  }
}

}  // namespace

std::string_view symmetry_name(Symmetry s) {
  static constexpr std::array<std::string_view, 8> kNames = {
      "id", "rot90", "rot180", "rot270", "flip-rows", "flip-cols", "transpose", "antitranspose"};
  return kNames[static_cast<int>(s)];
}

bool symmetry_valid(Symmetry s, int rows, int cols) { return rows == cols || !swaps_axes(s); }

std::vector<Symmetry> symmetry_group(int rows, int cols) {
  std::vector<Symmetry> out;
  for (auto s : kAllSymmetries) {
    if (symmetry_valid(s, rows, cols)) out.push_back(s);
  }
  return out;
}

Symmetry compose(Symmetry a, Symmetry b) {
  const Mat x = mat(a);
  const Mat y = mat(b);
  const Mat m{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
  for (int i = 0; i < 8; ++i) {
    if (kMats[i] == m) return static_cast<Symmetry>(i);
  }
  throw std::logic_error("compose: not a group element");
}

Symmetry inverse(Symmetry s) {
  for (auto t : kAllSymmetries) {
    if (compose(s, t) == Symmetry::kIdentity) return t;
  }
  throw std::logic_error("inverse: not a group element");
}

Vertex apply_symmetry(Symmetry s, Vertex v, int rows, int cols) {
  require_valid(s, rows, cols);
  const Mat m = mat(s);
  const int x = 2 * v.row - (rows + 1);
  const int y = 2 * v.col - (cols + 1);
  const int nx = m.a * x + m.b * y;
  const int ny = m.c * x + m.d * y;
  const int nrows = swaps_axes(s) ? cols : rows;
  const int ncols = swaps_axes(s) ? rows : cols;
  return {(nx + nrows + 1) / 2, (ny + ncols + 1) / 2};
}

TerminalPair apply_symmetry(Symmetry s, const TerminalPair& p, int rows, int cols) {
  return {apply_symmetry(s, p.s, rows, cols), apply_symmetry(s, p.t, rows, cols)};
}

Pairing apply_symmetry(Symmetry s, const Pairing& p, int rows, int cols) {
  Pairing out;
  out.pairs.reserve(p.pairs.size());
  for (const auto& pr : p.pairs) out.pairs.push_back(apply_symmetry(s, pr, rows, cols));
  return out;
}

Path apply_symmetry(Symmetry s, const Path& p, int rows, int cols) {
  Path out;
  out.vertices.reserve(p.vertices.size());
  for (auto v : p.vertices) out.vertices.push_back(apply_symmetry(s, v, rows, cols));
  return out;
}

Linkage apply_symmetry(Symmetry s, const Linkage& l, int rows, int cols) {
  Linkage out;
  out.reserve(l.size());
  for (const auto& p : l) out.push_back(apply_symmetry(s, p, rows, cols));
  return out;
}

EdgeSet apply_symmetry(Symmetry s, const EdgeSet& e, int rows, int cols) {
  const GridGraph from(rows, cols);
  const GridGraph to = swaps_axes(s) ? GridGraph(cols, rows) : from;
  EdgeSet out;
  e.for_each([&](int idx) {
    const auto [u, v] = from.grid_edge(idx);
    out.set(to.grid_edge_index(apply_symmetry(s, u, rows, cols), apply_symmetry(s, v, rows, cols)));
  });
  return out;
}

VertexSet apply_symmetry(Symmetry s, const VertexSet& vs, int rows, int cols) {
  const int ncols = swaps_axes(s) ? rows : cols;
  VertexSet out;
  vs.for_each([&](int id) {
    const Vertex v{id / cols + 1, id % cols + 1};
    const Vertex w = apply_symmetry(s, v, rows, cols);
    out.set((w.row - 1) * ncols + (w.col - 1));
  });
  return out;
}

PairingKey pairing_key(const Pairing& p, int cols) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(p.pairs.size());
  for (const auto& pr : p.pairs) {
    const int a = (pr.s.row - 1) * cols + (pr.s.col - 1);
    const int b = (pr.t.row - 1) * cols + (pr.t.col - 1);
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  PairingKey key;
  key.reserve(pairs.size() * 2);
  for (auto [a, b] : pairs) {
    key.push_back(static_cast<std::uint8_t>(a));
    key.push_back(static_cast<std::uint8_t>(b));
  }
  return key;
}

CanonicalForm canonical_form(const Pairing& p, int rows, int cols) {
  CanonicalForm best{pairing_key(p, cols), Symmetry::kIdentity, 1};
  std::set<PairingKey> orbit{best.key};
  for (auto s : symmetry_group(rows, cols)) {
    if (s == Symmetry::kIdentity) continue;
    // Valid elements on a rectangle keep the dimensions.
    PairingKey k = pairing_key(apply_symmetry(s, p, rows, cols), cols);
    if (k < best.key) {
      best.key = k;
      best.symmetry = s;
    }
    orbit.insert(std::move(k));
  }
  best.orbit_size = static_cast<int>(orbit.size());
  return best;
}

Pairing sorted_pairing(const Pairing& p, int cols) {
  const PairingKey key = pairing_key(p, cols);
  Pairing out;
  for (std::size_t i = 0; i + 1 < key.size(); i += 2) {
    out.pairs.push_back({{key[i] / cols + 1, key[i] % cols + 1},
                         {key[i + 1] / cols + 1, key[i + 1] % cols + 1}});
  }
  return out;
}

}  // namespace gridlink
