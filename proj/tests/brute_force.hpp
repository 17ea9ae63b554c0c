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


// Brute-force weak linkage search for tiny grids, used to check the solver.
// Enumerates every simple s-t path per pair as an edge mask and looks for
// pairwise disjoint choices. Shares nothing with the library beyond the
// plain data types.

#ifndef GRIDLINK_TESTS_BRUTE_FORCE_HPP_
#define GRIDLINK_TESTS_BRUTE_FORCE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "gridlink/grid.hpp"

namespace brute {

struct Grid {
  int rows;
  int cols;

  int id(gridlink::Vertex v) const { return (v.row - 1) * cols + (v.col - 1); }
  // Horizontal edges first, row-major; then vertical edges.
  int edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    const int r = a / cols;
    const int c = a % cols;
    if (b == a + 1) return r * (cols - 1) + c;
    return rows * (cols - 1) + r * cols + c;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    const int r = v / cols;
    const int c = v % cols;
    if (r > 0) out.push_back(v - cols);
    if (r + 1 < rows) out.push_back(v + cols);
    if (c > 0) out.push_back(v - 1);
    if (c + 1 < cols) out.push_back(v + 1);
    return out;
  }
};

inline std::vector<std::uint64_t> simple_paths(const Grid& g, int s, int t) {
  std::vector<std::uint64_t> out;
  if (s == t) {
    out.push_back(0);
    return out;
  }
  std::vector<bool> seen(g.rows * g.cols, false);
  std::function<void(int, std::uint64_t)> dfs = [&](int v, std::uint64_t mask) {
    if (v == t) {
      out.push_back(mask);
      return;
    }
    seen[v] = true;
    for (int w : g.neighbors(v)) {
      if (!seen[w]) dfs(w, mask | (std::uint64_t{1} << g.edge(v, w)));
    }
    seen[v] = false;
  };
  dfs(s, 0);
  return out;
}

// True when the pairing has a weak linkage in the full rows x cols grid.
inline bool linkable(int rows, int cols, const gridlink::Pairing& p) {
  const Grid g{rows, cols};
  std::vector<std::vector<std::uint64_t>> options;
  for (const auto& tp : p.pairs) options.push_back(simple_paths(g, g.id(tp.s), g.id(tp.t)));
  std::function<bool(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t used) {
    if (i == options.size()) return true;
    for (auto m : options[i]) {
      if ((m & used) == 0 && go(i + 1, used | m)) return true;
    }
    return false;
  };
  return go(0, 0);
}

// Every set of k disjoint pairs on rows x cols, each exactly once.
inline void each_pairing(int rows, int cols, int k, const std::function<void(const gridlink::Pairing&)>& f) {
  const int n = rows * cols;
  std::vector<bool> used(n, false);
  gridlink::Pairing cur;
  auto vtx = [&](int id) { return gridlink::Vertex{id / cols + 1, id % cols + 1}; };
  std::function<void(int)> go = [&](int from) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (int a = from; a < n; ++a) {
      if (used[a]) continue;
      used[a] = true;
      for (int b = a + 1; b < n; ++b) {
        if (used[b]) continue;
        used[b] = true;
        cur.pairs.push_back({vtx(a), vtx(b)});
        go(a + 1);
        cur.pairs.pop_back();
        used[b] = false;
      }
      used[a] = false;
    }
  };
  go(0);
}

// n! / ((n-2k)! 2^k k!) in exact integer steps.
inline std::uint64_t pairing_formula(int n, int k) {
  if (2 * k > n) return 0;
  std::uint64_t num = 1;
  for (int i = 0; i < 2 * k; ++i) num *= static_cast<std::uint64_t>(n - i);
  for (int i = 0; i < k; ++i) num /= 2;
  for (int i = 2; i <= k; ++i) num /= static_cast<std::uint64_t>(i);
  return num;
}

}  // namespace brute

#endif  // GRIDLINK_TESTS_BRUTE_FORCE_HPP_
