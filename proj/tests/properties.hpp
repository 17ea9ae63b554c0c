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


// Property checks shared by the standalone property suite and the
// acceptance binary. Each returns a verdict and a one-line summary.

#ifndef GRIDLINK_TESTS_PROPERTIES_HPP_
#define GRIDLINK_TESTS_PROPERTIES_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brute_force.hpp"
#include "gridlink/enumerate.hpp"
#include "gridlink/oracle.hpp"
#include "gridlink/symmetry.hpp"

namespace props {

struct Result {
  bool ok = true;
  std::string summary;
};

// Status with pruning on equals status with pruning off, search engine only.
inline Result pruning_equivalence(int rows, int cols, int kmax, std::uint64_t samples,
                                  std::uint64_t seed) {
  using namespace gridlink;
  const auto g = make_grid(rows, cols);
  SolveOptions on;
  on.engine = OracleEngine::kSearch;
  SolveOptions off = on;
  off.pruning = false;
  std::uint64_t checked = 0;
  std::uint64_t mismatched = 0;
  std::uint64_t undecided = 0;
  auto check = [&](const Pairing& p) {
    const auto a = find_weak_linkage(g, p, on).status;
    const auto b = find_weak_linkage(g, p, off).status;
    ++checked;
    if (a == SolveStatus::kTimeout || b == SolveStatus::kTimeout) {
      ++undecided;
    } else if (a != b) {
      ++mismatched;
    }
  };
  for (int k = 1; k <= kmax; ++k) {
    if (samples == 0) {
      for_each_pairing(g, k, [&](const Pairing& p) {
        check(p);
        return true;
      });
    } else {
      for (std::uint64_t i = 0; i < samples; ++i) check(sample_pairing(g, k, seed + k, i));
    }
  }
  std::ostringstream os;
  os << "G(" << rows << ',' << cols << ") k<=" << kmax << ": " << checked << " instances, "
     << mismatched << " mismatches, " << undecided << " undecided";
  return {mismatched == 0 && undecided == 0, os.str()};
}

// SAT status of every grid symmetry image and of the reversed pair order
// equals the status of the original.
inline Result symmetry_invariance(int rows, int cols, int k, std::uint64_t samples, std::uint64_t seed) {
  using namespace gridlink;
  const auto g = make_grid(rows, cols);
  std::uint64_t mismatched = 0;
  std::uint64_t undecided = 0;
  std::uint64_t unsat = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto p = sample_pairing(g, k, seed, i);
    const auto base = find_weak_linkage(g, p).status;
    if (base == SolveStatus::kTimeout) ++undecided;
    if (base == SolveStatus::kUnsat) ++unsat;
    Pairing rev = p;
    std::reverse(rev.pairs.begin(), rev.pairs.end());
    std::vector<Pairing> images{rev};
    for (Symmetry s : symmetry_group(rows, cols)) images.push_back(apply_symmetry(s, p, rows, cols));
    for (const auto& q : images) {
      const auto st = find_weak_linkage(g, q).status;
      if (st == SolveStatus::kTimeout) {
        ++undecided;
      } else if (st != base) {
        ++mismatched;
      }
    }
  }
  std::ostringstream os;
  os << "G(" << rows << ',' << cols << ") k=" << k << ": " << samples << " instances (" << unsat
     << " unsat), " << mismatched << " mismatches, " << undecided << " undecided";
  return {mismatched == 0 && undecided == 0, os.str()};
}

// Pairing counts three ways: the product formula, the library's count and
// an explicit enumeration (library and brute force).
inline Result enumeration_counts(int max_vertices) {
  using namespace gridlink;
  std::uint64_t grids = 0;
  std::uint64_t bad = 0;
  std::ostringstream fail;
  for (int rows = 1; rows <= max_vertices; ++rows) {
    for (int cols = 1; rows * cols <= max_vertices; ++cols) {
      const auto g = make_grid(rows, cols);
      const int n = rows * cols;
      for (int k = 1; 2 * k <= n; ++k) {
        const auto want = brute::pairing_formula(n, k);
        if (want > 2'000'000) continue;
        std::uint64_t listed = 0;
        for_each_pairing(g, k, [&](const Pairing&) {
          ++listed;
          return true;
        });
        std::uint64_t brute_listed = 0;
        brute::each_pairing(rows, cols, k, [&](const Pairing&) { ++brute_listed; });
        ++grids;
        if (pairing_count(n, k) != want || listed != want || brute_listed != want) {
          ++bad;
          fail << " G(" << rows << ',' << cols << ") k=" << k;
        }
      }
    }
  }
  // Known values, and the 6x6 counts used by the sampling campaigns.
  const std::pair<int, int> larger[] = {{36, 4}, {36, 5}, {25, 4}, {64, 3}};
  for (auto [n, k] : larger) {
    ++grids;
    if (pairing_count(n, k) != brute::pairing_formula(n, k)) {
      ++bad;
      fail << " n=" << n << " k=" << k;
    }
  }
  if (brute::pairing_formula(9, 2) != 378 || brute::pairing_formula(16, 3) != 120120) {
    ++bad;
    fail << " spot values";
  }
  std::ostringstream os;
  os << grids << " (grid, k) combinations, " << bad << " mismatches" << fail.str();
  return {bad == 0, os.str()};
}

// Canonical enumeration: orbit sizes sum to the full count and the number
// of representatives matches Burnside's lemma, with fixed points counted by
// brute force on a pair-order-free encoding.
inline Result orbit_counts(int rows, int cols, int k) {
  using namespace gridlink;
  const auto g = make_grid(rows, cols);
  const auto en = enumerate_pairings(g, k, true);
  auto encode = [&](const Pairing& p) {
    std::set<std::pair<int, int>> s;
    for (const auto& pr : p.pairs) {
      const int a = g.id(pr.s);
      const int b = g.id(pr.t);
      s.insert({std::min(a, b), std::max(a, b)});
    }
    return s;
  };
  const auto group = symmetry_group(rows, cols);
  std::uint64_t fixed = 0;
  brute::each_pairing(rows, cols, k, [&](const Pairing& p) {
    const auto e = encode(p);
    for (Symmetry s : group) fixed += encode(apply_symmetry(s, p, rows, cols)) == e;
  });
  const std::uint64_t orbits = fixed / group.size();
  const bool ok = en.orbit_sum == en.total && fixed % group.size() == 0 &&
                  orbits == en.pairings.size();
  std::ostringstream os;
  os << "G(" << rows << ',' << cols << ") k=" << k << ": " << en.pairings.size()
     << " representatives, Burnside " << orbits << ", orbit sum " << en.orbit_sum << " of "
     << en.total;
  return {ok, os.str()};
}

}  // namespace props

#endif  // GRIDLINK_TESTS_PROPERTIES_HPP_
