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

#ifndef GRIDLINK_ENUMERATE_HPP_
#define GRIDLINK_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

// n! / ((n-2k)! 2^k k!), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> pairing_count(int n, int k);

// Calls f for every set of k disjoint pairs over the vertices of g, each
// exactly once: pairs ordered by their smaller endpoint (vertex id) and each
// pair oriented s < t. Stops early when f returns false.
void for_each_pairing(const GridGraph& g, int k, const std::function<bool(const Pairing&)>& f);

struct EnumerationResult {
  std::vector<Pairing> pairings;
  std::uint64_t total = 0;       // pairings in the full space
  std::uint64_t orbit_sum = 0;   // sum of orbit sizes of the returned ones
};

// canonical=false returns every pairing; canonical=true one representative
// (the minimum key) per orbit under the grid's symmetry group. Refuses
// (InputError) when the list would exceed max_items.
EnumerationResult enumerate_pairings(const GridGraph& g, int k, bool canonical,
                                     std::uint64_t max_items = 5'000'000);

// Deterministic seeded sampling: sample i depends only on (seed, i). The 2k
// terminals are drawn uniformly without replacement and paired in draw
// order, which is uniform over all pairings.
Pairing sample_pairing(const GridGraph& g, int k, std::uint64_t seed, std::uint64_t index);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace gridlink

#endif  // GRIDLINK_ENUMERATE_HPP_
