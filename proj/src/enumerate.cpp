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

#include "gridlink/enumerate.hpp"

#include <random>

#include "gridlink/symmetry.hpp"

namespace gridlink {

std::optional<std::uint64_t> pairing_count(int n, int k) {
  if (k < 0 || 2 * k > n) return std::uint64_t{0};
  // Build the count pair by pair: C(n,2) * C(n-2,2) * ... / k!, dividing as
  // we go keeps every intermediate exact.
  unsigned __int128 acc = 1;
  for (int i = 0; i < k; ++i) {
    const int m = n - 2 * i;
    acc = acc * (static_cast<unsigned __int128>(m) * (m - 1) / 2);
    acc /= static_cast<unsigned __int128>(i + 1);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

struct Walker {
  const std::vector<int>& ids;
  const GridGraph& g;
  int k;
  const std::function<bool(const Pairing&)>& f;
  std::vector<bool> used;
  Pairing cur;

  // Returns false to stop.
  bool go(std::size_t min_first) {
    if (cur.size() == k) return f(cur);
    const int left = k - cur.size();
    for (std::size_t a = min_first; a < ids.size(); ++a) {
      if (used[a]) continue;
      // Enough vertices must remain after a for the other pairs.
      if (static_cast<int>(ids.size() - a) < 2 * left) break;
      used[a] = true;
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (used[b]) continue;
        used[b] = true;
        cur.pairs.push_back({g.vertex(ids[a]), g.vertex(ids[b])});
        const bool more = go(a + 1);
        cur.pairs.pop_back();
        used[b] = false;
        if (!more) {
          used[a] = false;
          return false;
        }
      }
      used[a] = false;
    }
    return true;
  }
};

}  // namespace

void for_each_pairing(const GridGraph& g, int k, const std::function<bool(const Pairing&)>& f) {
  std::vector<int> ids;
  g.vertices().for_each([&](int id) { ids.push_back(id); });
  if (k < 0 || 2 * k > static_cast<int>(ids.size())) {
    throw InputError("need 2k <= number of vertices");
  }
  Walker w{ids, g, k, f, std::vector<bool>(ids.size(), false), {}};
  w.go(0);
}

EnumerationResult enumerate_pairings(const GridGraph& g, int k, bool canonical,
                                     std::uint64_t max_items) {
  EnumerationResult out;
  const auto total = pairing_count(g.vertex_count(), k);
  if (!total) throw InputError("pairing count overflows 64 bits");
  out.total = *total;
  if (!canonical && out.total > max_items) {
    throw InputError("refusing to list " + std::to_string(out.total) +
                     " pairings; use canonical mode or sampling");
  }
  // Orbit reduction needs the full grid for the symmetry maps.
  if (canonical && g.vertex_count() != g.rows() * g.cols()) {
    throw InputError("canonical enumeration needs an unmodified grid");
  }
  if (canonical && out.total / 4 > max_items) {
    throw InputError("refusing to enumerate " + std::to_string(out.total) + " pairings");
  }
  for_each_pairing(g, k, [&](const Pairing& p) {
    if (!canonical) {
      out.pairings.push_back(p);
      ++out.orbit_sum;
      return true;
    }
    const auto cf = canonical_form(p, g.rows(), g.cols());
    if (cf.key == pairing_key(p, g.cols())) {
      out.pairings.push_back(p);
      out.orbit_sum += static_cast<std::uint64_t>(cf.orbit_size);
    }
    return true;
  });
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Pairing sample_pairing(const GridGraph& g, int k, std::uint64_t seed, std::uint64_t index) {
  std::vector<int> ids;
  g.vertices().for_each([&](int id) { ids.push_back(id); });
  if (k < 0 || 2 * k > static_cast<int>(ids.size())) {
    throw InputError("need 2k <= number of vertices");
  }
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  // Portable bounded draw (the standard distributions are not specified
  // bit-for-bit across library implementations).
  auto below = [&](std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % n;
  };
  Pairing p;
  for (int i = 0; i < 2 * k; ++i) {
    const auto j = i + below(ids.size() - i);
    std::swap(ids[i], ids[j]);
  }
  for (int i = 0; i < k; ++i) p.pairs.push_back({g.vertex(ids[2 * i]), g.vertex(ids[2 * i + 1])});
  return p;
}

}  // namespace gridlink
