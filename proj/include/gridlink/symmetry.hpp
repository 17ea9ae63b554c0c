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

#ifndef GRIDLINK_SYMMETRY_HPP_
#define GRIDLINK_SYMMETRY_HPP_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

// Dihedral group of the rectangle/square. Rotations are clockwise.
enum class Symmetry : std::uint8_t {
  kIdentity,
  kRot90,
  kRot180,
  kRot270,
  kFlipRows,  // top <-> bottom
  kFlipCols,  // left <-> right
  kTranspose,
  kAntiTranspose,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::kIdentity,  Symmetry::kRot90,    Symmetry::kRot180,    Symmetry::kRot270,
    Symmetry::kFlipRows,  Symmetry::kFlipCols, Symmetry::kTranspose, Symmetry::kAntiTranspose};

std::string_view symmetry_name(Symmetry s);
// False for the four elements that swap rows and columns when rows != cols.
bool symmetry_valid(Symmetry s, int rows, int cols);
std::vector<Symmetry> symmetry_group(int rows, int cols);

// compose(a, b) applies b first, then a.
Symmetry compose(Symmetry a, Symmetry b);
Symmetry inverse(Symmetry s);

// Maps are defined on the unmodified rows x cols grid. The image of a
// vertex lives on the image grid, which is cols x rows for the transposing
// elements (only valid on square grids). Invalid elements throw InputError.
Vertex apply_symmetry(Symmetry s, Vertex v, int rows, int cols);
TerminalPair apply_symmetry(Symmetry s, const TerminalPair& p, int rows, int cols);
Pairing apply_symmetry(Symmetry s, const Pairing& p, int rows, int cols);
Path apply_symmetry(Symmetry s, const Path& p, int rows, int cols);
Linkage apply_symmetry(Symmetry s, const Linkage& l, int rows, int cols);
EdgeSet apply_symmetry(Symmetry s, const EdgeSet& e, int rows, int cols);
VertexSet apply_symmetry(Symmetry s, const VertexSet& v, int rows, int cols);

// Orbit key: every pair sorted by vertex id, the pairs sorted. Two pairings
// that differ only in pair order or s/t orientation share a key.
using PairingKey = std::vector<std::uint8_t>;
PairingKey pairing_key(const Pairing& p, int cols);

struct CanonicalForm {
  PairingKey key;          // minimum over the group
  Symmetry symmetry;       // first element attaining it
  int orbit_size = 1;      // distinct keys in the orbit
};
CanonicalForm canonical_form(const Pairing& p, int rows, int cols);
// Sorted form of p: pairs oriented s < t (by id) and sorted.
Pairing sorted_pairing(const Pairing& p, int cols);

}  // namespace gridlink

#endif  // GRIDLINK_SYMMETRY_HPP_
