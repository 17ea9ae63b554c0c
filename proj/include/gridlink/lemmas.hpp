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


// Quadrant lemmas as operations. Every operation works in canonical
// coordinates: the quadrant is a 3x3 grid whose row 3 (line A) and column 3
// (line B) face the center of the 6x6 grid, so (3,3) is x0, (2,2) is x1 and
// the 12-cycle runs through (2,3), (2,2), (3,2). QuadFrame maps canonical
// coordinates onto any quadrant of the 6x6 grid, optionally exchanging the
// roles of A and B.

#ifndef GRIDLINK_LEMMAS_HPP_
#define GRIDLINK_LEMMAS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/layout.hpp"
#include "gridlink/oracle.hpp"

namespace gridlink {

class LemmaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace canon {

inline constexpr Vertex kX0{3, 3};
inline constexpr Vertex kX1{2, 2};
inline constexpr Vertex kCorner{1, 1};  // c: the corner off both lines
inline constexpr Vertex kB{2, 3};       // b: middle of line B

const GridGraph& grid();  // the 3x3 grid
VertexSet line_a();
VertexSet line_b();
VertexSet cycle_vertices(int alpha);  // C_alpha inside the quadrant
EdgeSet c1_edges();                    // the two 12-cycle edges at x1
EdgeSet q0_edges();                    // all edges except those of line A

}  // namespace canon

struct QuadFrame {
  QuadrantId q = QuadrantId::kNW;
  Symmetry sym = Symmetry::kIdentity;

  Vertex to_host(Vertex c) const;
  Vertex to_canon(Vertex h) const;
  Path to_host(const Path& p) const;
  bool contains(Vertex h) const { return quadrant(q).contains(h); }
};
QuadFrame quad_frame(QuadrantId q, bool swap_lines = false);

// Optional restrictions used when an operation runs inside a larger
// construction (canonical coordinates).
struct LemmaOptions {
  EdgeSet blocked;
  VertexSet avoid_ends;
};

enum class CrowdedVariant : std::uint8_t { k78, k6, k5 };

struct EscapePlan {
  std::vector<std::pair<int, Path>> linked;  // pair index, path s -> t
  // Terminal index -> path to its exit. Terminals are numbered pairs first
  // (2i for s, 2i+1 for t) and then singles.
  std::vector<std::pair<int, Path>> mating;
  std::vector<Vertex> exits;
};

// Crowded quadrant escape. Variant 5 links pairs[0]; every other terminal
// (including both ends of further pairs) escapes.
std::optional<EscapePlan> escape_crowded(CrowdedVariant v, const std::vector<TerminalPair>& pairs,
                                         const std::vector<Vertex>& singles,
                                         const LemmaOptions& opt = {});

// Mates each s[j] onto C_gamma[j] inside the quadrant, avoiding the 12-cycle
// edges. One or two terminals.
std::optional<std::vector<Path>> mate_to_cycles(const std::vector<Vertex>& s,
                                                const std::vector<int>& gamma,
                                                const LemmaOptions& opt = {});

struct Frame {
  int alpha = 0;
  Vertex apex;
  std::array<Path, 2> feeders;  // feeders[j] runs from s_j to the apex
};

// Framing to C_alpha; the apex is x_alpha when possible, otherwise another
// vertex of C_alpha in the quadrant.
std::optional<Frame> build_framing(Vertex s1, Vertex s2, int alpha, const LemmaOptions& opt = {});

struct FramePlusOne {
  Frame frame;
  Path third;  // from s_r onto C_beta, beta = 1 - alpha
};
std::optional<FramePlusOne> framing_two_plus_one(Vertex sp, Vertex sq, Vertex sr,
                                                 std::optional<int> alpha = std::nullopt,
                                                 const LemmaOptions& opt = {});

struct ChosenFrame {
  int p = 0;  // indices into the input triple
  int q = 1;
  int r = 2;  // the third terminal
  Frame frame;
  Path third;
};
// variant 0: framing to C0, third onto C1. variant 1: framing to C1, third to z.
std::optional<ChosenFrame> framing_choose_pq(const std::array<Vertex, 3>& s, int variant, Vertex z,
                                             const LemmaOptions& opt = {});

enum class ExitVariant : std::uint8_t { kAdjusted, kLinkAndMate, kDistinct };
// kAdjusted: three distinct vertices of h (one of Q1..Q4) mate into A.
// kLinkAndMate: h = Q0, terminals {s1, t1, s2}; returns {P1, mating of s2}.
// kDistinct: h = Q0, three terminals into three distinct vertices of A.
std::optional<std::vector<Path>> exit_mating(Adjusted h, ExitVariant v,
                                             const std::vector<Vertex>& terminals,
                                             const LemmaOptions& opt = {});

struct Projection {
  bool refused = true;
  Path link;                 // from s to b
  std::vector<Path> mates;   // remaining terminals in input order, into A
};
// T: up to four distinct terminals; s_index selects the one linked to b.
Projection project_to_A(const std::vector<Vertex>& T, int s_index, const LemmaOptions& opt = {});
// Indices of T for which project_to_A succeeds.
std::vector<int> projection_choices(const std::vector<Vertex>& T, const LemmaOptions& opt = {});

// The two exceptional shapes, listed in label order s1, s2, ...
const std::vector<Vertex>& shape_t1();
const std::vector<Vertex>& shape_t2();

enum class Line : std::uint8_t { kA, kB };
struct BoundaryPlan {
  Path p1;
  std::array<Path, 2> mates;
};
std::optional<BoundaryPlan> boundary_linkage(Vertex s1, Vertex t1, Vertex s2, Vertex s3, Line psi2,
                                             Line psi3, const LemmaOptions& opt = {});

// Certification ------------------------------------------------------------

struct LemmaCertificate {
  std::string name;
  std::string claim;
  std::uint64_t configurations = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> failures;  // first few violating configurations
  std::vector<std::string> notes;
  bool complete = true;
  double seconds = 0.0;
};

const std::vector<std::string>& lemma_names();
std::string_view lemma_claim(std::string_view name);
// Throws InputError for an unknown name.
LemmaCertificate certify_lemma(std::string_view name, const SolveLimits& limits = {}, int jobs = 0);

}  // namespace gridlink

#endif  // GRIDLINK_LEMMAS_HPP_
