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


// Constructive 4-pair router for the 6x6 grid. An instance is classified by
// its q-diagram, normalized by a grid symmetry and a relabeling of the pairs,
// and routed by composing quadrant lemmas with cycle, row, column and
// subgrid completions. Any step that cannot be carried out hands the
// instance to the oracle, and the result records that it did.

#ifndef GRIDLINK_CONSTRUCTIVE_HPP_
#define GRIDLINK_CONSTRUCTIVE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/oracle.hpp"
#include "gridlink/symmetry.hpp"

namespace gridlink {

enum class Case : std::uint8_t {
  kA1,
  kA2,
  kA3_I,
  kA3_II,
  kA3_III,
  kA3_IV,
  kA3_V,
  kA3_VI,
  kA3_VII,
  kA4_1,
  kA4_2,
  kA4_3,
  kB1,
  kB2,
  kB3,
  kB4_1,
  kB4_2,
};

struct CaseLabel {
  Case which = Case::kA1;
  // Maps the input onto the normalized instance the case description uses.
  Symmetry symmetry = Symmetry::kIdentity;
};

std::string case_name(const CaseLabel& label);
std::string case_name(Case c);

// Total on valid 4-pairings of the 6x6 grid.
CaseLabel classify(const Pairing& p);

struct TraceStep {
  std::string label;  // case name
  std::string step;   // lemma or completion used
  std::vector<std::pair<int, Path>> paths;  // input pair index, piece
};

struct ConstructiveResult {
  SolveStatus status = SolveStatus::kTimeout;
  CaseLabel label;
  bool fallback = false;
  std::string failure;  // why the case construction gave up
  Linkage linkage;      // path i from s_i to t_i
  std::vector<TraceStep> trace;
};

ConstructiveResult solve_constructive(const Pairing& p, const SolveLimits& limits = {});

// Three pairs inside an unmodified P4 x Pk grid (k >= 4) routed by the
// oracle restricted to that grid; throws LemmaViolation if none exists.
Linkage route_in_subgrid_3pp(const GridGraph& sub, const Pairing& p);

// The 5-pair instance with eight terminals packed into the top-left
// quadrant; t1 and t5 are free. Throws InputError on a collision.
Pairing counterexample_instance(Vertex t1, Vertex t5);

}  // namespace gridlink

#endif  // GRIDLINK_CONSTRUCTIVE_HPP_
