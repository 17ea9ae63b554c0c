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


#ifndef GRIDLINK_CERTIFY_HPP_
#define GRIDLINK_CERTIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridlink/campaign.hpp"
#include "gridlink/lemmas.hpp"
#include "gridlink/version.hpp"

namespace gridlink {

struct CertifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t samples = 100'000;  // prop32
  int placements = 10;              // prop31
  CampaignMethod method = CampaignMethod::kOracle;  // prop32
  int jobs = 0;
  SolveLimits limits;
};

struct Refutation {
  int rows = 0;
  int cols = 0;
  Pairing pairing;
  SolveStatus status = SolveStatus::kTimeout;
  std::uint64_t nodes = 0;
  std::string engine;
};

// One certificate per claim. Campaign reports and refutations form the
// body; `holds` is the verdict, `complete` is false when a budget ran out.
struct Certificate {
  std::string claim_id;
  std::string statement;
  std::string version = GRIDLINK_VERSION_STRING;
  std::uint64_t seed = 0;
  std::vector<CampaignReport> campaigns;
  std::vector<Refutation> refutations;
  std::optional<LemmaCertificate> lemma;
  std::vector<std::string> notes;
  bool holds = false;
  bool complete = true;
  double wall_seconds = 0.0;
};

// pp22 pp33 pp44 pp45 pp55 prop31 prop32 and lemma-<name> for every lemma.
std::vector<std::string> claim_ids();
// Throws InputError for an unknown id.
std::string claim_statement(std::string_view id);
Certificate certify_theorem(std::string_view id, const CertifyOptions& opt = {});
// Single-placement refutation of the corner instance, in prop31's format.
Certificate certify_counterexample(Vertex t1, Vertex t5, const SolveLimits& limits = {});

// Header, body and footer; everything but the footer's wall time is a pure
// function of the claim, options and version.
std::string certificate_text(const Certificate& c);

// First UNSAT k-pairing of g found by the witness search: pairings inside
// the two leftmost columns in enumeration order, then seeded samples.
std::optional<Refutation> find_unsat_witness(const GridGraph& g, int k, std::uint64_t seed,
                                             const SolveLimits& limits,
                                             std::uint64_t max_samples = 200'000);

// The ten (by default) seeded (t1, t5) placements, starting with (6,1), (6,6).
std::vector<std::pair<Vertex, Vertex>> counterexample_placements(int count, std::uint64_t seed);

Refutation refute(const GridGraph& g, const Pairing& p, const SolveLimits& limits);

}  // namespace gridlink

#endif  // GRIDLINK_CERTIFY_HPP_
