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

#ifndef GRIDLINK_CAMPAIGN_HPP_
#define GRIDLINK_CAMPAIGN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/oracle.hpp"

namespace gridlink {

enum class CampaignMode : std::uint8_t { kExhaustive, kSampled };

enum class CampaignMethod : std::uint8_t {
  kOracle,
  // Constructive solver on 6x6 with k = 4; every output is validated.
  kConstructive,
  // Both, comparing SAT status.
  kBoth,
};

struct CampaignOptions {
  CampaignMode mode = CampaignMode::kExhaustive;
  CampaignMethod method = CampaignMethod::kOracle;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  int jobs = 0;  // 0 = hardware concurrency
  bool canonical = true;
  // Exhaustive mode stops at the first UNSAT instance (in stream order).
  bool stop_at_unsat = true;
  std::size_t max_witnesses = 10;
  SolveLimits limits;
};

struct CaseStats {
  std::uint64_t instances = 0;
  std::uint64_t fallbacks = 0;
};

struct CampaignReport {
  int rows = 0;
  int cols = 0;
  int k = 0;
  CampaignMode mode = CampaignMode::kExhaustive;
  CampaignMethod method = CampaignMethod::kOracle;
  std::uint64_t space_size = 0;        // all pairings of the grid
  std::uint64_t instances = 0;         // instances examined = sat + unsat + timeout
  std::uint64_t canonical_representatives = 0;
  std::uint64_t covered = 0;           // pairings represented (orbit sizes)
  std::uint64_t sat = 0;
  std::uint64_t unsat = 0;
  std::uint64_t timeout = 0;
  std::uint64_t validated = 0;         // SAT witnesses that passed validation
  std::uint64_t invalid = 0;
  std::uint64_t disagreements = 0;     // constructive vs oracle status
  std::uint64_t unclassified = 0;
  std::map<std::string, CaseStats> cases;
  std::vector<Pairing> unsat_witnesses;
  std::vector<Pairing> timeout_instances;
  std::uint64_t seed = 0;
  bool stopped_early = false;
  bool complete = true;  // no timeouts
  double wall_seconds = 0.0;

  // Every examined instance SAT and nothing left undecided.
  bool all_sat() const { return unsat == 0 && timeout == 0 && !stopped_early; }
};

// Per-instance evaluation used by the campaign driver.
struct InstanceOutcome {
  SolveStatus status = SolveStatus::kTimeout;
  bool valid = true;
  bool disagree = false;
  std::string case_label;
  bool fallback = false;
};
using InstanceEvaluator = std::function<InstanceOutcome(const GridGraph&, const Pairing&)>;

CampaignReport is_k_path_pairable(const GridGraph& g, int k, const CampaignOptions& opt);

// Runs `eval` over the given instances with the campaign's threading and
// reduction rules; used by the lemma and theorem certificates too.
CampaignReport run_campaign(const GridGraph& g, int k, const std::vector<Pairing>& instances,
                            const std::vector<int>& orbit_sizes, const CampaignOptions& opt,
                            const InstanceEvaluator& eval);

struct PpNumber {
  int pp = 0;
  bool complete = true;  // false when a budget ran out before deciding
  std::vector<CampaignReport> reports;
};
PpNumber pp_number(const GridGraph& g, int kmax, const CampaignOptions& opt = {});

int resolve_jobs(int requested);
std::string campaign_json(const CampaignReport& r);
std::string_view mode_name(CampaignMode m);
std::string_view method_name(CampaignMethod m);

}  // namespace gridlink

#endif  // GRIDLINK_CAMPAIGN_HPP_
