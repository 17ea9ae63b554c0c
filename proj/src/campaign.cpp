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

#include "gridlink/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "json.hpp"

#include "gridlink/constructive.hpp"
#include "gridlink/enumerate.hpp"
#include "gridlink/instance_io.hpp"
#include "gridlink/validate.hpp"

namespace gridlink {

std::string_view mode_name(CampaignMode m) {
  return m == CampaignMode::kExhaustive ? "exhaustive" : "sampled";
}

std::string_view method_name(CampaignMethod m) {
  switch (m) {
    case CampaignMethod::kOracle: return "oracle";
    case CampaignMethod::kConstructive: return "constructive";
    case CampaignMethod::kBoth: return "both";
  }
  return "?";
}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GRIDLINK_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

InstanceOutcome oracle_outcome(const GridGraph& g, const Pairing& p, const SolveLimits& limits) {
  SolveOptions so;
  so.limits = limits;
  const auto rep = find_weak_linkage(g, p, so);
  InstanceOutcome out;
  out.status = rep.status;
  if (rep.status == SolveStatus::kSat) out.valid = validate_linkage(g, p, rep.linkage).empty();
  return out;
}

InstanceEvaluator make_evaluator(CampaignMethod method, const SolveLimits& limits) {
  if (method == CampaignMethod::kOracle) {
    return [limits](const GridGraph& g, const Pairing& p) { return oracle_outcome(g, p, limits); };
  }
  return [method, limits](const GridGraph& g, const Pairing& p) {
    const auto res = solve_constructive(p, limits);
    InstanceOutcome out;
    out.status = res.status;
    out.case_label = case_name(res.label);
    out.fallback = res.fallback;
    if (res.status == SolveStatus::kSat) out.valid = validate_linkage(g, p, res.linkage).empty();
    if (method == CampaignMethod::kBoth && res.status != SolveStatus::kSat) {
      // The oracle only runs when the constructive side did not deliver.
      const auto o = oracle_outcome(g, p, limits);
      out.disagree = o.status != res.status;
    }
    return out;
  };
}

}  // namespace

CampaignReport run_campaign(const GridGraph& g, int k, const std::vector<Pairing>& instances,
                            const std::vector<int>& orbit_sizes, const CampaignOptions& opt,
                            const InstanceEvaluator& eval) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.rows = g.rows();
  rep.cols = g.cols();
  rep.k = k;
  rep.mode = opt.mode;
  rep.method = opt.method;
  rep.seed = opt.seed;

  const std::size_t n = instances.size();
  std::vector<InstanceOutcome> outcomes(n);
  std::vector<std::uint8_t> done(n, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_unsat{n};
  constexpr std::size_t kChunk = 16;
  const bool stop = opt.mode == CampaignMode::kExhaustive && opt.stop_at_unsat;

  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        if (stop && i > first_unsat.load()) return;
        outcomes[i] = eval(g, instances[i]);
        done[i] = 1;
        if (stop && outcomes[i].status == SolveStatus::kUnsat) {
          std::size_t cur = first_unsat.load();
          while (i < cur && !first_unsat.compare_exchange_weak(cur, i)) {
          }
        }
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(resolve_jobs(opt.jobs), static_cast<int>(n / kChunk) + 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Reduce over the deterministic prefix: with early stopping everything up
  // to the first UNSAT index has been evaluated.
  const std::size_t limit = stop ? std::min(n, first_unsat.load() + 1) : n;
  rep.stopped_early = limit < n;
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& o = outcomes[i];
    ++rep.instances;
    rep.covered += orbit_sizes.empty() ? 1 : static_cast<std::uint64_t>(orbit_sizes[i]);
    switch (o.status) {
      case SolveStatus::kSat:
        ++rep.sat;
        if (o.valid) {
          ++rep.validated;
        } else {
          ++rep.invalid;
        }
        break;
      case SolveStatus::kUnsat:
        ++rep.unsat;
        if (rep.unsat_witnesses.size() < opt.max_witnesses) rep.unsat_witnesses.push_back(instances[i]);
        break;
      case SolveStatus::kTimeout:
        ++rep.timeout;
        if (rep.timeout_instances.size() < opt.max_witnesses) rep.timeout_instances.push_back(instances[i]);
        break;
    }
    if (o.disagree) ++rep.disagreements;
    if (!o.case_label.empty()) {
      auto& cs = rep.cases[o.case_label];
      ++cs.instances;
      if (o.fallback) ++cs.fallbacks;
      if (o.case_label == "unclassified") ++rep.unclassified;
    }
  }
  rep.complete = rep.timeout == 0;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

CampaignReport is_k_path_pairable(const GridGraph& g, int k, const CampaignOptions& opt) {
  if (k < 1 || 2 * k > g.vertex_count()) throw InputError("need 1 <= k and 2k <= |V|");
  if (opt.method != CampaignMethod::kOracle && (g.rows() != 6 || g.cols() != 6 || k != 4)) {
    throw InputError("the constructive method covers 4 pairs on the 6x6 grid only");
  }
  std::vector<Pairing> instances;
  std::vector<int> orbits;
  std::uint64_t space = 0;
  std::uint64_t reps = 0;
  if (opt.mode == CampaignMode::kExhaustive) {
    auto en = enumerate_pairings(g, k, opt.canonical);
    space = en.total;
    instances = std::move(en.pairings);
    if (opt.canonical) {
      reps = instances.size();
      for (const auto& p : instances) orbits.push_back(canonical_form(p, g.rows(), g.cols()).orbit_size);
    }
  } else {
    space = pairing_count(g.vertex_count(), k).value_or(0);
    instances.reserve(opt.samples);
    for (std::uint64_t i = 0; i < opt.samples; ++i) instances.push_back(sample_pairing(g, k, opt.seed, i));
  }
  auto rep = run_campaign(g, k, instances, orbits, opt, make_evaluator(opt.method, opt.limits));
  rep.space_size = space;
  rep.canonical_representatives = reps;
  return rep;
}

PpNumber pp_number(const GridGraph& g, int kmax, const CampaignOptions& opt) {
  PpNumber out;
  CampaignOptions o = opt;
  o.mode = CampaignMode::kExhaustive;
  o.method = CampaignMethod::kOracle;
  for (int k = 1; k <= kmax && 2 * k <= g.vertex_count(); ++k) {
    auto rep = is_k_path_pairable(g, k, o);
    const bool sat = rep.all_sat();
    const bool undecided = rep.unsat == 0 && rep.timeout > 0;
    out.reports.push_back(std::move(rep));
    if (undecided) {
      out.complete = false;
      return out;
    }
    if (!sat) return out;
    out.pp = k;
  }
  return out;
}

std::string campaign_json(const CampaignReport& r) {
  nlohmann::ordered_json j;
  j["grid"] = {r.rows, r.cols};
  j["k"] = r.k;
  j["mode"] = mode_name(r.mode);
  j["method"] = method_name(r.method);
  j["seed"] = r.seed;
  j["space_size"] = r.space_size;
  j["instances"] = r.instances;
  j["canonical_representatives"] = r.canonical_representatives;
  j["covered"] = r.covered;
  j["sat"] = r.sat;
  j["unsat"] = r.unsat;
  j["timeout"] = r.timeout;
  j["validated"] = r.validated;
  j["invalid"] = r.invalid;
  if (r.method == CampaignMethod::kBoth) j["disagreements"] = r.disagreements;
  if (!r.cases.empty()) {
    nlohmann::ordered_json cases;
    for (const auto& [label, cs] : r.cases) {
      const double rate = cs.instances ? static_cast<double>(cs.fallbacks) / cs.instances : 0.0;
      cases[label] = {{"instances", cs.instances}, {"fallbacks", cs.fallbacks}, {"fallback_rate", rate}};
    }
    j["cases"] = cases;
    j["unclassified"] = r.unclassified;
  }
  j["result"] = r.all_sat();
  j["stopped_early"] = r.stopped_early;
  j["complete"] = r.complete;
  auto list = [&](const std::vector<Pairing>& ps) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& p : ps) a.push_back(format_instance(r.rows, r.cols, p));
    return a;
  };
  j["unsat_witnesses"] = list(r.unsat_witnesses);
  j["timeout_instances"] = list(r.timeout_instances);
  j["wall_seconds"] = r.wall_seconds;
  return j.dump(2);
}

}  // namespace gridlink
