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


// Acceptance suite: one PASS/FAIL line per criterion, details indented
// below it. Exit status is non-zero when any criterion fails.
//
// GRIDLINK_JOBS sets the worker count for the campaigns.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gridlink/certify.hpp"
#include "gridlink/constructive.hpp"
#include "gridlink/instance_io.hpp"
#include "gridlink/lemmas.hpp"
#include "properties.hpp"

using namespace gridlink;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& line) {
    pass = pass && ok;
    details.push_back((ok ? "ok    " : "FAIL  ") + line);
  }
  void note(const std::string& line) { details.push_back("      " + line); }
};

std::string vertex_pair(Vertex a, Vertex b) { return to_string(a) + " " + to_string(b); }

Verdict criterion_1() {
  Verdict v;
  CertifyOptions o;
  const auto c = certify_theorem("prop31", o);
  v.expect(c.refutations.size() == 10, std::to_string(c.refutations.size()) + " placements");
  const auto placements = counterexample_placements(10, o.seed);
  v.expect(placements.front() == std::make_pair(Vertex{6, 1}, Vertex{6, 6}),
           "first placement t1=(6,1) t5=(6,6)");
  for (std::size_t i = 0; i < c.refutations.size(); ++i) {
    const auto& r = c.refutations[i];
    v.expect(r.status == SolveStatus::kUnsat,
             "t1,t5 = " + vertex_pair(r.pairing.pairs[0].t, r.pairing.pairs[4].t) + ": " +
                 std::string(status_name(r.status)) + " (" + r.engine + ", " + std::to_string(r.nodes) +
                 " nodes)");
  }
  v.expect(c.holds && c.complete, "certificate verdict " + std::string(c.holds ? "holds" : "fails"));
  return v;
}

Verdict criterion_2() {
  Verdict v;
  CertifyOptions o;
  for (const char* id : {"pp22", "pp33", "pp44", "pp55"}) {
    const auto c = certify_theorem(id, o);
    std::string body;
    for (const auto& r : c.campaigns) {
      body += " k=" + std::to_string(r.k) + ":" + std::to_string(r.instances) + "/" +
              std::to_string(r.covered) + (r.unsat ? " unsat" : " sat");
    }
    for (const auto& r : c.refutations) {
      body += " witness k=" + std::to_string(r.pairing.size()) + " " + std::string(status_name(r.status));
    }
    v.expect(c.holds && c.complete, std::string(id) + " (" + c.statement + "):" + body);
    if (std::string(id) == "pp33" && c.campaigns.size() >= 2) {
      v.expect(c.campaigns[1].covered == 378, "G(3,3) k=2 covers 378 pairings");
    }
    if (std::string(id) == "pp44" && c.campaigns.size() >= 3) {
      v.expect(c.campaigns[2].instances <= 120120 && c.campaigns[2].covered == 120120,
               "G(4,4) k=3: " + std::to_string(c.campaigns[2].instances) +
                   " canonical instances cover 120120");
    }
    for (const auto& r : c.refutations) {
      std::string flat = format_instance(r.rows, r.cols, r.pairing);
      for (auto& ch : flat) ch = ch == '\n' ? ';' : ch;
      v.note("witness " + flat);
    }
  }
  return v;
}

Verdict prop32(CampaignMethod method) {
  Verdict v;
  CertifyOptions o;
  o.samples = 100000;
  o.seed = 7;
  o.method = method;
  const auto c = certify_theorem("prop32", o);
  if (c.campaigns.empty()) {
    v.expect(false, "no campaign");
    return v;
  }
  const auto& r = c.campaigns.front();
  v.expect(r.instances == o.samples, std::to_string(r.instances) + " instances, seed 7");
  v.expect(r.sat == r.instances, std::to_string(r.sat) + " SAT");
  v.expect(r.validated == r.sat && r.invalid == 0,
           std::to_string(r.validated) + " linkages validated, " + std::to_string(r.invalid) + " invalid");
  if (method == CampaignMethod::kConstructive) {
    v.expect(r.unclassified == 0, std::to_string(r.unclassified) + " unclassified");
    std::uint64_t fallbacks = 0;
    for (const auto& [label, cs] : r.cases) {
      fallbacks += cs.fallbacks;
      char rate[32];
      std::snprintf(rate, sizeof rate, "%.4f", cs.instances ? double(cs.fallbacks) / cs.instances : 0.0);
      v.note("case " + label + ": " + std::to_string(cs.instances) + " instances, " +
             std::to_string(cs.fallbacks) + " fallbacks (rate " + rate + ")");
    }
    v.note("fallbacks overall: " + std::to_string(fallbacks));
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", r.wall_seconds);
  v.note(std::string("wall ") + secs + " s");
  return v;
}

Verdict criterion_4() {
  Verdict v;
  for (const auto& name : lemma_names()) {
    const auto c = certify_lemma(name);
    v.expect(c.violations == 0 && c.complete,
             name + ": " + std::to_string(c.configurations) + " configurations, " +
                 std::to_string(c.violations) + " violations");
    for (const auto& f : c.failures) v.note("  " + f);
    if (name == "heavy4") {
      bool rederived = false;
      for (const auto& n : c.notes) rederived = rederived || n == "exceptional shapes re-derived: exactly T1 and T2";
      v.expect(rederived, "heavy4 exceptional shapes re-derived as exactly T1 and T2");
    }
  }
  const std::vector<int> first_two{0, 1};
  v.expect(projection_choices(shape_t1()) == first_two, "T1: only s1 and s2 succeed");
  v.expect(projection_choices(shape_t2()) == first_two, "T2: only s1 and s2 succeed");
  return v;
}

Verdict criterion_6() {
  Verdict v;
  const auto a = props::pruning_equivalence(3, 3, 3, 0, 0);
  v.expect(a.ok, "pruning on/off, every pairing: " + a.summary);
  const auto b = props::symmetry_invariance(4, 4, 4, 1000, 1);
  v.expect(b.ok, "symmetry invariance: " + b.summary);
  const auto c = props::enumeration_counts(12);
  v.expect(c.ok, "enumeration counts: " + c.summary);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "corner instance refuted at 10 placements", criterion_1},
      {2, "small path-pairability numbers", criterion_2},
      {3, "6x6 4-pairings by the oracle, 1e5 samples", [] { return prop32(CampaignMethod::kOracle); }},
      {4, "lemma certification", criterion_4},
      {5, "constructive solver on the same sample", [] { return prop32(CampaignMethod::kConstructive); }},
      {6, "property suites", criterion_6},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s (%.1f s)\n", c.id, c.title, v.pass ? "PASS" : "FAIL", secs);
    for (const auto& d : v.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    all = all && v.pass;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
