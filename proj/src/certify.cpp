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


#include "gridlink/certify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gridlink/constructive.hpp"
#include "gridlink/enumerate.hpp"
#include "gridlink/instance_io.hpp"

namespace gridlink {

namespace {

struct PpClaim {
  const char* id;
  int rows;
  int cols;
  int pp;
};

constexpr PpClaim kPpClaims[] = {
    {"pp22", 2, 2, 1}, {"pp33", 3, 3, 2}, {"pp44", 4, 4, 3}, {"pp45", 4, 5, 3}, {"pp55", 5, 5, 3},
};

// Exhaustive search for the first UNSAT instance stays cheap below this
// many pairings; larger spaces go through the witness search.
constexpr std::uint64_t kExhaustiveWitnessSpace = 100'000;

const PpClaim* find_pp(std::string_view id) {
  for (const auto& c : kPpClaims) {
    if (id == c.id) return &c;
  }
  return nullptr;
}

std::string pp_statement(const PpClaim& c) {
  return "pp(G(" + std::to_string(c.rows) + "," + std::to_string(c.cols) + ")) = " + std::to_string(c.pp);
}

CampaignOptions exhaustive_options(const CertifyOptions& opt) {
  CampaignOptions co;
  co.mode = CampaignMode::kExhaustive;
  co.method = CampaignMethod::kOracle;
  co.seed = opt.seed;
  co.jobs = opt.jobs;
  co.limits = opt.limits;
  return co;
}

void certify_pp(Certificate& cert, const PpClaim& c, const CertifyOptions& opt) {
  const auto g = make_grid(c.rows, c.cols);
  cert.holds = true;
  for (int k = 1; k <= c.pp; ++k) {
    auto rep = is_k_path_pairable(g, k, exhaustive_options(opt));
    cert.holds = cert.holds && rep.all_sat() && rep.invalid == 0;
    cert.complete = cert.complete && rep.complete;
    cert.campaigns.push_back(std::move(rep));
  }
  const int k = c.pp + 1;
  std::optional<Refutation> witness;
  const auto space = pairing_count(g.vertex_count(), k);
  if (space && *space <= kExhaustiveWitnessSpace) {
    auto rep = is_k_path_pairable(g, k, exhaustive_options(opt));
    cert.complete = cert.complete && (rep.unsat > 0 || rep.complete);
    if (!rep.unsat_witnesses.empty()) witness = refute(g, rep.unsat_witnesses.front(), opt.limits);
    cert.campaigns.push_back(std::move(rep));
  } else {
    witness = find_unsat_witness(g, k, opt.seed, opt.limits);
  }
  if (!witness) {
    cert.notes.push_back("no UNSAT witness found for k = " + std::to_string(k));
    cert.holds = false;
    cert.complete = false;
    return;
  }
  cert.holds = cert.holds && witness->status == SolveStatus::kUnsat;
  cert.refutations.push_back(std::move(*witness));
}

void certify_prop31(Certificate& cert, const CertifyOptions& opt) {
  const auto& g = make_grid(6, 6);
  cert.holds = true;
  for (const auto& [t1, t5] : counterexample_placements(opt.placements, opt.seed)) {
    auto r = refute(g, counterexample_instance(t1, t5), opt.limits);
    cert.holds = cert.holds && r.status == SolveStatus::kUnsat;
    cert.complete = cert.complete && r.status != SolveStatus::kTimeout;
    cert.refutations.push_back(std::move(r));
  }
}

void certify_prop32(Certificate& cert, const CertifyOptions& opt) {
  CampaignOptions co;
  co.mode = CampaignMode::kSampled;
  co.method = opt.method;
  co.samples = opt.samples;
  co.seed = opt.seed;
  co.jobs = opt.jobs;
  co.limits = opt.limits;
  auto rep = is_k_path_pairable(make_grid(6, 6), 4, co);
  cert.holds = rep.all_sat() && rep.invalid == 0 && rep.unclassified == 0 && rep.disagreements == 0;
  cert.complete = rep.complete;
  cert.campaigns.push_back(std::move(rep));
}

std::string campaign_line(const CampaignReport& r) {
  std::ostringstream os;
  os << "campaign grid " << r.rows << "x" << r.cols << " k " << r.k << " mode " << mode_name(r.mode)
     << " method " << method_name(r.method) << " space " << r.space_size << " instances " << r.instances
     << " canonical " << r.canonical_representatives << " covered " << r.covered << " sat " << r.sat
     << " unsat " << r.unsat << " timeout " << r.timeout << " validated " << r.validated << " invalid "
     << r.invalid;
  if (r.method == CampaignMethod::kBoth) os << " disagreements " << r.disagreements;
  if (r.stopped_early) os << " stopped_early";
  os << "\n";
  for (const auto& [label, cs] : r.cases) {
    os << "  case " << label << " instances " << cs.instances << " fallbacks " << cs.fallbacks << "\n";
  }
  if (!r.cases.empty()) os << "  unclassified " << r.unclassified << "\n";
  return os.str();
}

void indented(std::ostringstream& os, const std::string& text) {
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) os << "  " << line << "\n";
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : kPpClaims) ids.emplace_back(c.id);
  ids.emplace_back("prop31");
  ids.emplace_back("prop32");
  for (const auto& n : lemma_names()) ids.push_back("lemma-" + n);
  return ids;
}

std::string claim_statement(std::string_view id) {
  if (const auto* c = find_pp(id)) return pp_statement(*c);
  if (id == "prop31") {
    return "G(6,6) is not 5-path-pairable: the corner instance with eight terminals in NW has no "
           "weak linkage for any placement of t1, t5";
  }
  if (id == "prop32") return "G(6,6) is 4-path-pairable";
  if (id.substr(0, 6) == "lemma-") return std::string(lemma_claim(id.substr(6)));
  throw InputError("unknown claim: " + std::string(id));
}

Certificate certify_theorem(std::string_view id, const CertifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.claim_id = std::string(id);
  cert.statement = claim_statement(id);
  cert.seed = opt.seed;
  if (const auto* c = find_pp(id)) {
    certify_pp(cert, *c, opt);
  } else if (id == "prop31") {
    certify_prop31(cert, opt);
  } else if (id == "prop32") {
    certify_prop32(cert, opt);
  } else {
    cert.lemma = certify_lemma(id.substr(6), opt.limits, opt.jobs);
    cert.holds = cert.lemma->violations == 0 && cert.lemma->complete;
    cert.complete = cert.lemma->complete;
  }
  cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

Certificate certify_counterexample(Vertex t1, Vertex t5, const SolveLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.claim_id = "prop31";
  cert.statement = claim_statement("prop31");
  auto r = refute(make_grid(6, 6), counterexample_instance(t1, t5), limits);
  cert.holds = r.status == SolveStatus::kUnsat;
  cert.complete = r.status != SolveStatus::kTimeout;
  cert.refutations.push_back(std::move(r));
  cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << "# gridlink certificate\n";
  os << "claim " << c.claim_id << "\n";
  os << "statement " << c.statement << "\n";
  os << "version " << c.version << "\n";
  os << "seed " << c.seed << "\n";
  os << "body\n";
  for (const auto& r : c.campaigns) {
    os << campaign_line(r);
    for (const auto& w : r.unsat_witnesses) {
      os << "  unsat witness\n";
      indented(os, format_instance(r.rows, r.cols, w));
    }
    for (const auto& w : r.timeout_instances) {
      os << "  timeout instance\n";
      indented(os, format_instance(r.rows, r.cols, w));
    }
  }
  for (const auto& r : c.refutations) {
    os << "refutation grid " << r.rows << "x" << r.cols << " status " << status_name(r.status) << " engine "
       << r.engine << " nodes " << r.nodes << "\n";
    indented(os, format_instance(r.rows, r.cols, r.pairing));
  }
  if (c.lemma) {
    os << "lemma " << c.lemma->name << " configurations " << c.lemma->configurations << " violations "
       << c.lemma->violations << "\n";
    for (const auto& f : c.lemma->failures) os << "  violation " << f << "\n";
    for (const auto& n : c.lemma->notes) os << "  note " << n << "\n";
  }
  for (const auto& n : c.notes) os << "note " << n << "\n";
  os << "verdict " << (c.holds ? "holds" : "fails") << "\n";
  os << "footer\n";
  os << "complete " << (c.complete ? "true" : "false") << "\n";
  os << "wall_seconds " << c.wall_seconds << "\n";
  return os.str();
}

Refutation refute(const GridGraph& g, const Pairing& p, const SolveLimits& limits) {
  SolveOptions so;
  so.limits = limits;
  const auto rep = find_weak_linkage(g, p, so);
  Refutation r;
  r.rows = g.rows();
  r.cols = g.cols();
  r.pairing = p;
  r.status = rep.status;
  r.nodes = rep.nodes;
  r.engine = std::string(engine_name(rep.engine_used));
  return r;
}

std::optional<Refutation> find_unsat_witness(const GridGraph& g, int k, std::uint64_t seed,
                                             const SolveLimits& limits, std::uint64_t max_samples) {
  std::optional<Refutation> found;
  if (g.cols() >= 2 && 2 * g.rows() >= 2 * k) {
    // Same coordinates in g: the strip is g's first two columns.
    for_each_pairing(make_grid(g.rows(), 2), k, [&](const Pairing& p) {
      auto r = refute(g, p, limits);
      if (r.status != SolveStatus::kUnsat) return true;
      found = std::move(r);
      return false;
    });
    if (found) return found;
  }
  for (std::uint64_t i = 0; i < max_samples; ++i) {
    auto r = refute(g, sample_pairing(g, k, seed, i), limits);
    if (r.status == SolveStatus::kUnsat) return r;
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> counterexample_placements(int count, std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (count <= 0) return out;
  out.emplace_back(Vertex{6, 1}, Vertex{6, 6});
  const auto fixed = counterexample_instance({6, 1}, {6, 6});
  std::vector<Vertex> free;
  for (int r = 1; r <= 6; ++r) {
    for (int c = 1; c <= 6; ++c) {
      const Vertex v{r, c};
      bool used = false;
      for (int i = 0; i < 5; ++i) {
        const auto& tp = fixed.pairs[i];
        used = used || tp.s == v || (i != 0 && i != 4 && tp.t == v);
      }
      if (!used) free.push_back(v);
    }
  }
  const std::uint64_t n = free.size();
  for (std::uint64_t i = 0; static_cast<int>(out.size()) < count && i < 64 * n * n; ++i) {
    const std::uint64_t x = splitmix64(seed ^ splitmix64(i));
    const Vertex t1 = free[x % n];
    const Vertex t5 = free[(x / n) % n];
    if (t1 == t5) continue;
    const std::pair<Vertex, Vertex> pl{t1, t5};
    if (std::find(out.begin(), out.end(), pl) == out.end()) out.push_back(pl);
  }
  return out;
}

}  // namespace gridlink
