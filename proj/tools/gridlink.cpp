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


// gridlink command-line tool. Links only the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gridlink/gridlink.h"

namespace {

constexpr int kExitUsage = 64;

// Owns a string returned by the library.
struct Text {
  char* s = nullptr;
  ~Text() { gl_string_free(s); }
};

struct Instance {
  gl_instance* p = nullptr;
  ~Instance() { gl_instance_free(p); }
};

struct Result {
  gl_result* p = nullptr;
  ~Result() { gl_result_free(p); }
};

int report_error(gl_error e) {
  std::cerr << "gridlink: " << gl_last_error() << "\n";
  switch (e) {
    case GL_ERR_PARSE:
    case GL_ERR_INPUT:
    case GL_ERR_NULL_ARGUMENT: return kExitUsage;
    default: return 1;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "gridlink: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool parse_vertex(const std::string& text, int& row, int& col) {
  char sep = 0;
  std::istringstream is(text);
  return static_cast<bool>(is >> row >> sep >> col) && sep == ',' && is.peek() == EOF;
}

// Exit code for a campaign or certificate verdict.
int verdict_exit(int holds) { return holds == 1 ? 0 : (holds == 0 ? 1 : 2); }

struct LimitFlags {
  std::uint64_t node_limit = 0;
  double time_limit = 0.0;

  void add(CLI::App* app) {
    app->add_option("--node-limit", node_limit, "Search node budget per instance (0 = default)");
    app->add_option("--time-limit", time_limit, "Seconds per instance (0 = default)");
  }
  gl_limits get() const {
    gl_limits l;
    gl_limits_init(&l);
    if (node_limit > 0) l.node_limit = node_limit;
    if (time_limit > 0) l.time_limit = time_limit;
    return l;
  }
};

const std::map<std::string, gl_method> kMethods = {
    {"oracle", GL_METHOD_ORACLE}, {"constructive", GL_METHOD_CONSTRUCTIVE}, {"both", GL_METHOD_BOTH}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint path pairing on grid graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gl_version());

  // solve
  auto* solve = app.add_subcommand("solve", "Find a weak linkage for an instance file");
  std::string solve_file;
  std::string solve_method = "oracle";
  bool solve_json = false;
  LimitFlags solve_limits;
  solve->add_option("--file", solve_file, "Instance file")->required();
  solve->add_option("--method", solve_method, "oracle or constructive")
      ->check(CLI::IsMember({"oracle", "constructive"}));
  solve->add_flag("--json", solve_json, "JSON report");
  solve_limits.add(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "Validate the paths given in an instance file");
  std::string verify_file;
  verify->add_option("--file", verify_file, "Instance file with path lines")->required();

  // pp
  auto* pp = app.add_subcommand("pp", "Decide k-path-pairability by exhaustive or sampled campaign");
  int pp_rows = 0;
  int pp_cols = 0;
  int pp_k = 0;
  std::string pp_mode = "exhaustive";
  std::string pp_method = "oracle";
  std::uint64_t pp_samples = 1000;
  std::uint64_t pp_seed = 1;
  int pp_jobs = 0;
  LimitFlags pp_limits;
  pp->add_option("--rows", pp_rows)->required();
  pp->add_option("--cols", pp_cols)->required();
  pp->add_option("--k", pp_k)->required();
  pp->add_option("--mode", pp_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample", "sampled"}));
  pp->add_option("--method", pp_method, "oracle, constructive or both")->check(CLI::IsMember(kMethods));
  pp->add_option("--samples", pp_samples);
  pp->add_option("--seed", pp_seed);
  pp->add_option("--jobs", pp_jobs, "Worker threads (default GRIDLINK_JOBS, then all cores)");
  pp_limits.add(pp);

  // lemma
  auto* lemma = app.add_subcommand("lemma", "Certify a lemma over all of its configurations");
  std::string lemma_name;
  bool lemma_exhaustive = true;
  int lemma_jobs = 0;
  LimitFlags lemma_limits;
  lemma->add_option("--name", lemma_name, "Lemma name (see certify --list)")->required();
  lemma->add_flag("--exhaustive", lemma_exhaustive, "Enumerate every configuration (the only mode)");
  lemma->add_option("--jobs", lemma_jobs);
  lemma_limits.add(lemma);

  // counterexample
  auto* cex = app.add_subcommand("counterexample", "Refute the five-pair corner instance");
  std::string cex_t1 = "6,1";
  std::string cex_t5 = "6,6";
  LimitFlags cex_limits;
  cex->add_option("--t1", cex_t1, "Placement of t1 as r,c");
  cex->add_option("--t5", cex_t5, "Placement of t5 as r,c");
  cex_limits.add(cex);

  // render
  auto* render = app.add_subcommand("render", "Draw the linkage given in an instance file");
  std::string render_file;
  std::string render_format = "ascii";
  bool render_grid = false;
  render->add_option("--file", render_file, "Instance file with path lines")->required();
  render->add_option("--format", render_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_flag("--grid", render_grid, "Draw unused edges as - and |");

  // certify
  auto* certify = app.add_subcommand("certify", "Run the campaign behind a registered claim");
  std::string claim;
  bool list = false;
  std::string cert_method = "oracle";
  std::uint64_t cert_samples = 100000;
  std::uint64_t cert_seed = 1;
  int cert_jobs = 0;
  LimitFlags cert_limits;
  certify->add_option("--claim", claim, "Claim id");
  certify->add_flag("--list", list, "List claim ids");
  certify->add_option("--method", cert_method, "Method for prop32")->check(CLI::IsMember(kMethods));
  certify->add_option("--samples", cert_samples, "Samples for prop32");
  certify->add_option("--seed", cert_seed);
  certify->add_option("--jobs", cert_jobs);
  cert_limits.add(certify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (solve->parsed() || verify->parsed() || render->parsed()) {
    const std::string& path = solve->parsed() ? solve_file : (verify->parsed() ? verify_file : render_file);
    std::string text;
    if (!read_file(path, text)) return kExitUsage;
    Instance inst;
    if (gl_error e = gl_instance_parse(text.c_str(), &inst.p); e != GL_OK) return report_error(e);

    if (solve->parsed()) {
      const gl_limits limits = solve_limits.get();
      Result res;
      if (gl_error e = gl_solve(inst.p, kMethods.at(solve_method), &limits, &res.p); e != GL_OK) {
        return report_error(e);
      }
      Text out;
      if (gl_error e = gl_result_report(res.p, solve_json ? GL_FORMAT_JSON : GL_FORMAT_TEXT, &out.s); e != GL_OK) {
        return report_error(e);
      }
      std::cout << out.s;
      return static_cast<int>(gl_result_status(res.p));
    }
    if (verify->parsed()) {
      int valid = 0;
      Text report;
      if (gl_error e = gl_instance_validate(inst.p, &valid, &report.s); e != GL_OK) return report_error(e);
      std::cout << (valid ? "valid\n" : "invalid\n") << report.s;
      return valid ? 0 : 1;
    }
    Text out;
    const gl_format fmt = render_format == "svg" ? GL_FORMAT_SVG : GL_FORMAT_ASCII;
    if (gl_error e = gl_instance_render(inst.p, fmt, render_grid ? 1 : 0, &out.s); e != GL_OK) {
      return report_error(e);
    }
    std::cout << out.s;
    return 0;
  }

  if (pp->parsed()) {
    gl_campaign_options opt;
    gl_campaign_options_init(&opt);
    opt.exhaustive = pp_mode == "exhaustive" ? 1 : 0;
    opt.method = kMethods.at(pp_method);
    opt.samples = pp_samples;
    opt.seed = pp_seed;
    opt.jobs = pp_jobs;
    opt.limits = pp_limits.get();
    Text json;
    int holds = 0;
    if (gl_error e = gl_pp(pp_rows, pp_cols, pp_k, &opt, &json.s, &holds); e != GL_OK) return report_error(e);
    std::cout << json.s;
    return verdict_exit(holds);
  }

  if (lemma->parsed() || certify->parsed()) {
    if (certify->parsed() && list) {
      Text ids;
      if (gl_error e = gl_claim_ids(&ids.s); e != GL_OK) return report_error(e);
      std::cout << ids.s;
      return 0;
    }
    gl_campaign_options opt;
    gl_campaign_options_init(&opt);
    std::string id;
    if (lemma->parsed()) {
      id = "lemma-" + lemma_name;
      opt.jobs = lemma_jobs;
      opt.limits = lemma_limits.get();
    } else {
      if (claim.empty()) {
        std::cerr << "gridlink: certify needs --claim or --list\n";
        return kExitUsage;
      }
      id = claim;
      opt.method = kMethods.at(cert_method);
      opt.samples = cert_samples;
      opt.seed = cert_seed;
      opt.jobs = cert_jobs;
      opt.limits = cert_limits.get();
    }
    Text cert;
    int holds = 0;
    if (gl_error e = gl_certify(id.c_str(), &opt, &cert.s, &holds); e != GL_OK) return report_error(e);
    std::cout << cert.s;
    return verdict_exit(holds);
  }

  if (cex->parsed()) {
    int r1 = 0;
    int c1 = 0;
    int r5 = 0;
    int c5 = 0;
    if (!parse_vertex(cex_t1, r1, c1) || !parse_vertex(cex_t5, r5, c5)) {
      std::cerr << "gridlink: vertices are given as r,c\n";
      return kExitUsage;
    }
    const gl_limits limits = cex_limits.get();
    Text cert;
    gl_status status = GL_TIMEOUT;
    if (gl_error e = gl_certify_counterexample(r1, c1, r5, c5, &limits, &cert.s, &status); e != GL_OK) {
      return report_error(e);
    }
    std::cout << cert.s;
    return static_cast<int>(status);
  }
  return kExitUsage;
}
