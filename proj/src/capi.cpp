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


#include "gridlink/gridlink.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "gridlink/campaign.hpp"
#include "gridlink/certify.hpp"
#include "gridlink/constructive.hpp"
#include "gridlink/instance_io.hpp"
#include "gridlink/render.hpp"
#include "gridlink/validate.hpp"
#include "gridlink/version.hpp"

struct gl_instance {
  gridlink::Instance inst;
};

struct gl_result {
  gridlink::Instance inst;  // input plus the linkage when SAT
  std::string method;
  gridlink::SolveStatus status = gridlink::SolveStatus::kTimeout;
  std::optional<gridlink::ConstructiveResult> constructive;
  std::uint64_t nodes = 0;
  std::string engine;
  double seconds = 0.0;
};

namespace {

using namespace gridlink;

thread_local std::string g_last_error;

gl_error fail(gl_error code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Runs f, mapping exceptions onto error codes.
template <typename F>
gl_error guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const ParseError& e) {
    return fail(GL_ERR_PARSE, e.what());
  } catch (const InputError& e) {
    return fail(GL_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(GL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GL_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

SolveLimits to_limits(const gl_limits* l) {
  SolveLimits out;
  if (l != nullptr) {
    if (l->node_limit > 0) out.max_nodes = l->node_limit;
    if (l->time_limit > 0) out.max_seconds = l->time_limit;
  }
  return out;
}

CampaignMethod to_method(gl_method m) {
  switch (m) {
    case GL_METHOD_CONSTRUCTIVE: return CampaignMethod::kConstructive;
    case GL_METHOD_BOTH: return CampaignMethod::kBoth;
    default: return CampaignMethod::kOracle;
  }
}

int holds_flag(bool holds, bool complete) { return holds ? 1 : (complete ? 0 : -1); }

nlohmann::ordered_json vertex_json(Vertex v) { return {v.row, v.col}; }

nlohmann::ordered_json path_json(const Path& p) {
  auto a = nlohmann::ordered_json::array();
  for (Vertex v : p.vertices) a.push_back(vertex_json(v));
  return a;
}

std::string report_json(const gl_result& r) {
  nlohmann::ordered_json j;
  j["status"] = status_name(r.status);
  j["method"] = r.method;
  j["grid"] = {r.inst.rows, r.inst.cols};
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& tp : r.inst.pairing.pairs) pairs.push_back({vertex_json(tp.s), vertex_json(tp.t)});
  j["pairs"] = pairs;
  auto paths = nlohmann::ordered_json::array();
  for (const auto& p : r.inst.linkage) paths.push_back(path_json(p));
  j["paths"] = paths;
  if (r.constructive) {
    const auto& c = *r.constructive;
    j["case"] = case_name(c.label);
    j["symmetry"] = symmetry_name(c.label.symmetry);
    j["fallback"] = c.fallback;
    if (!c.failure.empty()) j["failure"] = c.failure;
    auto trace = nlohmann::ordered_json::array();
    for (const auto& step : c.trace) {
      nlohmann::ordered_json s;
      s["case"] = step.label;
      s["lemma"] = step.step;
      auto ps = nlohmann::ordered_json::array();
      for (const auto& [pair, path] : step.paths) ps.push_back({{"pair", pair + 1}, {"path", path_json(path)}});
      s["paths"] = ps;
      trace.push_back(s);
    }
    j["trace"] = trace;
  } else {
    j["engine"] = r.engine;
    j["nodes"] = r.nodes;
  }
  j["wall_seconds"] = r.seconds;
  return j.dump(2) + "\n";
}

std::string report_text(const gl_result& r) {
  std::ostringstream os;
  os << "# status " << status_name(r.status) << "\n";
  os << "# method " << r.method << "\n";
  if (r.constructive) {
    const auto& c = *r.constructive;
    os << "# case " << case_name(c.label) << " symmetry " << symmetry_name(c.label.symmetry) << " fallback "
       << (c.fallback ? "true" : "false") << "\n";
    if (!c.failure.empty()) os << "# failure " << c.failure << "\n";
  } else {
    os << "# engine " << r.engine << " nodes " << r.nodes << "\n";
  }
  os << format_instance(r.inst);
  if (r.constructive) {
    for (const auto& step : r.constructive->trace) {
      os << "# trace " << step.label << " | " << step.step;
      for (const auto& [pair, path] : step.paths) os << " | " << pair + 1 << ": " << to_string(path);
      os << "\n";
    }
  }
  return os.str();
}

gl_error render_into(const Instance& inst, gl_format fmt, bool show_grid, char** out) {
  const auto g = make_grid(inst.rows, inst.cols);
  std::string s;
  try {
    if (fmt == GL_FORMAT_SVG) {
      s = render_svg(g, inst.pairing, inst.linkage);
    } else if (fmt == GL_FORMAT_ASCII) {
      s = render_ascii(g, inst.pairing, inst.linkage, {show_grid});
    } else {
      return fail(GL_ERR_INPUT, "render format must be ascii or svg");
    }
  } catch (const InputError& e) {
    return fail(GL_ERR_REFUSED, e.what());
  }
  *out = dup(s);
  return GL_OK;
}

}  // namespace

extern "C" {

const char* gl_version(void) { return GRIDLINK_VERSION_STRING; }

const char* gl_last_error(void) { return g_last_error.c_str(); }

void gl_string_free(char* s) { std::free(s); }

void gl_limits_init(gl_limits* l) {
  if (l == nullptr) return;
  const SolveLimits d;
  l->node_limit = d.max_nodes;
  l->time_limit = d.max_seconds;
}

void gl_campaign_options_init(gl_campaign_options* o) {
  if (o == nullptr) return;
  const CampaignOptions d;
  o->exhaustive = 1;
  o->samples = d.samples;
  o->seed = d.seed;
  o->jobs = 0;
  o->method = GL_METHOD_ORACLE;
  gl_limits_init(&o->limits);
}

gl_error gl_instance_parse(const char* text, gl_instance** out) {
  if (text == nullptr || out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new gl_instance{parse_instance(text)};
    return GL_OK;
  });
}

gl_error gl_instance_new(int rows, int cols, gl_instance** out) {
  if (out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    GridGraph probe(rows, cols);  // size check
    auto* inst = new gl_instance{};
    inst->inst.rows = rows;
    inst->inst.cols = cols;
    *out = inst;
    return GL_OK;
  });
}

gl_error gl_instance_add_pair(gl_instance* inst, int s_row, int s_col, int t_row, int t_col) {
  if (inst == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    Pairing p = inst->inst.pairing;
    p.pairs.push_back({{s_row, s_col}, {t_row, t_col}});
    check_pairing(make_grid(inst->inst.rows, inst->inst.cols), p);
    inst->inst.pairing = std::move(p);
    inst->inst.linkage.clear();
    return GL_OK;
  });
}

gl_error gl_instance_counterexample(int t1_row, int t1_col, int t5_row, int t5_col, gl_instance** out) {
  if (out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    Instance inst;
    inst.rows = 6;
    inst.cols = 6;
    inst.pairing = counterexample_instance({t1_row, t1_col}, {t5_row, t5_col});
    *out = new gl_instance{std::move(inst)};
    return GL_OK;
  });
}

int gl_instance_rows(const gl_instance* inst) { return inst ? inst->inst.rows : 0; }
int gl_instance_cols(const gl_instance* inst) { return inst ? inst->inst.cols : 0; }
int gl_instance_pair_count(const gl_instance* inst) { return inst ? inst->inst.pairing.size() : 0; }
int gl_instance_has_paths(const gl_instance* inst) { return inst && !inst->inst.linkage.empty() ? 1 : 0; }

gl_error gl_instance_text(const gl_instance* inst, char** out) {
  if (inst == nullptr || out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(format_instance(inst->inst));
    return GL_OK;
  });
}

void gl_instance_free(gl_instance* inst) { delete inst; }

gl_error gl_instance_validate(const gl_instance* inst, int* valid, char** report) {
  if (inst == nullptr || valid == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto g = make_grid(inst->inst.rows, inst->inst.cols);
    const auto v = validate_linkage(g, inst->inst.pairing, inst->inst.linkage);
    *valid = v.empty() ? 1 : 0;
    if (report != nullptr) {
      std::string s;
      for (const auto& x : v) s += x.describe() + "\n";
      *report = dup(s);
    }
    return GL_OK;
  });
}

gl_error gl_instance_render(const gl_instance* inst, gl_format fmt, int show_grid, char** out) {
  if (inst == nullptr || out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { return render_into(inst->inst, fmt, show_grid != 0, out); });
}

gl_error gl_solve(const gl_instance* inst, gl_method method, const gl_limits* limits, gl_result** out) {
  if (inst == nullptr || out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto g = make_grid(inst->inst.rows, inst->inst.cols);
    const SolveLimits lim = to_limits(limits);
    auto res = std::make_unique<gl_result>();
    res->inst.rows = inst->inst.rows;
    res->inst.cols = inst->inst.cols;
    res->inst.pairing = inst->inst.pairing;
    const auto start = std::chrono::steady_clock::now();
    if (method == GL_METHOD_CONSTRUCTIVE) {
      if (g.rows() != 6 || g.cols() != 6 || inst->inst.pairing.size() != 4) {
        return fail(GL_ERR_INPUT, "the constructive method covers 4 pairs on the 6x6 grid only");
      }
      res->method = "constructive";
      auto c = solve_constructive(inst->inst.pairing, lim);
      res->status = c.status;
      res->inst.linkage = c.linkage;
      res->constructive = std::move(c);
    } else if (method == GL_METHOD_ORACLE) {
      res->method = "oracle";
      SolveOptions so;
      so.limits = lim;
      auto rep = find_weak_linkage(g, inst->inst.pairing, so);
      res->status = rep.status;
      res->inst.linkage = std::move(rep.linkage);
      res->nodes = rep.nodes;
      res->engine = std::string(engine_name(rep.engine_used));
    } else {
      return fail(GL_ERR_INPUT, "solve takes the oracle or constructive method");
    }
    res->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res->status == SolveStatus::kSat && !validate_linkage(g, res->inst.pairing, res->inst.linkage).empty()) {
      return fail(GL_ERR_INTERNAL, "solver produced an invalid linkage");
    }
    *out = res.release();
    return GL_OK;
  });
}

gl_status gl_result_status(const gl_result* res) {
  if (res == nullptr) return GL_TIMEOUT;
  switch (res->status) {
    case SolveStatus::kSat: return GL_SAT;
    case SolveStatus::kUnsat: return GL_UNSAT;
    case SolveStatus::kTimeout: return GL_TIMEOUT;
  }
  return GL_TIMEOUT;
}

int gl_result_path_length(const gl_result* res, int pair) {
  if (res == nullptr || pair < 0 || pair >= static_cast<int>(res->inst.linkage.size())) return -1;
  return static_cast<int>(res->inst.linkage[pair].vertices.size());
}

gl_error gl_result_path_vertex(const gl_result* res, int pair, int index, int* row, int* col) {
  if (res == nullptr || row == nullptr || col == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  const int n = gl_result_path_length(res, pair);
  if (index < 0 || index >= n) return fail(GL_ERR_INPUT, "path index out of range");
  const Vertex v = res->inst.linkage[pair].vertices[index];
  *row = v.row;
  *col = v.col;
  return GL_OK;
}

int gl_result_fallback(const gl_result* res) {
  return res && res->constructive && res->constructive->fallback ? 1 : 0;
}

gl_error gl_result_report(const gl_result* res, gl_format fmt, char** out) {
  if (res == nullptr || out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (fmt == GL_FORMAT_TEXT) {
      *out = dup(report_text(*res));
      return GL_OK;
    }
    if (fmt == GL_FORMAT_JSON) {
      *out = dup(report_json(*res));
      return GL_OK;
    }
    return render_into(res->inst, fmt, false, out);
  });
}

void gl_result_free(gl_result* res) { delete res; }

gl_error gl_pp(int rows, int cols, int k, const gl_campaign_options* opt, char** json, int* holds) {
  if (opt == nullptr || json == nullptr || holds == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  if (rows < 1 || cols < 1 || rows > 16 || cols > 16) return fail(GL_ERR_INPUT, "grid sides must lie in 1..16");
  return guarded([&] {
    CampaignOptions co;
    co.mode = opt->exhaustive ? CampaignMode::kExhaustive : CampaignMode::kSampled;
    co.method = to_method(opt->method);
    co.samples = opt->samples;
    co.seed = opt->seed;
    co.jobs = opt->jobs;
    co.limits = to_limits(&opt->limits);
    const auto rep = is_k_path_pairable(make_grid(rows, cols), k, co);
    *holds = rep.unsat > 0 ? 0 : holds_flag(rep.all_sat() && rep.invalid == 0, rep.complete);
    *json = dup(campaign_json(rep) + "\n");
    return GL_OK;
  });
}

gl_error gl_claim_ids(char** out) {
  if (out == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::string s;
    for (const auto& id : claim_ids()) s += id + "\n";
    *out = dup(s);
    return GL_OK;
  });
}

gl_error gl_certify(const char* claim_id, const gl_campaign_options* opt, char** text, int* holds) {
  if (claim_id == nullptr || text == nullptr || holds == nullptr) {
    return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  }
  return guarded([&] {
    CertifyOptions co;
    if (opt != nullptr) {
      co.samples = opt->samples;
      co.seed = opt->seed;
      co.jobs = opt->jobs;
      co.method = to_method(opt->method);
      co.limits = to_limits(&opt->limits);
    }
    const auto cert = certify_theorem(claim_id, co);
    *holds = holds_flag(cert.holds, cert.complete);
    *text = dup(certificate_text(cert));
    return GL_OK;
  });
}

gl_error gl_certify_counterexample(int t1_row, int t1_col, int t5_row, int t5_col, const gl_limits* limits,
                                   char** text, gl_status* status) {
  if (text == nullptr || status == nullptr) return fail(GL_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cert = certify_counterexample({t1_row, t1_col}, {t5_row, t5_col}, to_limits(limits));
    switch (cert.refutations.front().status) {
      case SolveStatus::kSat: *status = GL_SAT; break;
      case SolveStatus::kUnsat: *status = GL_UNSAT; break;
      case SolveStatus::kTimeout: *status = GL_TIMEOUT; break;
    }
    *text = dup(certificate_text(cert));
    return GL_OK;
  });
}

}  // extern "C"
