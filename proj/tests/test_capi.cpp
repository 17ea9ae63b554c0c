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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gridlink/gridlink.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  gl_string_free(s);
  return out;
}

const char* kCrossing =
    "grid 6 6\n"
    "pair (1,1) (6,6)\n"
    "pair (1,6) (6,1)\n"
    "pair (3,3) (4,4)\n"
    "pair (3,4) (4,3)\n";

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::string(gl_version()) == "1.0.0");
  gl_limits l;
  gl_limits_init(&l);
  CHECK(l.node_limit == 100000000);
  CHECK(l.time_limit == 300.0);
  gl_campaign_options o;
  gl_campaign_options_init(&o);
  CHECK(o.method == GL_METHOD_ORACLE);
}

TEST_CASE("null arguments") {
  CHECK(gl_instance_parse(nullptr, nullptr) == GL_ERR_NULL_ARGUMENT);
  CHECK(std::string(gl_last_error()).size() > 0);
  gl_result* r = nullptr;
  CHECK(gl_solve(nullptr, GL_METHOD_ORACLE, nullptr, &r) == GL_ERR_NULL_ARGUMENT);
  CHECK(gl_instance_text(nullptr, nullptr) == GL_ERR_NULL_ARGUMENT);
  gl_instance_free(nullptr);
  gl_result_free(nullptr);
  gl_string_free(nullptr);
}

TEST_CASE("parse errors carry the line") {
  gl_instance* inst = nullptr;
  CHECK(gl_instance_parse("grid 6 6\npair (0,1) (2,2)\n", &inst) == GL_ERR_PARSE);
  CHECK(inst == nullptr);
  CHECK(std::string(gl_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("building an instance by hand") {
  gl_instance* inst = nullptr;
  REQUIRE(gl_instance_new(3, 3, &inst) == GL_OK);
  CHECK(gl_instance_add_pair(inst, 1, 1, 3, 3) == GL_OK);
  CHECK(gl_instance_add_pair(inst, 1, 1, 2, 2) == GL_ERR_INPUT);
  CHECK(gl_instance_add_pair(inst, 1, 1, 4, 4) == GL_ERR_INPUT);
  CHECK(gl_instance_pair_count(inst) == 1);
  CHECK(take([&] {
          char* s = nullptr;
          gl_instance_text(inst, &s);
          return s;
        }()) == "grid 3 3\npair (1,1) (3,3)\n");
  gl_instance_free(inst);
  CHECK(gl_instance_new(0, 3, &inst) == GL_ERR_INPUT);
  CHECK(gl_instance_new(9, 9, &inst) == GL_ERR_INPUT);
}

TEST_CASE("oracle solve and report round trip") {
  gl_instance* inst = nullptr;
  REQUIRE(gl_instance_parse(kCrossing, &inst) == GL_OK);
  gl_result* res = nullptr;
  REQUIRE(gl_solve(inst, GL_METHOD_ORACLE, nullptr, &res) == GL_OK);
  CHECK(gl_result_status(res) == GL_SAT);
  const int n = gl_result_path_length(res, 0);
  REQUIRE(n >= 2);
  int r = 0;
  int c = 0;
  CHECK(gl_result_path_vertex(res, 0, 0, &r, &c) == GL_OK);
  CHECK((r == 1 && c == 1));
  CHECK(gl_result_path_vertex(res, 0, n - 1, &r, &c) == GL_OK);
  CHECK((r == 6 && c == 6));
  CHECK(gl_result_path_vertex(res, 0, n, &r, &c) == GL_ERR_INPUT);
  CHECK(gl_result_path_length(res, 9) == -1);

  char* text = nullptr;
  REQUIRE(gl_result_report(res, GL_FORMAT_TEXT, &text) == GL_OK);
  gl_instance* back = nullptr;
  REQUIRE(gl_instance_parse(text, &back) == GL_OK);
  gl_string_free(text);
  CHECK(gl_instance_has_paths(back) == 1);
  int valid = 0;
  char* report = nullptr;
  CHECK(gl_instance_validate(back, &valid, &report) == GL_OK);
  CHECK(valid == 1);
  gl_string_free(report);
  char* art = nullptr;
  CHECK(gl_instance_render(back, GL_FORMAT_ASCII, 0, &art) == GL_OK);
  CHECK(take(art).find('+') != std::string::npos);
  gl_instance_free(back);

  const auto json = take([&] {
    char* s = nullptr;
    gl_result_report(res, GL_FORMAT_JSON, &s);
    return s;
  }());
  CHECK(json.find("\"status\": \"SAT\"") != std::string::npos);
  gl_result_free(res);
  gl_instance_free(inst);
}

TEST_CASE("constructive solve") {
  gl_instance* inst = nullptr;
  REQUIRE(gl_instance_parse(kCrossing, &inst) == GL_OK);
  gl_result* res = nullptr;
  REQUIRE(gl_solve(inst, GL_METHOD_CONSTRUCTIVE, nullptr, &res) == GL_OK);
  CHECK(gl_result_status(res) == GL_SAT);
  CHECK(gl_result_fallback(res) == 0);
  const auto json = take([&] {
    char* s = nullptr;
    gl_result_report(res, GL_FORMAT_JSON, &s);
    return s;
  }());
  CHECK(json.find("\"case\": \"A1\"") != std::string::npos);
  CHECK(json.find("\"trace\"") != std::string::npos);
  gl_result_free(res);
  gl_instance_free(inst);

  REQUIRE(gl_instance_parse("grid 4 4\npair (1,1) (4,4)\n", &inst) == GL_OK);
  CHECK(gl_solve(inst, GL_METHOD_CONSTRUCTIVE, nullptr, &res) == GL_ERR_INPUT);
  gl_instance_free(inst);
}

TEST_CASE("counterexample") {
  gl_limits l;
  gl_limits_init(&l);
  char* text = nullptr;
  gl_status st = GL_SAT;
  REQUIRE(gl_certify_counterexample(6, 1, 6, 6, &l, &text, &st) == GL_OK);
  CHECK(st == GL_UNSAT);
  CHECK(take(text).find("verdict holds") != std::string::npos);
  CHECK(gl_certify_counterexample(1, 1, 6, 6, &l, &text, &st) == GL_ERR_INPUT);

  gl_instance* inst = nullptr;
  REQUIRE(gl_instance_counterexample(6, 1, 6, 6, &inst) == GL_OK);
  CHECK(gl_instance_pair_count(inst) == 5);
  gl_result* res = nullptr;
  REQUIRE(gl_solve(inst, GL_METHOD_ORACLE, &l, &res) == GL_OK);
  CHECK(gl_result_status(res) == GL_UNSAT);
  CHECK(gl_result_path_length(res, 0) == -1);
  gl_result_free(res);
  gl_instance_free(inst);
}

TEST_CASE("rendering refuses invalid linkages") {
  gl_instance* inst = nullptr;
  REQUIRE(gl_instance_parse("grid 6 6\npair (3,2) (3,5)\npair (2,3) (4,4)\n"
                            "path 1 (3,2) (3,3) (3,4) (3,5)\n"
                            "path 2 (2,3) (3,3) (3,4) (4,4)\n",
                            &inst) == GL_OK);
  int valid = 1;
  char* report = nullptr;
  CHECK(gl_instance_validate(inst, &valid, &report) == GL_OK);
  CHECK(valid == 0);
  CHECK(take(report).find("(3,3)") != std::string::npos);
  char* art = nullptr;
  CHECK(gl_instance_render(inst, GL_FORMAT_SVG, 0, &art) == GL_ERR_REFUSED);
  gl_instance_free(inst);
}

TEST_CASE("campaigns and certificates") {
  gl_campaign_options o;
  gl_campaign_options_init(&o);
  o.exhaustive = 1;
  o.jobs = 1;
  char* json = nullptr;
  int holds = -5;
  REQUIRE(gl_pp(3, 3, 2, &o, &json, &holds) == GL_OK);
  CHECK(holds == 1);
  CHECK(take(json).find("\"space_size\": 378") != std::string::npos);
  REQUIRE(gl_pp(2, 2, 2, &o, &json, &holds) == GL_OK);
  CHECK(holds == 0);
  gl_string_free(json);
  CHECK(gl_pp(2, 2, 3, &o, &json, &holds) == GL_ERR_INPUT);

  char* ids = nullptr;
  REQUIRE(gl_claim_ids(&ids) == GL_OK);
  CHECK(take(ids).find("prop31\n") != std::string::npos);
  char* text = nullptr;
  REQUIRE(gl_certify("pp22", &o, &text, &holds) == GL_OK);
  CHECK(holds == 1);
  CHECK(take(text).find("claim pp22") != std::string::npos);
  CHECK(gl_certify("nope", &o, &text, &holds) == GL_ERR_INPUT);
}
