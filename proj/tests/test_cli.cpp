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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GRIDLINK_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(GRIDLINK_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run("").code == 64);
  CHECK(run("bogus").code == 64);
  CHECK(run("solve").code == 64);
  CHECK(run("solve --file /nonexistent/x.txt").code == 64);
  CHECK(run("pp --rows 3 --cols 3 --k 2 --mode nope").code == 64);
  CHECK(run("--help").code == 0);
}

TEST_CASE("solve") {
  CHECK(run("solve --file " + data("malformed.txt")).code == 64);
  const auto unsat = run("solve --file " + data("corner5.txt"));
  CHECK(unsat.code == 1);
  CHECK(unsat.out.find("UNSAT") != std::string::npos);
  const auto sat = run("solve --file " + data("crossing.txt") + " --method constructive --json");
  CHECK(sat.code == 0);
  CHECK(sat.out.find("\"case\": \"A1\"") != std::string::npos);
  const auto text = run("solve --file " + data("crossing.txt"));
  CHECK(text.code == 0);
  CHECK(text.out.find("path 4 ") != std::string::npos);
  CHECK(run("solve --file " + data("corner5.txt") + " --method constructive").code == 64);
}

TEST_CASE("verify and render") {
  CHECK(run("verify --file " + data("straight.txt")).code == 0);
  const auto bad = run("verify --file " + data("shared_edge.txt"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(3,3)") != std::string::npos);
  const auto art = run("render --file " + data("straight.txt"));
  CHECK(art.code == 0);
  CHECK(art.out == "+1+1+\n\n+ + +\n");
  CHECK(run("render --file " + data("straight.txt") + " --grid").out == "+1+1+\n| | |\n+-+-+\n");
  CHECK(run("render --file " + data("straight.txt") + " --format svg").out.find("<svg") == 0);
  CHECK(run("render --file " + data("shared_edge.txt")).code != 0);
}

TEST_CASE("campaigns") {
  const auto ok = run("pp --rows 4 --cols 4 --k 3 --mode exhaustive --jobs 1");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"result\": true") != std::string::npos);
  const auto no = run("pp --rows 2 --cols 2 --k 2 --jobs 1");
  CHECK(no.code == 1);
  CHECK(no.out.find("\"unsat_witnesses\"") != std::string::npos);
  const auto sampled = run("pp --rows 6 --cols 6 --k 4 --mode sample --samples 40 --seed 3 --method both --jobs 1");
  CHECK(sampled.code == 0);
  CHECK(sampled.out.find("\"cases\"") != std::string::npos);
}

TEST_CASE("counterexample, lemma and certify") {
  const auto cex = run("counterexample --t1 6,1 --t5 6,6");
  CHECK(cex.code == 1);
  CHECK(cex.out.find("verdict holds") != std::string::npos);
  CHECK(run("counterexample --t1 1,1 --t5 6,6").code == 64);
  CHECK(run("counterexample --t1 six").code == 64);
  CHECK(run("lemma --name exit --exhaustive --jobs 1").code == 0);
  CHECK(run("lemma --name 12toCa --jobs 1").code == 1);
  CHECK(run("lemma --name nope").code == 64);
  CHECK(run("certify --list").out.find("pp44") != std::string::npos);
  CHECK(run("certify --claim pp33 --jobs 1").code == 0);
  CHECK(run("certify").code == 64);
}
