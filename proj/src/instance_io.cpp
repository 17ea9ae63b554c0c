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

#include "gridlink/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace gridlink {
namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

// Splits "(1,2)(3,4)" or "(1, 2) (3,4)" after whitespace removal.
std::vector<std::string> split_tuples(const std::string& s, int line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError(line, "expected '(' in '" + s + "'");
    const auto close = s.find(')', i);
    if (close == std::string::npos) throw ParseError(line, "unterminated vertex in '" + s + "'");
    out.push_back(s.substr(i, close - i + 1));
    i = close + 1;
  }
  return out;
}

Vertex vertex_or_throw(std::string_view text, int line) {
  std::string s = strip_spaces(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  Vertex v;
  if (comma == std::string::npos || !parse_int(std::string_view(s).substr(0, comma), v.row) ||
      !parse_int(std::string_view(s).substr(comma + 1), v.col)) {
    throw ParseError(line, "malformed vertex '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Vertex parse_vertex(std::string_view text) { return vertex_or_throw(text, 0); }

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_grid = false;
  std::set<Vertex> seen;
  std::vector<std::pair<int, Path>> paths;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string word;
    if (!(ls >> word)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (word == "grid") {
      if (have_grid) throw ParseError(line, "duplicate grid line");
      std::istringstream ds(rest);
      std::string a, b, extra;
      if (!(ds >> a >> b) || (ds >> extra) || !parse_int(a, inst.rows) ||
          !parse_int(b, inst.cols)) {
        throw ParseError(line, "expected 'grid ROWS COLS'");
      }
      try {
        GridGraph probe(inst.rows, inst.cols);
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
      have_grid = true;
    } else if (word == "pair") {
      if (!have_grid) throw ParseError(line, "pair before grid line");
      const auto tuples = split_tuples(strip_spaces(rest), line);
      if (tuples.size() != 2) throw ParseError(line, "expected 'pair (r,c) (r,c)'");
      TerminalPair pr{vertex_or_throw(tuples[0], line), vertex_or_throw(tuples[1], line)};
      for (Vertex v : {pr.s, pr.t}) {
        if (v.row < 1 || v.row > inst.rows || v.col < 1 || v.col > inst.cols) {
          throw ParseError(line, "terminal " + to_string(v) + " outside the grid");
        }
        if (!seen.insert(v).second) throw ParseError(line, "duplicate terminal " + to_string(v));
      }
      inst.pairing.pairs.push_back(pr);
    } else if (word == "path") {
      std::istringstream ps(rest);
      std::string idx;
      int index = 0;
      if (!(ps >> idx) || !parse_int(idx, index) || index < 1) {
        throw ParseError(line, "expected 'path INDEX (r,c) ...'");
      }
      std::string tail;
      std::getline(ps, tail);
      Path p;
      for (const auto& t : split_tuples(strip_spaces(tail), line)) {
        p.vertices.push_back(vertex_or_throw(t, line));
      }
      if (p.vertices.empty()) throw ParseError(line, "empty path");
      paths.emplace_back(index, std::move(p));
    } else {
      throw ParseError(line, "unknown directive '" + word + "'");
    }
  }
  if (!have_grid) throw ParseError(line == 0 ? 1 : line, "missing grid line");
  if (!paths.empty()) {
    inst.linkage.resize(inst.pairing.pairs.size());
    std::vector<bool> got(inst.pairing.pairs.size(), false);
    for (auto& [i, p] : paths) {
      if (i > inst.pairing.size() || got[i - 1]) {
        throw ParseError(line, "path index " + std::to_string(i) + " invalid or repeated");
      }
      got[i - 1] = true;
      inst.linkage[i - 1] = std::move(p);
    }
  }
  return inst;
}

std::string format_instance(int rows, int cols, const Pairing& p) {
  std::ostringstream os;
  os << "grid " << rows << ' ' << cols << '\n';
  for (const auto& pr : p.pairs) {
    os << "pair " << to_string(pr.s) << ' ' << to_string(pr.t) << '\n';
  }
  return os.str();
}

std::string format_instance(const Instance& inst) {
  std::string out = format_instance(inst.rows, inst.cols, inst.pairing);
  for (std::size_t i = 0; i < inst.linkage.size(); ++i) {
    if (inst.linkage[i].vertices.empty()) continue;
    out += "path " + std::to_string(i + 1) + ' ' + to_string(inst.linkage[i]) + '\n';
  }
  return out;
}

}  // namespace gridlink
