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

// Text format:
//
//   # comment
//   grid 6 6
//   pair (1,1) (6,6)
//   path 1 (1,1) (1,2) ...      optional, 1-based pair index
//
// Whitespace is insignificant inside coordinates.

#ifndef GRIDLINK_INSTANCE_IO_HPP_
#define GRIDLINK_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "gridlink/grid.hpp"

namespace gridlink {

struct Instance {
  int rows = 0;
  int cols = 0;
  Pairing pairing;
  Linkage linkage;  // empty unless path lines were given
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws ParseError. Terminals are range-checked and must be distinct.
Instance parse_instance(std::string_view text);
std::string format_instance(int rows, int cols, const Pairing& p);
std::string format_instance(const Instance& inst);
Vertex parse_vertex(std::string_view text);  // "r,c" or "(r,c)"

}  // namespace gridlink

#endif  // GRIDLINK_INSTANCE_IO_HPP_
