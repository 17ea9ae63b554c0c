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


#ifndef GRIDLINK_RENDER_HPP_
#define GRIDLINK_RENDER_HPP_

#include <string>

#include "gridlink/grid.hpp"

namespace gridlink {

// '1'..'9', then 'A'.. for pair index 9 and up (0-based index).
char pair_mark(int index);

struct RenderOptions {
  // Draw unused edges as '-' and '|' instead of blanks.
  bool show_grid = false;
};

// Vertices are '+', each used edge carries the mark of its pair. Both
// renderers throw InputError unless l is a valid linkage for p.
std::string render_ascii(const GridGraph& g, const Pairing& p, const Linkage& l,
                         const RenderOptions& opt = {});
std::string render_svg(const GridGraph& g, const Pairing& p, const Linkage& l);

}  // namespace gridlink

#endif  // GRIDLINK_RENDER_HPP_
