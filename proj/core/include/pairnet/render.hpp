// Copyright 2026 The pairnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRNET_RENDER_HPP_
#define PAIRNET_RENDER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pairnet/topology.hpp"
#include "pairnet/types.hpp"

namespace pairnet {

struct RenderOptions {
  bool show_states = true;
  std::vector<int> highlight;  // photons whose routed paths are stroked
  int scale = 24;              // pixels per grid cell, >= 1
  std::vector<std::string> layer_colors = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
      "#9467bd", "#8c564b", "#e377c2", "#17becf"};
};

// Text diagram: one row per line, switch glyphs `X` (Cross), `=` (Bar) or `?`
// (no states) between the two lines they couple, BSA brackets on the right.
std::string RenderAscii(const Network& net,
                        const std::optional<SwitchStates>& states = std::nullopt);

// SVG 1.1 document. Throws Error{kInvalidInput} when options.scale < 1.
std::string RenderSvg(const Network& net,
                      const std::optional<SwitchStates>& states = std::nullopt,
                      const RenderOptions& options = {});

}  // namespace pairnet

#endif  // PAIRNET_RENDER_HPP_
