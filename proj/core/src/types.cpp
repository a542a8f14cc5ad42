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

#include "pairnet/types.hpp"

namespace pairnet {

std::string_view DesignName(DesignKind design) {
  switch (design) {
    case DesignKind::kTriangular:
      return "triangular";
    case DesignKind::kChevron:
      return "chevron";
    case DesignKind::kBrickwork:
      return "brickwork";
  }
  return "unknown";
}

std::optional<DesignKind> ParseDesign(std::string_view name) {
  for (DesignKind d : kAllDesigns) {
    if (DesignName(d) == name) return d;
  }
  return std::nullopt;
}

std::string_view StateName(SwitchState state) {
  return state == SwitchState::kCross ? "cross" : "bar";
}

std::optional<SwitchState> ParseState(std::string_view name) {
  if (name == "cross") return SwitchState::kCross;
  if (name == "bar") return SwitchState::kBar;
  return std::nullopt;
}

}  // namespace pairnet
