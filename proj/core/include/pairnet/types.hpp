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

#ifndef PAIRNET_TYPES_HPP_
#define PAIRNET_TYPES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pairnet {

enum class DesignKind { kTriangular, kChevron, kBrickwork };

inline constexpr std::array<DesignKind, 3> kAllDesigns = {
    DesignKind::kTriangular, DesignKind::kChevron, DesignKind::kBrickwork};

// Lower-case name used in JSON and on the command line.
std::string_view DesignName(DesignKind design);
std::optional<DesignKind> ParseDesign(std::string_view name);

enum class SwitchState : std::uint8_t { kBar, kCross };

std::string_view StateName(SwitchState state);
std::optional<SwitchState> ParseState(std::string_view name);

// Indexed by switch id. A value is total over a network when its size equals
// the network's switch count.
using SwitchStates = std::vector<SwitchState>;

// out_line -> photon index. Photon i enters on line i.
using Permutation = std::vector<int>;

// photon index -> number of switch points traversed.
using DepthVector = std::vector<int>;

// A 2x2 switch point coupling lines `line` and `line + 1`.
struct SwitchPoint {
  int id = 0;     // position in the single-pass traversal order
  int layer = 0;  // 1-based layer index
  int line = 0;   // 0-based upper line
  int col = 0;    // rendering column

  friend bool operator==(const SwitchPoint&, const SwitchPoint&) = default;
};

// Elementary-operation tally for complexity checks. Routers bump it once per
// list element scanned, per switch state written and per walk step.
struct OpCounter {
  std::uint64_t ops = 0;

  void Add(std::uint64_t n = 1) { ops += n; }
};

}  // namespace pairnet

#endif  // PAIRNET_TYPES_HPP_
