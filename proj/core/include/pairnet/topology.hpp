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

#ifndef PAIRNET_TOPOLOGY_HPP_
#define PAIRNET_TOPOLOGY_HPP_

#include <string>
#include <vector>

#include "pairnet/types.hpp"

namespace pairnet {

// An ordered planar arrangement of 2x2 switch points over `ports` lines.
//
// `switches` is stored in traversal order; for networks produced by
// BuildNetwork/ReverseNetwork the i-th entry has id i. Hand-built networks may
// violate any rule; ValidateNetwork reports what is wrong with them.
class Network {
 public:
  Network() = default;
  Network(DesignKind design, int ports, std::vector<SwitchPoint> switches,
          bool reversed = false);

  DesignKind design() const { return design_; }
  int ports() const { return ports_; }
  bool reversed() const { return reversed_; }
  const std::vector<SwitchPoint>& switches() const { return switches_; }
  int size() const { return static_cast<int>(switches_.size()); }

  // Number of layers of the design (Brickwork: N/2, others: N/2 - 1).
  int LayerCount() const;

  // Copy with one switch removed and ids re-densified; used for minimality.
  Network WithoutSwitch(int id) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  DesignKind design_ = DesignKind::kTriangular;
  int ports_ = 2;
  std::vector<SwitchPoint> switches_;
  bool reversed_ = false;
};

struct Violation {
  std::string rule;
  int where = -1;  // switch id or layer, depending on the rule
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Builds the Triangular, Chevron or Brickwork network on `ports` lines.
// Throws Error{kInvalidPorts} unless ports is even and >= 2.
Network BuildNetwork(DesignKind design, int ports);

// Checks planarity, the N(N-2)/4 count, id density/uniqueness, duplicate
// (layer, line) placements and the per-design layer-size rules.
ValidationReport ValidateNetwork(const Network& net);

// Mirror for EPPS-pool operation: traversal order reversed (id' = S-1-id),
// labels kept, reversed flag toggled.
Network ReverseNetwork(const Network& net);

// Expected number of switches in `layer` of a well-formed design.
int ExpectedLayerSize(DesignKind design, int ports, int layer);

}  // namespace pairnet

#endif  // PAIRNET_TOPOLOGY_HPP_
