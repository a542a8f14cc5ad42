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

#include "pairnet/topology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "pairnet/error.hpp"

namespace pairnet {
namespace {

void CheckPorts(int ports) {
  if (ports < 2 || ports % 2 != 0) {
    throw Error(ErrorCode::kInvalidPorts,
                "ports must be even and >= 2, got " + std::to_string(ports));
  }
}

// Columns advance per layer; inside a layer a switch takes the first column
// after the last switch on either of its lines, so disjoint switches share
// one.
void AssignColumns(std::vector<SwitchPoint>& switches, int ports) {
  std::vector<int> last(ports, -1);
  int base = 0;
  int max_col = -1;
  int current_layer = -1;
  for (SwitchPoint& sw : switches) {
    if (sw.layer != current_layer) {
      current_layer = sw.layer;
      base = max_col + 1;
    }
    int col = std::max({base, last[sw.line] + 1, last[sw.line + 1] + 1});
    sw.col = col;
    last[sw.line] = col;
    last[sw.line + 1] = col;
    max_col = std::max(max_col, col);
  }
}

std::vector<SwitchPoint> TriangularSwitches(int ports) {
  std::vector<SwitchPoint> out;
  const int half = ports / 2;
  // Input side carries the largest layer; each layer is a cascade down from
  // line 0.
  for (int layer = half - 1; layer >= 1; --layer) {
    for (int line = 0; line < 2 * layer; ++line) {
      out.push_back({0, layer, line, 0});
    }
  }
  return out;
}

std::vector<SwitchPoint> ChevronSwitches(int ports) {
  std::vector<SwitchPoint> out;
  const int half = ports / 2;
  for (int layer = 1; layer <= half - 1; ++layer) {
    for (int line = half - layer - 1; line <= half - 2; ++line) {
      out.push_back({0, layer, line, 0});
    }
    // Odd layers drop SW_{N/2} from the lower cascade and gain the tip
    // SW_{N/2-1}, which acts after both half cascades.
    const int lower_end = layer % 2 == 0 ? half : half + 1;
    for (int line = half + layer - 1; line >= lower_end; --line) {
      out.push_back({0, layer, line, 0});
    }
    if (layer % 2 == 1) out.push_back({0, layer, half - 1, 0});
  }
  return out;
}

std::vector<SwitchPoint> BrickworkSwitches(int ports) {
  std::vector<SwitchPoint> out;
  const int half = ports / 2;
  for (int layer = half; layer >= 1; --layer) {
    const int parity = layer % 2 == 1 ? 1 : 0;
    // The final layer keeps the parity rule but only its top floor(N/4)
    // switches.
    const int count = layer == half ? ports / 4
                                    : (parity == 1 ? half - 1 : half);
    for (int k = 0; k < count; ++k) {
      out.push_back({0, layer, parity + 2 * k, 0});
    }
  }
  return out;
}

}  // namespace

Network::Network(DesignKind design, int ports, std::vector<SwitchPoint> switches,
                 bool reversed)
    : design_(design),
      ports_(ports),
      switches_(std::move(switches)),
      reversed_(reversed) {}

int Network::LayerCount() const {
  if (ports_ < 2) return 0;
  return design_ == DesignKind::kBrickwork ? ports_ / 2 : ports_ / 2 - 1;
}

Network Network::WithoutSwitch(int id) const {
  std::vector<SwitchPoint> kept;
  kept.reserve(switches_.size());
  for (const SwitchPoint& sw : switches_) {
    if (sw.id == id) continue;
    SwitchPoint copy = sw;
    copy.id = static_cast<int>(kept.size());
    kept.push_back(copy);
  }
  return Network(design_, ports_, std::move(kept), reversed_);
}

int ExpectedLayerSize(DesignKind design, int ports, int layer) {
  const int half = ports / 2;
  switch (design) {
    case DesignKind::kTriangular:
    case DesignKind::kChevron:
      return (layer >= 1 && layer <= half - 1) ? 2 * layer : 0;
    case DesignKind::kBrickwork:
      if (layer < 1 || layer > half) return 0;
      if (layer == half) return ports / 4;
      return layer % 2 == 1 ? half - 1 : half;
  }
  return 0;
}

Network BuildNetwork(DesignKind design, int ports) {
  CheckPorts(ports);
  std::vector<SwitchPoint> switches;
  switch (design) {
    case DesignKind::kTriangular:
      switches = TriangularSwitches(ports);
      break;
    case DesignKind::kChevron:
      switches = ChevronSwitches(ports);
      break;
    case DesignKind::kBrickwork:
      switches = BrickworkSwitches(ports);
      break;
  }
  for (size_t i = 0; i < switches.size(); ++i) {
    switches[i].id = static_cast<int>(i);
  }
  AssignColumns(switches, ports);
  return Network(design, ports, std::move(switches), false);
}

ValidationReport ValidateNetwork(const Network& net) {
  ValidationReport report;
  auto add = [&](std::string rule, int where, std::string message) {
    report.violations.push_back(
        {std::move(rule), where, std::move(message)});
  };

  const int n = net.ports();
  if (n < 2 || n % 2 != 0) {
    add("ports", -1, "ports must be even and >= 2");
  }
  const int expected = n >= 2 ? n * (n - 2) / 4 : 0;
  if (net.size() != expected) {
    add("count", -1,
        "count " + std::to_string(net.size()) + " != N(N-2)/4 = " +
            std::to_string(expected));
  }

  std::set<int> ids;
  std::set<std::pair<int, int>> placements;
  std::map<int, int> layer_sizes;
  int previous_id = -1;
  for (const SwitchPoint& sw : net.switches()) {
    if (sw.line < 0 || sw.line > n - 2) {
      add("planarity", sw.id,
          "switch couples line " + std::to_string(sw.line) + " and " +
              std::to_string(sw.line + 1) + " outside 0.." +
              std::to_string(n - 1));
    }
    if (!ids.insert(sw.id).second) {
      add("id-unique", sw.id, "duplicate switch id");
    }
    if (sw.id <= previous_id) {
      add("id-order", sw.id, "switches not listed in ascending id order");
    }
    previous_id = sw.id;
    if (!placements.insert({sw.layer, sw.line}).second) {
      add("placement", sw.id,
          "second switch at layer " + std::to_string(sw.layer) + ", line " +
              std::to_string(sw.line));
    }
    ++layer_sizes[sw.layer];
  }
  if (!ids.empty() &&
      (*ids.begin() != 0 || *ids.rbegin() != static_cast<int>(ids.size()) - 1)) {
    add("id-dense", -1, "ids are not exactly 0..S-1");
  }

  if (n >= 2 && n % 2 == 0) {
    for (const auto& [layer, size] : layer_sizes) {
      if (layer < 1 || layer > net.LayerCount()) {
        add("layer-range", layer, "layer index out of range");
      }
    }
    for (int layer = 1; layer <= net.LayerCount(); ++layer) {
      const int want = ExpectedLayerSize(net.design(), n, layer);
      auto it = layer_sizes.find(layer);
      const int have = it == layer_sizes.end() ? 0 : it->second;
      if (have != want) {
        add("layer-size", layer,
            "layer has " + std::to_string(have) + " switches, expected " +
                std::to_string(want));
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

Network ReverseNetwork(const Network& net) {
  std::vector<SwitchPoint> switches(net.switches().rbegin(),
                                    net.switches().rend());
  int max_col = 0;
  for (const SwitchPoint& sw : switches) max_col = std::max(max_col, sw.col);
  const int count = static_cast<int>(switches.size());
  for (SwitchPoint& sw : switches) {
    sw.id = count - 1 - sw.id;
    sw.col = max_col - sw.col;
  }
  return Network(net.design(), net.ports(), std::move(switches),
                 !net.reversed());
}

}  // namespace pairnet
