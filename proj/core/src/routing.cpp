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

#include "pairnet/routing.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "pairnet/error.hpp"
#include "routing_internal.hpp"

namespace pairnet {
namespace internal {

void CheckDemand(int ports, const PairList& demand) {
  if (ports < 2 || ports % 2 != 0) {
    throw Error(ErrorCode::kInvalidPorts,
                "ports must be even and >= 2, got " + std::to_string(ports));
  }
  if (demand.ports() != ports) {
    throw Error(ErrorCode::kInvalidDemand,
                "demand covers " + std::to_string(demand.ports()) +
                    " photons, network has " + std::to_string(ports));
  }
}

PlacementIndex::PlacementIndex(const Network& net) : width_(net.ports()) {
  ids_.assign(static_cast<size_t>(net.LayerCount() + 1) * width_, -1);
  for (const SwitchPoint& sw : net.switches()) {
    ids_[static_cast<size_t>(sw.layer) * width_ + sw.line] = sw.id;
  }
}

}  // namespace internal

void AssignBsas(RoutingPlan& plan) {
  plan.bsa.clear();
  for (size_t j = 0; 2 * j + 1 < plan.permuted.size(); ++j) {
    plan.bsa.emplace_back(plan.permuted[2 * j], plan.permuted[2 * j + 1]);
  }
}

RoutingPlan Route(DesignKind design, int ports, const PairList& demand,
                  OpCounter* counter) {
  switch (design) {
    case DesignKind::kTriangular:
      return RouteTriangular(ports, demand, counter);
    case DesignKind::kChevron:
      return RouteChevron(ports, demand, counter);
    case DesignKind::kBrickwork:
      return RouteBrickwork(ports, demand, counter);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown design");
}

std::optional<RoutingPlan> BruteForceRoute(const Network& net,
                                           const PairList& demand,
                                           int max_switches) {
  if (demand.ports() != net.ports()) {
    throw Error(ErrorCode::kInvalidDemand,
                "demand size does not match the network");
  }
  const int count = net.size();
  if (count > max_switches || count > 62) {
    throw Error(ErrorCode::kBoundExceeded,
                "brute force over 2^" + std::to_string(count) +
                    " assignments exceeds the limit of 2^" +
                    std::to_string(max_switches));
  }
  const int ports = net.ports();
  std::vector<int> lines(net.switches().size());
  for (int k = 0; k < count; ++k) lines[k] = net.switches()[k].line;

  std::vector<int> perm(ports);
  const std::uint64_t total = std::uint64_t{1} << count;
  // Bit k set means switch k is Cross; masks are tried in ascending order.
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < count; ++k) {
      if ((mask >> k) & 1U) std::swap(perm[lines[k]], perm[lines[k] + 1]);
    }
    bool ok = true;
    for (int j = 0; j + 1 < ports && ok; j += 2) {
      ok = demand.partner(perm[j]) == perm[j + 1];
    }
    if (!ok) continue;
    RoutingPlan plan;
    plan.states.resize(count);
    for (int k = 0; k < count; ++k) {
      plan.states[k] =
          ((mask >> k) & 1U) ? SwitchState::kCross : SwitchState::kBar;
    }
    plan.permuted = perm;
    AssignBsas(plan);
    return plan;
  }
  return std::nullopt;
}

}  // namespace pairnet
