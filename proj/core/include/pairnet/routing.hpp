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

#ifndef PAIRNET_ROUTING_HPP_
#define PAIRNET_ROUTING_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pairnet/pair_list.hpp"
#include "pairnet/topology.hpp"
#include "pairnet/types.hpp"

namespace pairnet {

// Outcome of routing one demand.
//
// `permuted` is computed by the router's own bookkeeping, not by simulating
// the states, so comparing it against Propagate() checks both.
struct RoutingPlan {
  SwitchStates states;
  Permutation permuted;
  std::vector<std::pair<int, int>> bsa;  // bsa[j] = (permuted[2j], permuted[2j+1])
};

// Bubble-sort style peeling: the partner of the bottom photon cascades down
// through the largest remaining layer.
RoutingPlan RouteTriangular(int ports, const PairList& demand,
                            OpCounter* counter = nullptr);

// Strips the outer photons, routes the inner network with their partners
// virtually paired, then lets the outer chevron layer bring them together.
RoutingPlan RouteChevron(int ports, const PairList& demand,
                         OpCounter* counter = nullptr);

// Partner of the bottom photon moves down as soon as possible, the bottom
// photon moves up as late as possible, and the leftover brickwork of size
// N-2 is routed the same way.
RoutingPlan RouteBrickwork(int ports, const PairList& demand,
                           OpCounter* counter = nullptr);

// Dispatches on the design.
RoutingPlan Route(DesignKind design, int ports, const PairList& demand,
                  OpCounter* counter = nullptr);

inline constexpr int kDefaultBruteForceSwitchLimit = 24;

// Tries all 2^S assignments as a binary counter (bit k = switch id k, 1 =
// Cross) and returns the first one whose propagation pairs the demand, or
// nullopt. Throws Error{kBoundExceeded} if S > max_switches.
std::optional<RoutingPlan> BruteForceRoute(
    const Network& net, const PairList& demand,
    int max_switches = kDefaultBruteForceSwitchLimit);

// Fills `bsa` from `permuted`.
void AssignBsas(RoutingPlan& plan);

}  // namespace pairnet

#endif  // PAIRNET_ROUTING_HPP_
