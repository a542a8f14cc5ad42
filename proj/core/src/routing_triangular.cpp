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

#include <algorithm>

#include "pairnet/error.hpp"
#include "pairnet/routing.hpp"
#include "routing_internal.hpp"

namespace pairnet {

RoutingPlan RouteTriangular(int ports, const PairList& demand,
                            OpCounter* counter) {
  internal::CheckDemand(ports, demand);
  const Network net = BuildNetwork(DesignKind::kTriangular, ports);
  const internal::PlacementIndex index(net);
  OpCounter local;
  OpCounter& ops = counter != nullptr ? *counter : local;

  RoutingPlan plan;
  plan.states.assign(net.size(), SwitchState::kBar);
  std::vector<int> order(ports);
  for (int i = 0; i < ports; ++i) order[i] = i;

  for (int n = ports; n > 2; n -= 2) {
    const int layer = n / 2 - 1;
    const int wanted = demand.partner(order[n - 1]);
    const int i = static_cast<int>(
        std::find(order.begin(), order.begin() + n, wanted) - order.begin());
    ops.Add(i + 1);
    for (int j = 0; j <= n - 3; ++j) {
      plan.states[index.At(layer, j)] =
          j < i ? SwitchState::kBar : SwitchState::kCross;
    }
    ops.Add(n - 2);
    // The partner rides the Cross diagonal down to line n-2.
    std::rotate(order.begin() + i, order.begin() + i + 1,
                order.begin() + n - 1);
    ops.Add(n - 1 - i);
  }
  plan.permuted = std::move(order);
  AssignBsas(plan);
  return plan;
}

}  // namespace pairnet
