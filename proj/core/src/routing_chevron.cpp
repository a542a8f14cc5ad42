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
#include <utility>

#include "pairnet/error.hpp"
#include "pairnet/routing.hpp"
#include "routing_internal.hpp"

namespace pairnet {
namespace {

class ChevronRouter {
 public:
  ChevronRouter(const Network& net, const PairList& demand, OpCounter& ops)
      : net_(net), partner_(demand.partners()), ops_(ops) {
    states_.assign(net.size(), SwitchState::kBar);
    // Switch ids of each layer in traversal order.
    layers_.resize(net.LayerCount() + 1);
    for (const SwitchPoint& sw : net.switches()) {
      layers_[sw.layer].push_back(sw.id);
    }
  }

  // `photons` enter local lines 0..n-1 of the sub-network whose top line is
  // `offset`; returns their order at its output.
  std::vector<int> Solve(const std::vector<int>& photons, int offset) {
    const int n = static_cast<int>(photons.size());
    if (n == 2) return photons;
    const int layer = n / 2 - 1;
    const int top = photons.front();
    const int bot = photons.back();
    const std::vector<int> inner_in(photons.begin() + 1, photons.end() - 1);
    ops_.Add(n);

    int bar = -1;  // local line of the one Bar switch, if any
    std::vector<int> inner;
    if (partner_[top] == bot) {
      inner = Solve(inner_in, offset + 1);
    } else {
      // Pair the two stragglers' partners virtually so the inner network
      // delivers them adjacent.
      const int tp = partner_[top];
      const int bp = partner_[bot];
      partner_[tp] = bp;
      partner_[bp] = tp;
      inner = Solve(inner_in, offset + 1);
      partner_[tp] = top;
      partner_[bp] = bot;

      const int a = Position(inner, tp) + 1;
      const int b = Position(inner, bp) + 1;
      const int p = std::min(a, b);
      const bool correct = a < b;
      const bool upper_rule = layer % 2 == 0 ? p <= layer - 1 : p <= layer - 2;
      if (layer % 2 == 1 && p == layer) {
        bar = correct ? layer : layer - 1;
      } else if (upper_rule) {
        bar = correct ? p : p - 1;
      } else {
        bar = correct ? p : p + 1;
      }
    }

    std::vector<int> out;
    out.reserve(n);
    out.push_back(top);
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(bot);
    for (int id : layers_[layer]) {
      const int local = net_.switches()[id].line - offset;
      if (local == bar) {
        states_[id] = SwitchState::kBar;
      } else {
        states_[id] = SwitchState::kCross;
        std::swap(out[local], out[local + 1]);
      }
    }
    ops_.Add(layers_[layer].size());
    return out;
  }

  SwitchStates TakeStates() { return std::move(states_); }

 private:
  int Position(const std::vector<int>& v, int photon) {
    const auto it = std::find(v.begin(), v.end(), photon);
    ops_.Add(static_cast<std::uint64_t>(it - v.begin()) + 1);
    if (it == v.end()) {
      throw Error(ErrorCode::kInvalidInput, "photon lost during routing");
    }
    return static_cast<int>(it - v.begin());
  }

  const Network& net_;
  std::vector<int> partner_;
  OpCounter& ops_;
  SwitchStates states_;
  std::vector<std::vector<int>> layers_;
};

}  // namespace

RoutingPlan RouteChevron(int ports, const PairList& demand,
                         OpCounter* counter) {
  internal::CheckDemand(ports, demand);
  const Network net = BuildNetwork(DesignKind::kChevron, ports);
  OpCounter local;
  ChevronRouter router(net, demand, counter != nullptr ? *counter : local);
  std::vector<int> photons(ports);
  for (int i = 0; i < ports; ++i) photons[i] = i;

  RoutingPlan plan;
  plan.permuted = router.Solve(photons, 0);
  plan.states = router.TakeStates();
  AssignBsas(plan);
  return plan;
}

}  // namespace pairnet
