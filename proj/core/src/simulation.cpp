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

#include "pairnet/simulation.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "pairnet/error.hpp"

namespace pairnet {
namespace {

void CheckStates(const Network& net, const SwitchStates& states) {
  if (static_cast<int>(states.size()) != net.size()) {
    throw Error(ErrorCode::kIncompleteStates,
                "expected " + std::to_string(net.size()) + " states, got " +
                    std::to_string(states.size()));
  }
}

void CheckLine(const Network& net, const SwitchPoint& sw) {
  if (sw.line < 0 || sw.line + 1 >= net.ports()) {
    throw Error(ErrorCode::kInvalidInput,
                "switch " + std::to_string(sw.id) + " sits off the network");
  }
}

}  // namespace

Permutation Propagate(const Network& net, const SwitchStates& states) {
  CheckStates(net, states);
  Permutation lines(net.ports());
  std::iota(lines.begin(), lines.end(), 0);
  for (size_t k = 0; k < states.size(); ++k) {
    const SwitchPoint& sw = net.switches()[k];
    CheckLine(net, sw);
    if (states[k] == SwitchState::kCross) {
      std::swap(lines[sw.line], lines[sw.line + 1]);
    }
  }
  return lines;
}

DepthVector TraversalDepths(const Network& net, const SwitchStates& states) {
  CheckStates(net, states);
  Permutation lines(net.ports());
  std::iota(lines.begin(), lines.end(), 0);
  DepthVector depth(net.ports(), 0);
  for (size_t k = 0; k < states.size(); ++k) {
    const SwitchPoint& sw = net.switches()[k];
    CheckLine(net, sw);
    ++depth[lines[sw.line]];
    ++depth[lines[sw.line + 1]];
    if (states[k] == SwitchState::kCross) {
      std::swap(lines[sw.line], lines[sw.line + 1]);
    }
  }
  return depth;
}

PairingReport CheckPairing(const Permutation& perm, const PairList& demand) {
  if (static_cast<int>(perm.size()) != demand.ports()) {
    throw Error(ErrorCode::kInvalidInput,
                "permutation length does not match the demand");
  }
  PairingReport report;
  for (int j = 0; 2 * j + 1 < static_cast<int>(perm.size()); ++j) {
    const int a = perm[2 * j];
    const int b = perm[2 * j + 1];
    if (demand.partner(a) == b) {
      report.matched.push_back({j, {a, b}});
    } else {
      report.mismatches.push_back(j);
    }
  }
  report.ok = report.mismatches.empty();
  return report;
}

std::vector<double> EstimateLoss(const DepthVector& depths,
                                 double per_switch_db, double insertion_db) {
  if (per_switch_db < 0 || insertion_db < 0) {
    throw Error(ErrorCode::kInvalidInput, "loss figures must be >= 0");
  }
  std::vector<double> loss;
  loss.reserve(depths.size());
  for (int d : depths) loss.push_back(insertion_db + d * per_switch_db);
  return loss;
}

bool IsPermutation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation Inverse(const Permutation& perm) {
  Permutation inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace pairnet
