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

#ifndef PAIRNET_SIMULATION_HPP_
#define PAIRNET_SIMULATION_HPP_

#include <utility>
#include <vector>

#include "pairnet/pair_list.hpp"
#include "pairnet/topology.hpp"
#include "pairnet/types.hpp"

namespace pairnet {

// Photon i starts on line i; switches apply in ascending id order and a Cross
// transposes the photons on its two lines. Throws Error{kIncompleteStates}
// when `states` does not cover exactly the network's switches.
Permutation Propagate(const Network& net, const SwitchStates& states);

// Like Propagate, but counts for every photon how many switch points it
// enters. Bar and Cross both count.
DepthVector TraversalDepths(const Network& net, const SwitchStates& states);

struct PairingReport {
  bool ok = true;
  std::vector<std::pair<int, std::pair<int, int>>> matched;  // (bsa, photons)
  std::vector<int> mismatches;                               // bsa indices
};

// ok iff {perm[2j], perm[2j+1]} is a demanded pair for every BSA j.
PairingReport CheckPairing(const Permutation& perm, const PairList& demand);

// Linear loss model: loss_i = insertion_db + depth_i * per_switch_db.
std::vector<double> EstimateLoss(const DepthVector& depths,
                                 double per_switch_db, double insertion_db);

bool IsPermutation(const Permutation& perm);
Permutation Inverse(const Permutation& perm);

}  // namespace pairnet

#endif  // PAIRNET_SIMULATION_HPP_
