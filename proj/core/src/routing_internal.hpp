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

#ifndef PAIRNET_SRC_ROUTING_INTERNAL_HPP_
#define PAIRNET_SRC_ROUTING_INTERNAL_HPP_

#include <vector>

#include "pairnet/pair_list.hpp"
#include "pairnet/topology.hpp"

namespace pairnet::internal {

void CheckDemand(int ports, const PairList& demand);

// Switch id by (layer, line); -1 where no switch sits.
class PlacementIndex {
 public:
  explicit PlacementIndex(const Network& net);

  int At(int layer, int line) const {
    return ids_[static_cast<size_t>(layer) * width_ + line];
  }

 private:
  int width_;
  std::vector<int> ids_;
};

}  // namespace pairnet::internal

#endif  // PAIRNET_SRC_ROUTING_INTERNAL_HPP_
