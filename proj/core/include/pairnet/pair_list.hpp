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

#ifndef PAIRNET_PAIR_LIST_HPP_
#define PAIRNET_PAIR_LIST_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pairnet {

// A perfect matching of photons 0..N-1: the demand a network must realize.
//
// Construction validates the matching (every index in range and used exactly
// once); a malformed demand throws Error{kInvalidDemand}. Pairs are stored in
// canonical form, each as (low, high) and sorted by low index, so two
// PairLists compare equal iff they describe the same matching.
class PairList {
 public:
  PairList(int ports, std::vector<std::pair<int, int>> pairs);

  // Parses "0-11,1-10,2-9". Whitespace is ignored.
  static PairList Parse(int ports, std::string_view text);

  int ports() const { return static_cast<int>(partner_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int partner(int photon) const { return partner_.at(photon); }
  const std::vector<int>& partners() const { return partner_; }
  bool Contains(int a, int b) const;

  // Canonical text form, e.g. "0-3,1-2".
  std::string ToString() const;

  friend bool operator==(const PairList& a, const PairList& b) {
    return a.pairs_ == b.pairs_;
  }
  friend bool operator<(const PairList& a, const PairList& b) {
    return a.pairs_ < b.pairs_;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> partner_;
};

}  // namespace pairnet

#endif  // PAIRNET_PAIR_LIST_HPP_
