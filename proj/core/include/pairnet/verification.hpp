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

#ifndef PAIRNET_VERIFICATION_HPP_
#define PAIRNET_VERIFICATION_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pairnet/pair_list.hpp"
#include "pairnet/types.hpp"

namespace pairnet {

// Calls `visit` on every perfect matching of 0..ports-1, in lexicographic
// order of the canonical pair sequence. Stops early if `visit` returns false.
// Returns the number of matchings visited.
std::uint64_t ForEachPairList(int ports,
                              const std::function<bool(const PairList&)>& visit);

// Materialized form of ForEachPairList; (ports-1)!! entries.
std::vector<PairList> EnumeratePairLists(int ports);

// (ports-1)!!
std::uint64_t PairListCount(int ports);

// {(0,N-1), (1,N-2), ..., (N/2-1, N/2)}
PairList WorstCasePairList(int ports);

// N(N-2)/4
int LowerBound(int ports);

// Uniform perfect matching from a seeded 64-bit Mersenne Twister: a
// Fisher-Yates shuffle of 0..N-1 paired consecutively. The bounded draw is
// done here rather than through std::uniform_int_distribution so the
// sequence does not depend on the standard library implementation.
PairList RandomPairList(int ports, std::mt19937_64& rng);

enum class VerifyModeKind { kExhaustive, kRandom };

struct VerifyMode {
  VerifyModeKind kind = VerifyModeKind::kExhaustive;
  int samples = 0;
  std::uint64_t seed = 0;
  int exhaustive_cap = 12;

  static VerifyMode Exhaustive(int cap = 12) {
    return {VerifyModeKind::kExhaustive, 0, 0, cap};
  }
  static VerifyMode Random(int samples, std::uint64_t seed) {
    return {VerifyModeKind::kRandom, samples, seed, 12};
  }
};

struct VerificationFailure {
  std::string demand;  // canonical text form
  std::string diagnostic;
};

struct VerificationReport {
  DesignKind design = DesignKind::kTriangular;
  int ports = 0;
  VerifyMode mode;
  std::uint64_t demands_checked = 0;
  std::vector<VerificationFailure> failures;  // sorted by demand text
  int empirical_max_depth = 0;
  int empirical_min_depth = 0;
  int max_cross_count = 0;
  // Demands whose routing put every switch in Cross.
  std::uint64_t saturating_demands = 0;
  bool worst_case_saturates = false;

  bool pass() const { return failures.empty(); }
};

// Routes every demand of the mode with the design's router, simulates it and
// checks the pairing. Throws Error{kBoundExceeded} if exhaustive mode is
// asked for more than mode.exhaustive_cap ports.
VerificationReport VerifyDesign(DesignKind design, int ports,
                                const VerifyMode& mode);

enum class DeletionOutcome { kUnroutable, kRoutable };

struct MinimalityReport {
  DesignKind design = DesignKind::kTriangular;
  int ports = 0;
  std::vector<DeletionOutcome> outcomes;  // indexed by deleted switch id

  bool pass() const;
};

// Deletes each switch in turn and brute-forces the worst-case demand on the
// damaged network. Throws Error{kBoundExceeded} when S-1 exceeds
// max_switches.
MinimalityReport VerifyMinimality(
    DesignKind design, int ports, int max_switches = 24);

}  // namespace pairnet

#endif  // PAIRNET_VERIFICATION_HPP_
