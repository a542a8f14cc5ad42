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

#include "pairnet/verification.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "pairnet/error.hpp"
#include "pairnet/routing.hpp"
#include "pairnet/simulation.hpp"
#include "pairnet/topology.hpp"

namespace pairnet {
namespace {

void CheckPorts(int ports) {
  if (ports < 2 || ports % 2 != 0) {
    throw Error(ErrorCode::kInvalidPorts,
                "ports must be even and >= 2, got " + std::to_string(ports));
  }
}

// Returns false once the visitor asks to stop.
bool Enumerate(std::vector<bool>& used, std::vector<std::pair<int, int>>& acc,
               int ports, std::uint64_t& count,
               const std::function<bool(const PairList&)>& visit) {
  int first = 0;
  while (first < ports && used[first]) ++first;
  if (first == ports) {
    ++count;
    return visit(PairList(ports, acc));
  }
  used[first] = true;
  for (int second = first + 1; second < ports; ++second) {
    if (used[second]) continue;
    used[second] = true;
    acc.emplace_back(first, second);
    const bool more = Enumerate(used, acc, ports, count, visit);
    acc.pop_back();
    used[second] = false;
    if (!more) {
      used[first] = false;
      return false;
    }
  }
  used[first] = false;
  return true;
}

// Uniform draw in [0, bound) by rejection; stable across standard libraries,
// unlike std::uniform_int_distribution.
std::uint64_t Draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::string JoinInts(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::uint64_t ForEachPairList(
    int ports, const std::function<bool(const PairList&)>& visit) {
  CheckPorts(ports);
  std::vector<bool> used(ports, false);
  std::vector<std::pair<int, int>> acc;
  std::uint64_t count = 0;
  Enumerate(used, acc, ports, count, visit);
  return count;
}

std::vector<PairList> EnumeratePairLists(int ports) {
  std::vector<PairList> out;
  ForEachPairList(ports, [&](const PairList& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t PairListCount(int ports) {
  CheckPorts(ports);
  std::uint64_t count = 1;
  for (int k = ports - 1; k > 1; k -= 2) {
    if (count > std::numeric_limits<std::uint64_t>::max() / k) {
      throw Error(ErrorCode::kBoundExceeded,
                  "(N-1)!! overflows 64 bits for N = " + std::to_string(ports));
    }
    count *= k;
  }
  return count;
}

PairList WorstCasePairList(int ports) {
  CheckPorts(ports);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < ports / 2; ++i) pairs.emplace_back(i, ports - 1 - i);
  return PairList(ports, std::move(pairs));
}

int LowerBound(int ports) {
  CheckPorts(ports);
  int total = 0;
  for (int k = 1; k <= ports / 2 - 1; ++k) total += ports - 2 * k;
  return total;
}

PairList RandomPairList(int ports, std::mt19937_64& rng) {
  CheckPorts(ports);
  std::vector<int> order(ports);
  for (int i = 0; i < ports; ++i) order[i] = i;
  for (int i = ports - 1; i > 0; --i) {
    const auto j = static_cast<int>(Draw(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < ports; i += 2) pairs.emplace_back(order[i], order[i + 1]);
  return PairList(ports, std::move(pairs));
}

VerificationReport VerifyDesign(DesignKind design, int ports,
                                const VerifyMode& mode) {
  CheckPorts(ports);
  if (mode.kind == VerifyModeKind::kExhaustive && ports > mode.exhaustive_cap) {
    throw Error(ErrorCode::kBoundExceeded,
                "exhaustive verification is capped at N = " +
                    std::to_string(mode.exhaustive_cap) + ", got " +
                    std::to_string(ports));
  }
  if (mode.kind == VerifyModeKind::kRandom && mode.samples <= 0) {
    throw Error(ErrorCode::kInvalidInput,
                "random verification needs a positive sample count");
  }

  const Network net = BuildNetwork(design, ports);
  VerificationReport report;
  report.design = design;
  report.ports = ports;
  report.mode = mode;
  report.empirical_max_depth = 0;
  report.empirical_min_depth = std::numeric_limits<int>::max();

  auto check = [&](const PairList& demand) {
    ++report.demands_checked;
    RoutingPlan plan;
    try {
      plan = Route(design, ports, demand);
    } catch (const Error& e) {
      report.failures.push_back({demand.ToString(),
                                 std::string("router error: ") + e.what()});
      return true;
    }
    const Permutation perm = Propagate(net, plan.states);
    std::string diagnostic;
    if (!IsPermutation(perm)) {
      diagnostic = "propagation is not a bijection";
    } else if (perm != plan.permuted) {
      diagnostic = "router predicted (" + JoinInts(plan.permuted) +
                   ") but propagation gives (" + JoinInts(perm) + ")";
    } else {
      const PairingReport pairing = CheckPairing(perm, demand);
      if (!pairing.ok) {
        std::vector<int> bad(pairing.mismatches.begin(),
                             pairing.mismatches.end());
        diagnostic = "mismatched BSAs " + JoinInts(bad) + " in output (" +
                     JoinInts(perm) + ")";
      }
    }
    if (!diagnostic.empty()) {
      report.failures.push_back({demand.ToString(), std::move(diagnostic)});
      return true;
    }
    const DepthVector depths = TraversalDepths(net, plan.states);
    const auto [lo, hi] = std::minmax_element(depths.begin(), depths.end());
    report.empirical_max_depth = std::max(report.empirical_max_depth, *hi);
    report.empirical_min_depth = std::min(report.empirical_min_depth, *lo);
    const int crosses = static_cast<int>(
        std::count(plan.states.begin(), plan.states.end(), SwitchState::kCross));
    report.max_cross_count = std::max(report.max_cross_count, crosses);
    if (crosses == net.size()) ++report.saturating_demands;
    return true;
  };

  if (mode.kind == VerifyModeKind::kExhaustive) {
    ForEachPairList(ports, check);
  } else {
    std::mt19937_64 rng(mode.seed);
    for (int s = 0; s < mode.samples; ++s) check(RandomPairList(ports, rng));
  }
  if (report.empirical_min_depth == std::numeric_limits<int>::max()) {
    report.empirical_min_depth = 0;
  }

  const RoutingPlan worst = Route(design, ports, WorstCasePairList(ports));
  report.worst_case_saturates =
      std::all_of(worst.states.begin(), worst.states.end(),
                  [](SwitchState s) { return s == SwitchState::kCross; });

  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const VerificationFailure& x,
                      const VerificationFailure& y) {
                     return x.demand < y.demand;
                   });
  return report;
}

bool MinimalityReport::pass() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](DeletionOutcome o) {
    return o == DeletionOutcome::kUnroutable;
  });
}

MinimalityReport VerifyMinimality(DesignKind design, int ports,
                                  int max_switches) {
  const Network net = BuildNetwork(design, ports);
  if (net.size() - 1 > max_switches) {
    throw Error(ErrorCode::kBoundExceeded,
                "minimality search needs 2^" + std::to_string(net.size() - 1) +
                    " assignments per deletion, limit is 2^" +
                    std::to_string(max_switches));
  }
  const PairList worst = WorstCasePairList(ports);
  MinimalityReport report;
  report.design = design;
  report.ports = ports;
  for (int id = 0; id < net.size(); ++id) {
    const auto plan = BruteForceRoute(net.WithoutSwitch(id), worst, max_switches);
    report.outcomes.push_back(plan ? DeletionOutcome::kRoutable
                                   : DeletionOutcome::kUnroutable);
  }
  return report;
}

}  // namespace pairnet
