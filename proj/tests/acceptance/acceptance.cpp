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

// Acceptance checks, one line per criterion. Exit status is nonzero when any
// selected criterion fails. `--only K` runs criterion K alone.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pairnet/metrics.hpp"
#include "pairnet/routing.hpp"
#include "pairnet/simulation.hpp"
#include "pairnet/topology.hpp"
#include "pairnet/verification.hpp"

namespace {

using namespace pairnet;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::pair<bool, std::string>> sub;  // extra lines
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

// Exhaustive reports are shared by C2 and C4.
const VerificationReport& Exhaustive(DesignKind d, int n) {
  static std::map<std::pair<DesignKind, int>, VerificationReport> cache;
  auto it = cache.find({d, n});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(d, n),
                       VerifyDesign(d, n, VerifyMode::Exhaustive()))
             .first;
  }
  return it->second;
}

Outcome OptimalCount() {
  const auto start = Clock::now();
  Outcome o;
  int checked = 0;
  for (DesignKind d : kAllDesigns) {
    for (int n = 4; n <= 64; n += 2) {
      const Network net = BuildNetwork(d, n);
      ++checked;
      if (net.size() != n * (n - 2) / 4 || !ValidateNetwork(net).ok) {
        o.pass = false;
        o.detail += std::string(DesignName(d)) + " N=" + std::to_string(n) +
                    " has " + std::to_string(net.size()) + "; ";
      }
    }
    o.pass = o.pass && BuildNetwork(d, 4).size() == 2 &&
             BuildNetwork(d, 12).size() == 30 && BuildNetwork(d, 16).size() == 56;
  }
  const double t = Seconds(start);
  o.pass = o.pass && t < 1.0;
  o.detail += std::to_string(checked) +
              " networks have N(N-2)/4 switches (4->2, 12->30, 16->56) in " +
              Fixed(t, 3) + "s (limit 1s)";
  return o;
}

Outcome ExhaustiveNonBlocking() {
  const auto start = Clock::now();
  Outcome o;
  std::uint64_t demands = 0;
  std::size_t failures = 0;
  for (DesignKind d : kAllDesigns) {
    for (int n = 4; n <= 12; n += 2) {
      const VerificationReport& r = Exhaustive(d, n);
      demands += r.demands_checked;
      failures += r.failures.size();
      if (!r.pass() || r.demands_checked != PairListCount(n)) {
        o.pass = false;
        o.detail += std::string(DesignName(d)) + " N=" + std::to_string(n) +
                    ": " + std::to_string(r.failures.size()) + " failures; ";
      }
    }
  }
  const double t = Seconds(start);
  o.pass = o.pass && t < 60.0;
  o.detail += std::to_string(demands) +
              " demands (3+15+105+945+10395 per design) routed and simulated, " +
              std::to_string(failures) + " failures, " +
              Fixed(t) + "s (limit 60s)";
  return o;
}

Outcome SampledNonBlocking() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t failures = 0;
  for (DesignKind d : kAllDesigns) {
    for (int n : {16, 32, 64}) {
      const VerificationReport r =
          VerifyDesign(d, n, VerifyMode::Random(1000, 20260101 + n));
      failures += r.failures.size();
    }
  }
  const double t = Seconds(start);
  o.pass = failures == 0 && t < 30.0;
  o.detail = "9000 seeded demands at N=16,32,64, " + std::to_string(failures) +
             " failures, " + Fixed(t) + "s (limit 30s)";
  return o;
}

Outcome DepthFormulas() {
  Outcome o;
  for (DesignKind d : kAllDesigns) {
    std::string max_text;
    std::string min_text;
    std::string delta_text;
    bool max_ok = true;
    bool min_ok = true;
    bool delta_ok = true;
    for (int n = 4; n <= 12; n += 2) {
      const DepthStats s = ComputeDepthStats(d, n, &Exhaustive(d, n));
      max_ok = max_ok && *s.empirical_max == s.formula_max;
      min_ok = min_ok && *s.empirical_min == s.formula_min;
      delta_ok = delta_ok && *s.empirical_delta == s.formula_delta;
      const std::string sep = n == 4 ? "" : " ";
      max_text += sep + std::to_string(*s.empirical_max) + "/" +
                  std::to_string(s.formula_max);
      min_text += sep + std::to_string(*s.empirical_min) + "/" +
                  std::to_string(s.formula_min);
      delta_text += sep + std::to_string(*s.empirical_delta) + "/" +
                    std::to_string(s.formula_delta);
    }
    const std::string name(DesignName(d));
    o.sub.push_back({max_ok, name + " max depth, N=4..12 (routed/formula): " +
                                 max_text});
    o.sub.push_back({min_ok, name + " min depth, N=4..12 (routed/formula): " +
                                 min_text});
    o.sub.push_back({delta_ok, name + " delta, N=4..12 (routed/formula): " +
                                   delta_text});
    o.pass = o.pass && max_ok && min_ok && delta_ok;
  }
  o.detail = "exhaustive routed depth extrema equal the closed forms";
  return o;
}

Outcome WorstCaseSaturation() {
  Outcome o;
  int checked = 0;
  for (DesignKind d : kAllDesigns) {
    for (int n = 2; n <= 12; n += 2) {
      const RoutingPlan plan = Route(d, n, WorstCasePairList(n));
      int crosses = 0;
      for (SwitchState s : plan.states) crosses += s == SwitchState::kCross;
      ++checked;
      if (crosses != n * (n - 2) / 4) {
        o.pass = false;
        o.detail += std::string(DesignName(d)) + " N=" + std::to_string(n) +
                    " has " + std::to_string(crosses) + " Cross; ";
      }
    }
  }
  o.detail += std::to_string(checked) +
              " worst-case routings, every switch Cross (count N(N-2)/4)";
  return o;
}

Outcome Minimality() {
  const auto start = Clock::now();
  Outcome o;
  int deletions = 0;
  for (DesignKind d : kAllDesigns) {
    for (int n : {4, 6, 8}) {
      const MinimalityReport r = VerifyMinimality(d, n);
      deletions += static_cast<int>(r.outcomes.size());
      if (!r.pass()) {
        o.pass = false;
        o.detail += std::string(DesignName(d)) + " N=" + std::to_string(n) +
                    " survives a deletion; ";
      }
    }
  }
  const double t = Seconds(start);
  o.pass = o.pass && t < 60.0;
  o.detail += std::to_string(deletions) +
              " single-switch deletions, worst case unroutable after each, " +
              Fixed(t) + "s (limit 60s)";
  return o;
}

Outcome ComparisonTableCheck() {
  Outcome o;
  std::vector<int> ports;
  for (int n = 4; n <= 64; n += 2) ports.push_back(n);
  const ComparisonTable t = CountTable(ports);
  auto row = [&](Scheme s, int n) -> const ComparisonRow* {
    for (const ComparisonRow& r : t.rows) {
      if (r.scheme == s && r.ports == n) return &r;
    }
    return nullptr;
  };
  for (int n : ports) {
    const long long lg = IsPowerOfTwo(n) ? __builtin_ctz(n) : 0;
    bool ok = row(Scheme::kOurs, n)->switches == n * (n - 2) / 4 &&
              row(Scheme::kSpankeBenes, n)->switches == n * (n - 1) / 2 &&
              row(Scheme::kOurs, n)->stages == 2;
    if (IsPowerOfTwo(n)) {
      ok = ok && row(Scheme::kBenes, n)->switches == n * lg - n / 2 &&
           row(Scheme::kWaksman, n)->switches == n * lg - n + 1 &&
           row(Scheme::kBenes, n)->crosspoints == n * (n - lg - 1) / 2 &&
           row(Scheme::kBenes, n)->stages == 4 * lg - 2;
    } else {
      ok = ok && row(Scheme::kBenes, n) == nullptr;
    }
    o.pass = o.pass && ok;
  }
  const ComparisonRow* ours12 = row(Scheme::kOurs, 12);
  const ComparisonRow* sb12 = row(Scheme::kSpankeBenes, 12);
  const ComparisonRow* benes8 = row(Scheme::kBenes, 8);
  const ComparisonRow* waksman8 = row(Scheme::kWaksman, 8);
  const double ratio =
      static_cast<double>(ours12->switches) / static_cast<double>(sb12->switches);
  o.pass = o.pass && ours12->switches == 30 && sb12->switches == 66 &&
           ratio < 0.5 && benes8->switches == 20 && benes8->crosspoints == 16 &&
           waksman8->switches == 17 && waksman8->crosspoints == 16;
  o.detail = "N=12 ours/spanke_benes = " + std::to_string(ours12->switches) +
             "/" + std::to_string(sb12->switches) + " = " + Fixed(ratio, 4) +
             "; N=8 benes " + std::to_string(benes8->switches) + " + " +
             std::to_string(benes8->crosspoints) + " crosspoints, waksman " +
             std::to_string(waksman8->switches);
  return o;
}

Outcome Complexity() {
  Outcome o;
  constexpr int kSamples = 200;
  for (DesignKind d : kAllDesigns) {
    std::map<int, double> mean;
    for (int n : {16, 32, 64}) {
      std::mt19937_64 rng(4242 + n);
      double total = 0;
      for (int s = 0; s < kSamples; ++s) {
        OpCounter ops;
        Route(d, n, RandomPairList(n, rng), &ops);
        total += static_cast<double>(ops.ops);
      }
      mean[n] = total / kSamples;
    }
    const double r16 = mean[32] / mean[16];
    const double r32 = mean[64] / mean[32];
    const bool ok = r16 >= 3 && r16 <= 5 && r32 >= 3 && r32 <= 5;
    o.pass = o.pass && ok;
    o.sub.push_back({ok, std::string(DesignName(d)) +
                             " ops(32)/ops(16) = " + Fixed(r16) +
                             ", ops(64)/ops(32) = " + Fixed(r32)});
  }
  o.detail = "mean instrumented operation counts over seeded demands, ratio in "
             "[3, 5]";
  return o;
}

Outcome ReverseMode() {
  Outcome o;
  std::uint64_t assignments = 0;
  for (DesignKind d : kAllDesigns) {
    for (int n : {4, 6, 8}) {
      const Network net = BuildNetwork(d, n);
      const Network rev = ReverseNetwork(net);
      const int count = net.size();
      SwitchStates fwd(count);
      SwitchStates back(count);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
        for (int k = 0; k < count; ++k) {
          fwd[k] = ((mask >> k) & 1U) ? SwitchState::kCross : SwitchState::kBar;
          back[count - 1 - k] = fwd[k];
        }
        ++assignments;
        if (Propagate(rev, back) != Inverse(Propagate(net, fwd))) {
          o.pass = false;
          o.detail += std::string(DesignName(d)) + " N=" + std::to_string(n) +
                      " mask " + std::to_string(mask) + "; ";
          break;
        }
      }
    }
  }
  o.detail += std::to_string(assignments) +
              " state assignments, reversed network gives the inverse "
              "permutation";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: pairnet_acceptance [--only K]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "optimal switch count", OptimalCount},
      {2, "exhaustive non-blocking", ExhaustiveNonBlocking},
      {3, "sampled non-blocking", SampledNonBlocking},
      {4, "depth formulas", DepthFormulas},
      {5, "worst-case saturation", WorstCaseSaturation},
      {6, "single-switch minimality", Minimality},
      {7, "comparison table", ComparisonTableCheck},
      {8, "routing complexity", Complexity},
      {9, "reverse mode", ReverseMode},
  };

  bool all = true;
  bool ran = false;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = Clock::now();
    const Outcome o = c.run();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  C" << c.id << " " << c.name
              << ": " << o.detail << " [" << Fixed(Seconds(start)) << "s]\n";
    for (const auto& [ok, text] : o.sub) {
      std::cout << "      " << (ok ? "pass" : "FAIL") << "  " << text << "\n";
    }
    all = all && o.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
