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

#include <benchmark/benchmark.h>

#include <random>

#include "pairnet/routing.hpp"
#include "pairnet/simulation.hpp"
#include "pairnet/topology.hpp"
#include "pairnet/verification.hpp"

namespace {

using pairnet::DesignKind;

template <DesignKind kDesign>
void BM_Route(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(17);
  std::vector<pairnet::PairList> demands;
  for (int i = 0; i < 64; ++i) demands.push_back(pairnet::RandomPairList(n, rng));
  size_t next = 0;
  for (auto _ : state) {
    auto plan = pairnet::Route(kDesign, n, demands[next++ % demands.size()]);
    benchmark::DoNotOptimize(plan);
  }
  state.SetComplexityN(n);
}

BENCHMARK(BM_Route<DesignKind::kTriangular>)
    ->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_Route<DesignKind::kChevron>)
    ->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_Route<DesignKind::kBrickwork>)
    ->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_Propagate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const pairnet::Network net = pairnet::BuildNetwork(DesignKind::kBrickwork, n);
  const pairnet::SwitchStates states(net.size(), pairnet::SwitchState::kCross);
  for (auto _ : state) {
    auto perm = pairnet::Propagate(net, states);
    benchmark::DoNotOptimize(perm);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Propagate)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_ExhaustiveVerify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = pairnet::VerifyDesign(DesignKind::kBrickwork, n,
                                        pairnet::VerifyMode::Exhaustive());
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_ExhaustiveVerify)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
