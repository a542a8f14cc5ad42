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

#ifndef PAIRNET_METRICS_HPP_
#define PAIRNET_METRICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pairnet/types.hpp"
#include "pairnet/verification.hpp"

namespace pairnet {

struct DepthStats {
  DesignKind design = DesignKind::kTriangular;
  int ports = 0;
  int formula_max = 0;
  int formula_min = 0;
  int formula_delta = 0;
  std::optional<int> empirical_max;
  std::optional<int> empirical_min;
  std::optional<int> empirical_delta;
};

// Closed-form depth figures for the design; empirical fields are copied from
// `report` when given. Throws Error{kInvalidPorts} for odd ports or ports < 4.
DepthStats ComputeDepthStats(DesignKind design, int ports,
                             const VerificationReport* report = nullptr);

enum class Scheme { kOurs, kSpankeBenes, kBenes, kWaksman };

std::string_view SchemeName(Scheme scheme);

struct ComparisonRow {
  Scheme scheme = Scheme::kOurs;
  int ports = 0;
  bool planar = true;
  long long switches = 0;
  long long crosspoints = 0;
  int stages = 2;  // coupling & decoupling stages
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  // (ports, ours / spanke_benes) for every requested N.
  std::vector<std::pair<int, double>> ratios;
};

// Resource counts per scheme. Beneš and Waksman rows appear only for N a
// power of two.
ComparisonTable CountTable(std::span<const int> ports_list);

// One row of the CSV series behind the depth and switch-count plots.
struct SeriesRow {
  std::string scheme;
  int ports = 0;
  std::optional<long long> switches;
  std::optional<long long> crosspoints;
  std::optional<int> max_depth;
};

// Switch counts and maximum depths for the three designs, Spanke-Beneš, and
// (power-of-two N) Beneš and Waksman.
std::vector<SeriesRow> BuildSeries(std::span<const int> ports_list);

// "scheme,N,switches,crosspoints,max_depth" then one row per entry. Missing
// values are left empty.
std::string EmitCsv(std::span<const SeriesRow> rows);

// Aligned-column text for the CLI.
std::string FormatComparisonTable(const ComparisonTable& table);
std::string FormatDepthTable(std::span<const DepthStats> stats);

bool IsPowerOfTwo(int n);

}  // namespace pairnet

#endif  // PAIRNET_METRICS_HPP_
