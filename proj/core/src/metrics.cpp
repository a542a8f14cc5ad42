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

#include "pairnet/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "pairnet/error.hpp"

namespace pairnet {
namespace {

int Log2(int n) {
  int k = 0;
  while ((1 << (k + 1)) <= n) ++k;
  return k;
}

long long OursSwitches(long long n) { return n * (n - 2) / 4; }
long long SpankeBenesSwitches(long long n) { return n * (n - 1) / 2; }

void CheckPorts(int ports, int minimum) {
  if (ports < minimum || ports % 2 != 0) {
    throw Error(ErrorCode::kInvalidPorts,
                "ports must be even and >= " + std::to_string(minimum) +
                    ", got " + std::to_string(ports));
  }
}

// Left-aligned first column, right-aligned rest.
std::string Align(const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string Opt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

bool IsPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

DepthStats ComputeDepthStats(DesignKind design, int ports,
                             const VerificationReport* report) {
  CheckPorts(ports, 4);
  DepthStats s;
  s.design = design;
  s.ports = ports;
  const int half = ports / 2;
  switch (design) {
    case DesignKind::kTriangular:
      s.formula_max = ports - 2;
      s.formula_min = 0;
      s.formula_delta = ports - 2;
      break;
    case DesignKind::kChevron:
      s.formula_max = half % 2 == 0 ? ports - 2 : ports - 3;
      s.formula_min = half % 2 == 0 ? half - 2 : half - 3;
      s.formula_delta = half;
      break;
    case DesignKind::kBrickwork:
      s.formula_max = half;
      s.formula_min = (ports + 3) / 4 - 1;  // ceil(N/4 - 1)
      s.formula_delta = ports / 4 + 1;
      break;
  }
  if (report != nullptr) {
    s.empirical_max = report->empirical_max_depth;
    s.empirical_min = report->empirical_min_depth;
    s.empirical_delta = report->empirical_max_depth - report->empirical_min_depth;
  }
  return s;
}

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kOurs:
      return "ours";
    case Scheme::kSpankeBenes:
      return "spanke_benes";
    case Scheme::kBenes:
      return "benes";
    case Scheme::kWaksman:
      return "waksman";
  }
  return "?";
}

ComparisonTable CountTable(std::span<const int> ports_list) {
  ComparisonTable table;
  for (int n : ports_list) {
    CheckPorts(n, 2);
    table.rows.push_back({Scheme::kOurs, n, true, OursSwitches(n), 0, 2});
    table.rows.push_back(
        {Scheme::kSpankeBenes, n, true, SpankeBenesSwitches(n), 0, 2});
    if (IsPowerOfTwo(n)) {
      const long long lg = Log2(n);
      const long long cross = n * (n - lg - 1) / 2;
      const int stages = static_cast<int>(4 * lg - 2);
      table.rows.push_back(
          {Scheme::kBenes, n, false, n * lg - n / 2, cross, stages});
      table.rows.push_back(
          {Scheme::kWaksman, n, false, n * lg - n + 1, cross, stages});
    }
    table.ratios.emplace_back(n, static_cast<double>(OursSwitches(n)) /
                                     static_cast<double>(SpankeBenesSwitches(n)));
  }
  return table;
}

std::vector<SeriesRow> BuildSeries(std::span<const int> ports_list) {
  std::vector<SeriesRow> rows;
  for (int n : ports_list) {
    CheckPorts(n, 4);
    for (DesignKind d : kAllDesigns) {
      rows.push_back({std::string(DesignName(d)), n, OursSwitches(n), 0,
                      ComputeDepthStats(d, n).formula_max});
    }
    rows.push_back({"spanke_benes", n, SpankeBenesSwitches(n), 0, n - 1});
    if (IsPowerOfTwo(n)) {
      const long long lg = Log2(n);
      const long long cross = n * (n - lg - 1) / 2;
      rows.push_back({"benes", n, n * lg - n / 2, cross, std::nullopt});
      rows.push_back({"waksman", n, n * lg - n + 1, cross, std::nullopt});
    }
  }
  return rows;
}

std::string EmitCsv(std::span<const SeriesRow> rows) {
  std::string out = "scheme,N,switches,crosspoints,max_depth\n";
  auto cell = [](const auto& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const SeriesRow& r : rows) {
    out += r.scheme + "," + std::to_string(r.ports) + "," + cell(r.switches) +
           "," + cell(r.crosspoints) + "," + cell(r.max_depth) + "\n";
  }
  return out;
}

std::string FormatComparisonTable(const ComparisonTable& table) {
  std::vector<std::vector<std::string>> cells = {
      {"scheme", "N", "planar", "switches", "crosspoints", "stages"}};
  for (const ComparisonRow& r : table.rows) {
    cells.push_back({std::string(SchemeName(r.scheme)), std::to_string(r.ports),
                     r.planar ? "yes" : "no", std::to_string(r.switches),
                     std::to_string(r.crosspoints), std::to_string(r.stages)});
  }
  std::string out = Align(cells);
  if (!table.ratios.empty()) {
    out += "\n";
    std::vector<std::vector<std::string>> ratio_cells = {
        {"N", "ours/spanke_benes"}};
    for (const auto& [n, ratio] : table.ratios) {
      std::ostringstream text;
      text.precision(4);
      text << std::fixed << ratio;
      ratio_cells.push_back({std::to_string(n), text.str()});
    }
    out += Align(ratio_cells);
  }
  return out;
}

std::string FormatDepthTable(std::span<const DepthStats> stats) {
  std::vector<std::vector<std::string>> cells = {
      {"design", "N", "max", "min", "delta", "emp_max", "emp_min", "emp_delta"}};
  for (const DepthStats& s : stats) {
    cells.push_back({std::string(DesignName(s.design)), std::to_string(s.ports),
                     std::to_string(s.formula_max), std::to_string(s.formula_min),
                     std::to_string(s.formula_delta), Opt(s.empirical_max),
                     Opt(s.empirical_min), Opt(s.empirical_delta)});
  }
  return Align(cells);
}

}  // namespace pairnet
