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

#include "pairnet/serialize.hpp"

#include <charconv>
#include <string>
#include <utility>

#include "json.hpp"
#include "pairnet/error.hpp"

namespace pairnet {
namespace {

using Json = nlohmann::ordered_json;

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json Parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("bad field \"") + key + "\": " + e.what());
  }
}

int ParseIndex(const std::string& key) {
  int value = -1;
  const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc() || ptr != key.data() + key.size() || value < 0) {
    throw Error(ErrorCode::kParseError, "bad index key \"" + key + "\"");
  }
  return value;
}

Json StatesJson(const SwitchStates& states) {
  Json out = Json::object();
  for (size_t k = 0; k < states.size(); ++k) {
    out[std::to_string(k)] = std::string(StateName(states[k]));
  }
  return out;
}

SwitchStates StatesFromMap(const Json& map, int switch_count) {
  if (!map.is_object()) {
    throw Error(ErrorCode::kParseError, "states must be a JSON object");
  }
  std::vector<std::optional<SwitchState>> slots(switch_count);
  for (const auto& [key, value] : map.items()) {
    const int id = ParseIndex(key);
    if (id >= switch_count || slots[id]) {
      throw Error(ErrorCode::kIncompleteStates,
                  "state key " + key + " is extra or repeated");
    }
    if (!value.is_string()) {
      throw Error(ErrorCode::kParseError, "state for " + key + " must be a string");
    }
    const auto state = ParseState(value.get<std::string>());
    if (!state) {
      throw Error(ErrorCode::kParseError,
                  "unknown state \"" + value.get<std::string>() + "\"");
    }
    slots[id] = *state;
  }
  SwitchStates states;
  states.reserve(switch_count);
  for (int k = 0; k < switch_count; ++k) {
    if (!slots[k]) {
      throw Error(ErrorCode::kIncompleteStates,
                  "missing state for switch " + std::to_string(k));
    }
    states.push_back(*slots[k]);
  }
  return states;
}

}  // namespace

std::string NetworkToJson(const Network& net) {
  Json j;
  j["design"] = std::string(DesignName(net.design()));
  j["ports"] = net.ports();
  j["reversed"] = net.reversed();
  Json switches = Json::array();
  for (const SwitchPoint& sw : net.switches()) {
    switches.push_back(
        {{"id", sw.id}, {"layer", sw.layer}, {"line", sw.line}, {"col", sw.col}});
  }
  j["switches"] = std::move(switches);
  return Dump(j);
}

Network NetworkFromJson(std::string_view text) {
  const Json j = Parse(text);
  const auto design_name = Field<std::string>(j, "design");
  const auto design = ParseDesign(design_name);
  if (!design) {
    throw Error(ErrorCode::kParseError, "unknown design \"" + design_name + "\"");
  }
  const int ports = Field<int>(j, "ports");
  const bool reversed = j.contains("reversed") ? Field<bool>(j, "reversed") : false;
  const Json switches = Field<Json>(j, "switches");
  if (!switches.is_array()) {
    throw Error(ErrorCode::kParseError, "\"switches\" must be an array");
  }
  std::vector<SwitchPoint> points;
  for (const Json& s : switches) {
    points.push_back({Field<int>(s, "id"), Field<int>(s, "layer"),
                      Field<int>(s, "line"), Field<int>(s, "col")});
  }
  return Network(*design, ports, std::move(points), reversed);
}

std::string PlanToJson(const RoutingPlan& plan) {
  Json j;
  j["states"] = StatesJson(plan.states);
  j["permuted"] = plan.permuted;
  Json bsa = Json::object();
  for (size_t k = 0; k < plan.bsa.size(); ++k) {
    bsa[std::to_string(k)] = {plan.bsa[k].first, plan.bsa[k].second};
  }
  j["bsa"] = std::move(bsa);
  return Dump(j);
}

RoutingPlan PlanFromJson(std::string_view text) {
  const Json j = Parse(text);
  const Json states = Field<Json>(j, "states");
  RoutingPlan plan;
  plan.states = StatesFromMap(states, static_cast<int>(states.size()));
  plan.permuted = Field<std::vector<int>>(j, "permuted");
  if (j.contains("bsa")) {
    const Json bsa = Field<Json>(j, "bsa");
    plan.bsa.resize(bsa.size());
    std::vector<bool> seen(bsa.size(), false);
    for (const auto& [key, value] : bsa.items()) {
      const int idx = ParseIndex(key);
      if (idx >= static_cast<int>(bsa.size()) || seen[idx] || !value.is_array() ||
          value.size() != 2) {
        throw Error(ErrorCode::kParseError, "bad bsa entry \"" + key + "\"");
      }
      seen[idx] = true;
      plan.bsa[idx] = {value[0].get<int>(), value[1].get<int>()};
    }
  } else {
    AssignBsas(plan);
  }
  return plan;
}

SwitchStates StatesFromJson(std::string_view text, int switch_count) {
  const Json j = Parse(text);
  if (j.is_object() && j.contains("states")) {
    return StatesFromMap(j.at("states"), switch_count);
  }
  return StatesFromMap(j, switch_count);
}

std::string VerificationReportToJson(const VerificationReport& report) {
  Json j;
  j["design"] = std::string(DesignName(report.design));
  j["ports"] = report.ports;
  Json mode;
  if (report.mode.kind == VerifyModeKind::kExhaustive) {
    mode["kind"] = "exhaustive";
  } else {
    mode["kind"] = "random";
    mode["samples"] = report.mode.samples;
    mode["seed"] = report.mode.seed;
  }
  j["mode"] = std::move(mode);
  j["demands_checked"] = report.demands_checked;
  j["pass"] = report.pass();
  Json failures = Json::array();
  for (const VerificationFailure& f : report.failures) {
    failures.push_back({{"demand", f.demand}, {"diagnostic", f.diagnostic}});
  }
  j["failures"] = std::move(failures);
  j["empirical_max_depth"] = report.empirical_max_depth;
  j["empirical_min_depth"] = report.empirical_min_depth;
  j["max_cross_count"] = report.max_cross_count;
  j["saturating_demands"] = report.saturating_demands;
  j["worst_case_saturates"] = report.worst_case_saturates;
  return Dump(j);
}

std::string MinimalityReportToJson(const MinimalityReport& report) {
  Json j;
  j["design"] = std::string(DesignName(report.design));
  j["ports"] = report.ports;
  j["pass"] = report.pass();
  Json outcomes = Json::object();
  for (size_t k = 0; k < report.outcomes.size(); ++k) {
    outcomes[std::to_string(k)] =
        report.outcomes[k] == DeletionOutcome::kUnroutable ? "unroutable"
                                                           : "routable";
  }
  j["deletions"] = std::move(outcomes);
  return Dump(j);
}

std::string DepthStatsToJson(const DepthStats& stats) {
  Json j;
  j["design"] = std::string(DesignName(stats.design));
  j["ports"] = stats.ports;
  j["formula_max"] = stats.formula_max;
  j["formula_min"] = stats.formula_min;
  j["formula_delta"] = stats.formula_delta;
  auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  j["empirical_max"] = opt(stats.empirical_max);
  j["empirical_min"] = opt(stats.empirical_min);
  j["empirical_delta"] = opt(stats.empirical_delta);
  return Dump(j);
}

}  // namespace pairnet
