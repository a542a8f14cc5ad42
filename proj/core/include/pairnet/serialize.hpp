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

#ifndef PAIRNET_SERIALIZE_HPP_
#define PAIRNET_SERIALIZE_HPP_

#include <string>
#include <string_view>

#include "pairnet/metrics.hpp"
#include "pairnet/routing.hpp"
#include "pairnet/topology.hpp"
#include "pairnet/verification.hpp"

namespace pairnet {

// All writers emit keys in a fixed order with two-space indentation and a
// trailing newline, so equal inputs give equal bytes. Readers throw
// Error{kParseError} on malformed documents.

std::string NetworkToJson(const Network& net);
Network NetworkFromJson(std::string_view text);

std::string PlanToJson(const RoutingPlan& plan);
RoutingPlan PlanFromJson(std::string_view text);

// Accepts either a full routing plan or a bare {"<id>": "bar"|"cross"} map.
// Every id in 0..switch_count-1 must be present exactly once.
SwitchStates StatesFromJson(std::string_view text, int switch_count);

std::string VerificationReportToJson(const VerificationReport& report);
std::string MinimalityReportToJson(const MinimalityReport& report);
std::string DepthStatsToJson(const DepthStats& stats);

}  // namespace pairnet

#endif  // PAIRNET_SERIALIZE_HPP_
