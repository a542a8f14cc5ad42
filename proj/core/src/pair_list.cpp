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

#include "pairnet/pair_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pairnet/error.hpp"

namespace pairnet {

PairList::PairList(int ports, std::vector<std::pair<int, int>> pairs) {
  if (ports < 2 || ports % 2 != 0) {
    throw Error(ErrorCode::kInvalidPorts,
                "ports must be even and >= 2, got " + std::to_string(ports));
  }
  if (static_cast<int>(pairs.size()) * 2 != ports) {
    throw Error(ErrorCode::kInvalidDemand,
                "expected " + std::to_string(ports / 2) + " pairs, got " +
                    std::to_string(pairs.size()));
  }
  partner_.assign(ports, -1);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= ports) {
      throw Error(ErrorCode::kInvalidDemand,
                  "index out of range in pair " + std::to_string(a) + "-" +
                      std::to_string(b));
    }
    if (a == b || partner_[a] != -1 || partner_[b] != -1) {
      throw Error(ErrorCode::kInvalidDemand,
                  "photon used more than once in pair " + std::to_string(a) +
                      "-" + std::to_string(b));
    }
    partner_[a] = b;
    partner_[b] = a;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs_ = std::move(pairs);
}

PairList PairList::Parse(int ports, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<std::pair<int, int>> pairs;
  std::string_view rest = compact;
  auto read_int = [&](std::string_view token, int& out) {
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc() && ptr == end && !token.empty();
  };
  while (!rest.empty()) {
    size_t comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view()
                                           : rest.substr(comma + 1);
    size_t dash = token.find('-');
    int a = 0;
    int b = 0;
    if (dash == std::string_view::npos ||
        !read_int(token.substr(0, dash), a) ||
        !read_int(token.substr(dash + 1), b)) {
      throw Error(ErrorCode::kInvalidDemand,
                  "malformed pair token '" + std::string(token) + "'");
    }
    pairs.emplace_back(a, b);
    if (comma != std::string_view::npos && rest.empty()) {
      throw Error(ErrorCode::kInvalidDemand, "trailing comma");
    }
  }
  return PairList(ports, std::move(pairs));
}

bool PairList::Contains(int a, int b) const {
  if (a < 0 || b < 0 || a >= ports() || b >= ports()) return false;
  return partner_[a] == b;
}

std::string PairList::ToString() const {
  std::string out;
  for (const auto& [a, b] : pairs_) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(a);
    out.push_back('-');
    out += std::to_string(b);
  }
  return out;
}

}  // namespace pairnet
