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

#include "pairnet/render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "pairnet/error.hpp"

namespace pairnet {
namespace {

int ColumnCount(const Network& net) {
  int cols = 0;
  for (const SwitchPoint& sw : net.switches()) cols = std::max(cols, sw.col + 1);
  return cols;
}

void CheckStates(const Network& net, const std::optional<SwitchStates>& states) {
  if (states && static_cast<int>(states->size()) != net.size()) {
    throw Error(ErrorCode::kIncompleteStates,
                "expected " + std::to_string(net.size()) + " states, got " +
                    std::to_string(states->size()));
  }
}

char Glyph(const std::optional<SwitchStates>& states, int id) {
  if (!states) return '?';
  return (*states)[id] == SwitchState::kCross ? 'X' : '=';
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string Attr(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderAscii(const Network& net,
                        const std::optional<SwitchStates>& states) {
  CheckStates(net, states);
  const int n = net.ports();
  const int cols = ColumnCount(net);
  // Row 2l is line l; row 2l+1 is the gap under it, where switch glyphs sit.
  std::vector<std::string> rows(2 * n - 1);
  for (int l = 0; l < n; ++l) {
    char label[16];
    std::snprintf(label, sizeof(label), "%3d ", l);
    rows[2 * l] = label + std::string(4 * cols + 2, '-');
    if (l + 1 < n) rows[2 * l + 1] = std::string(4 * cols + 6, ' ');
  }
  for (const SwitchPoint& sw : net.switches()) {
    const size_t x = 4 + 4 * static_cast<size_t>(sw.col) + 2;
    rows[2 * sw.line][x] = '+';
    rows[2 * sw.line + 2][x] = '+';
    rows[2 * sw.line + 1][x] = Glyph(states, sw.id);
  }
  for (int j = 0; 2 * j + 1 < n; ++j) {
    rows[4 * j] += "-.";
    rows[4 * j + 1] += "  ) BSA " + std::to_string(j);
    rows[4 * j + 2] += "-'";
  }
  std::string out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  return out;
}

std::string RenderSvg(const Network& net,
                      const std::optional<SwitchStates>& states,
                      const RenderOptions& options) {
  CheckStates(net, states);
  if (options.scale < 1) {
    throw Error(ErrorCode::kInvalidInput, "scale must be >= 1");
  }
  if (options.layer_colors.empty()) {
    throw Error(ErrorCode::kInvalidInput, "layer color map is empty");
  }
  const double s = options.scale;
  const int n = net.ports();
  const int cols = ColumnCount(net);
  const double x_end = (cols + 1) * s;
  const double width = x_end + 1.5 * s;
  const double height = (n + 1) * s;
  auto y_of = [&](int line) { return (line + 1) * s; };
  auto x_of = [&](int col) { return (col + 1) * s; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         Num(width) + "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " +
         Num(width) + " " + Num(height) + "\">\n";
  out += "<style>.line{stroke:#444;stroke-width:1;fill:none}"
         ".switch{stroke:#222;stroke-width:1}"
         ".cross{fill-opacity:0.9}.bar{fill-opacity:0.35}"
         ".bsa{stroke:#222;stroke-width:1.5;fill:none}"
         ".path{stroke:#000;stroke-width:2.5;fill:none;stroke-opacity:0.7}"
         "</style>\n";

  for (int l = 0; l < n; ++l) {
    out += "<path class=\"line\" d=\"M " + Num(0.5 * s) + " " + Num(y_of(l)) +
           " H " + Num(x_end) + "\"/>\n";
  }

  for (const SwitchPoint& sw : net.switches()) {
    std::string cls = "switch";
    if (states && options.show_states) {
      cls += (*states)[sw.id] == SwitchState::kCross ? " cross" : " bar";
    }
    const std::string& color =
        options.layer_colors[(std::max(sw.layer, 1) - 1) %
                             options.layer_colors.size()];
    out += "<rect class=\"" + cls + "\" data-id=\"" + std::to_string(sw.id) +
           "\" x=\"" + Num(x_of(sw.col) - 0.3 * s) + "\" y=\"" +
           Num(y_of(sw.line) - 0.2 * s) + "\" width=\"" + Num(0.6 * s) +
           "\" height=\"" + Num(1.4 * s) + "\" fill=\"" + Attr(color) +
           "\"/>\n";
  }

  // BSAs as semicircles bulging right from the output ends of 2j and 2j+1.
  for (int j = 0; 2 * j + 1 < n; ++j) {
    const double r = s / 2;
    out += "<path class=\"bsa\" d=\"M " + Num(x_end) + " " + Num(y_of(2 * j)) +
           " A " + Num(r) + " " + Num(r) + " 0 0 1 " + Num(x_end) + " " +
           Num(y_of(2 * j + 1)) + " Z\"/>\n";
  }

  if (states) {
    for (int photon : options.highlight) {
      if (photon < 0 || photon >= n) {
        throw Error(ErrorCode::kInvalidInput,
                    "highlighted photon " + std::to_string(photon) +
                        " is not on the network");
      }
      int line = photon;
      std::string d = "M " + Num(0.5 * s) + " " + Num(y_of(line));
      for (const SwitchPoint& sw : net.switches()) {
        if (sw.line != line && sw.line + 1 != line) continue;
        const double x = x_of(sw.col);
        d += " L " + Num(x - 0.3 * s) + " " + Num(y_of(line));
        if ((*states)[sw.id] == SwitchState::kCross) {
          line = sw.line == line ? line + 1 : line - 1;
        }
        d += " L " + Num(x + 0.3 * s) + " " + Num(y_of(line));
      }
      d += " L " + Num(x_end) + " " + Num(y_of(line));
      out += "<path class=\"path\" data-photon=\"" + std::to_string(photon) +
             "\" d=\"" + d + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pairnet
