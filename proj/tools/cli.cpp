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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "pairnet/error.hpp"
#include "pairnet/metrics.hpp"
#include "pairnet/pair_list.hpp"
#include "pairnet/render.hpp"
#include "pairnet/routing.hpp"
#include "pairnet/serialize.hpp"
#include "pairnet/simulation.hpp"
#include "pairnet/topology.hpp"
#include "pairnet/verification.hpp"

namespace pairnet::cli {
namespace {

using Json = nlohmann::ordered_json;

// Input problems the user can fix; always exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int ParseEven(const std::string& text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("not an integer: \"" + text + "\"");
  }
  if (value < 2 || value % 2 != 0) {
    throw UsageError("ports must be even and >= 2, got " + text);
  }
  return value;
}

DesignKind RequireDesign(const std::string& name) {
  const auto design = ParseDesign(name);
  if (!design) throw UsageError("unknown design \"" + name + "\"");
  return *design;
}

std::vector<DesignKind> DesignsFor(const std::string& name) {
  if (name == "all") return {kAllDesigns.begin(), kAllDesigns.end()};
  return {RequireDesign(name)};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

// Writes to `path` when given, else to stdout.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

struct GenerateArgs {
  std::string design;
  int ports = 0;
  bool reverse = false;
  std::string out;
};

struct RouteArgs {
  std::string design;
  int ports = 0;
  std::string pairs;
  std::string out;
  std::string svg;
};

struct VerifyArgs {
  std::string design;
  std::string ports;
  bool exhaustive = false;
  int samples = 0;
  std::uint64_t seed = 0;
  int cap = 12;
};

struct MinimalityArgs {
  std::string design;
  std::string ports;
  int max_switches = kDefaultBruteForceSwitchLimit;
};

struct MetricsArgs {
  std::string ports;
  std::string csv;
  bool empirical = false;
};

struct RenderArgs {
  std::string net;
  std::string states;
  std::string svg;
  bool ascii = false;
  std::vector<int> highlight;
  int scale = 24;
};

int DoGenerate(const GenerateArgs& a, std::ostream& out) {
  Network net = BuildNetwork(RequireDesign(a.design), a.ports);
  if (a.reverse) net = ReverseNetwork(net);
  Emit(a.out, NetworkToJson(net), out);
  return kExitPass;
}

int DoRoute(const RouteArgs& a, std::ostream& out, std::ostream& err) {
  const DesignKind design = RequireDesign(a.design);
  const PairList demand = PairList::Parse(a.ports, a.pairs);
  const RoutingPlan plan = Route(design, a.ports, demand);
  const Network net = BuildNetwork(design, a.ports);
  const PairingReport pairing = CheckPairing(Propagate(net, plan.states), demand);
  Emit(a.out, PlanToJson(plan), out);
  if (!a.svg.empty()) {
    RenderOptions options;
    for (int p = 0; p < a.ports; ++p) options.highlight.push_back(p);
    WriteFile(a.svg, RenderSvg(net, plan.states, options));
  }
  if (!pairing.ok) {
    err << "routing did not pair the demand\n";
    return kExitFailure;
  }
  return kExitPass;
}

int DoVerify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.exhaustive && a.samples > 0) {
    throw UsageError("--exhaustive and --samples are mutually exclusive");
  }
  const VerifyMode mode = a.samples > 0 ? VerifyMode::Random(a.samples, a.seed)
                                        : VerifyMode::Exhaustive(a.cap);
  const std::vector<int> ports = ParsePortsRange(a.ports);
  const std::vector<DesignKind> designs = DesignsFor(a.design);

  Json reports = Json::array();
  bool pass = true;
  for (DesignKind d : designs) {
    for (int n : ports) {
      const VerificationReport report = VerifyDesign(d, n, mode);
      pass = pass && report.pass();
      if (!report.pass()) {
        err << DesignName(d) << " N=" << n << ": " << report.failures.size()
            << " failing demands\n";
      }
      reports.push_back(Json::parse(VerificationReportToJson(report)));
    }
  }
  Json doc;
  doc["pass"] = pass;
  doc["reports"] = std::move(reports);
  out << doc.dump(2) << "\n";
  return pass ? kExitPass : kExitFailure;
}

int DoMinimality(const MinimalityArgs& a, std::ostream& out,
                 std::ostream& err) {
  Json reports = Json::array();
  bool pass = true;
  for (DesignKind d : DesignsFor(a.design)) {
    for (int n : ParsePortsRange(a.ports)) {
      const MinimalityReport report = VerifyMinimality(d, n, a.max_switches);
      if (!report.pass()) {
        err << DesignName(d) << " N=" << n
            << ": some single-switch deletion stays routable\n";
      }
      pass = pass && report.pass();
      reports.push_back(Json::parse(MinimalityReportToJson(report)));
    }
  }
  if (reports.size() == 1) {
    out << reports[0].dump(2) << "\n";
  } else {
    Json doc;
    doc["pass"] = pass;
    doc["reports"] = std::move(reports);
    out << doc.dump(2) << "\n";
  }
  return pass ? kExitPass : kExitFailure;
}

int DoMetrics(const MetricsArgs& a, std::ostream& out) {
  const std::vector<int> ports = ParsePortsRange(a.ports);
  std::vector<int> depth_ports;
  std::copy_if(ports.begin(), ports.end(), std::back_inserter(depth_ports),
               [](int n) { return n >= 4; });

  out << FormatComparisonTable(CountTable(ports)) << "\n";
  std::vector<DepthStats> stats;
  for (DesignKind d : kAllDesigns) {
    for (int n : depth_ports) {
      if (a.empirical && n <= 12) {
        const VerificationReport r = VerifyDesign(d, n, VerifyMode::Exhaustive());
        stats.push_back(ComputeDepthStats(d, n, &r));
      } else {
        stats.push_back(ComputeDepthStats(d, n));
      }
    }
  }
  out << FormatDepthTable(stats);
  if (!a.csv.empty()) {
    WriteFile(a.csv, EmitCsv(BuildSeries(depth_ports)));
  }
  return kExitPass;
}

int DoRender(const RenderArgs& a, std::ostream& out) {
  if (a.ascii == !a.svg.empty()) {
    throw UsageError("render needs exactly one of --svg FILE or --ascii");
  }
  const Network net = NetworkFromJson(ReadFile(a.net));
  const ValidationReport valid = ValidateNetwork(net);
  if (!valid.ok) {
    throw UsageError("network file fails validation: " +
                     valid.violations.front().message);
  }
  std::optional<SwitchStates> states;
  if (!a.states.empty()) states = StatesFromJson(ReadFile(a.states), net.size());
  if (a.ascii) {
    out << RenderAscii(net, states);
  } else {
    RenderOptions options;
    options.highlight = a.highlight;
    options.scale = a.scale;
    WriteFile(a.svg, RenderSvg(net, states, options));
  }
  return kExitPass;
}

}  // namespace

std::vector<int> ParsePortsRange(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {ParseEven(text)};
  const int lo = ParseEven(text.substr(0, dots));
  const int hi = ParseEven(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range " + text);
  std::vector<int> out;
  for (int n = lo; n <= hi; n += 2) out.push_back(n);
  return out;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Build, route and verify planar paired-egress switching networks",
               "pairnet"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "pairnet 0.1.0");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a network as JSON");
  generate->add_option("--design", gen.design, "triangular|chevron|brickwork")
      ->required();
  generate->add_option("--ports", gen.ports, "Even port count N")->required();
  generate->add_flag("--reverse", gen.reverse, "Emit the mirrored network");
  generate->add_option("--out", gen.out, "Output file (default stdout)");

  RouteArgs rt;
  auto* route = app.add_subcommand("route", "Route a pair list");
  route->add_option("--design", rt.design)->required();
  route->add_option("--ports", rt.ports)->required();
  route->add_option("--pairs", rt.pairs, "e.g. 0-3,1-2")->required();
  route->add_option("--out", rt.out, "Plan JSON file (default stdout)");
  route->add_option("--svg", rt.svg, "Also render the routed network");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Route and simulate many demands");
  verify->add_option("--design", ver.design, "A design or \"all\"")->required();
  verify->add_option("--ports", ver.ports, "N or A..B")->required();
  verify->add_flag("--exhaustive", ver.exhaustive, "Every pair list (default)");
  verify->add_option("--samples", ver.samples, "Random pair lists per N")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", ver.seed, "Seed for --samples");
  verify->add_option("--cap", ver.cap, "Largest N for exhaustive mode")
      ->capture_default_str();

  MinimalityArgs min;
  auto* minimality =
      app.add_subcommand("minimality", "Delete each switch, brute-force route");
  minimality->add_option("--design", min.design, "A design or \"all\"")
      ->required();
  minimality->add_option("--ports", min.ports, "N or A..B")->required();
  minimality->add_option("--max-switches", min.max_switches,
                         "Brute-force budget in switches")
      ->capture_default_str();

  MetricsArgs met;
  auto* metrics = app.add_subcommand("metrics", "Resource and depth tables");
  metrics->add_option("--ports", met.ports, "N or A..B")->required();
  metrics->add_option("--csv", met.csv, "Write the data series as CSV");
  metrics->add_flag("--empirical", met.empirical,
                    "Add routed depth extrema for N <= 12");

  RenderArgs ren;
  auto* render = app.add_subcommand("render", "Draw a network");
  render->add_option("--net", ren.net, "Network JSON")->required();
  render->add_option("--states", ren.states, "Plan or states JSON");
  render->add_option("--svg", ren.svg, "SVG output file");
  render->add_flag("--ascii", ren.ascii, "Print ASCII to stdout");
  render->add_option("--highlight", ren.highlight, "Photons to trace")
      ->delimiter(',');
  render->add_option("--scale", ren.scale, "Pixels per grid cell")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (generate->parsed()) return DoGenerate(gen, out);
    if (route->parsed()) return DoRoute(rt, out, err);
    if (verify->parsed()) return DoVerify(ver, out, err);
    if (minimality->parsed()) return DoMinimality(min, out, err);
    if (metrics->parsed()) return DoMetrics(met, out);
    if (render->parsed()) return DoRender(ren, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pairnet::cli
