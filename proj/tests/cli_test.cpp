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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pairnet::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("pairnet_cli_test_" + name))
      .string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliTest, RouteTriangularFour) {
  const Result r = Call({"route", "--design", "triangular", "--ports", "4",
                         "--pairs", "0-3,1-2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("\"0\": \"cross\""), std::string::npos);
  EXPECT_NE(r.out.find("\"1\": \"cross\""), std::string::npos);
}

TEST(CliTest, RouteRejectsPartialMatching) {
  const Result r = Call({"route", "--design", "brickwork", "--ports", "12",
                         "--pairs", "0-3,1-2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Call({"route", "--design", "ring", "--ports", "4", "--pairs",
                  "0-1,2-3"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"generate", "--design", "chevron", "--ports", "7"}).code,
            kExitUsage);
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Call({"verify", "--design", "all", "--ports", "4..9"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"verify", "--design", "all", "--ports", "3..8"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"verify", "--design", "all", "--ports", "8..4"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"verify", "--design", "all", "--ports", "14"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"verify", "--design", "chevron", "--ports", "8",
                  "--exhaustive", "--samples", "3"}).code,
            kExitUsage);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = Call({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliTest, PortsRange) {
  EXPECT_EQ(ParsePortsRange("8"), (std::vector<int>{8}));
  EXPECT_EQ(ParsePortsRange("4..10"), (std::vector<int>{4, 6, 8, 10}));
  EXPECT_THROW(ParsePortsRange("4..11"), std::exception);
  EXPECT_THROW(ParsePortsRange("x"), std::exception);
}

TEST(CliTest, VerifyAllExhaustive) {
  const Result r =
      Call({"verify", "--design", "all", "--ports", "4..8", "--exhaustive"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("\"pass\": true"), std::string::npos);
  EXPECT_NE(r.out.find("\"demands_checked\": 105"), std::string::npos);
}

TEST(CliTest, VerifySampledIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--design", "brickwork",
                                         "--ports", "20", "--samples", "40",
                                         "--seed", "9"};
  const Result a = Call(args);
  const Result b = Call(args);
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"seed\": 9"), std::string::npos);
}

TEST(CliTest, Minimality) {
  const Result r = Call({"minimality", "--design", "chevron", "--ports", "6"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("\"pass\": true"), std::string::npos);
  EXPECT_EQ(Call({"minimality", "--design", "triangular", "--ports", "12"}).code,
            kExitUsage);
}

TEST(CliTest, MetricsWithCsv) {
  const std::string csv = TempPath("metrics.csv");
  const Result r = Call({"metrics", "--ports", "4..12", "--csv", csv});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("spanke_benes"), std::string::npos);
  EXPECT_EQ(Slurp(csv).rfind("scheme,N,switches,crosspoints,max_depth\n", 0), 0u);
  std::remove(csv.c_str());
}

TEST(CliTest, GenerateRouteRender) {
  const std::string net = TempPath("net.json");
  const std::string plan = TempPath("plan.json");
  const std::string svg = TempPath("out.svg");
  const std::string routed_svg = TempPath("routed.svg");
  ASSERT_EQ(Call({"generate", "--design", "chevron", "--ports", "8", "--out",
                  net}).code,
            kExitPass);
  const Result routed =
      Call({"route", "--design", "chevron", "--ports", "8", "--pairs",
            "0-5,1-7,2-3,4-6", "--out", plan, "--svg", routed_svg});
  ASSERT_EQ(routed.code, kExitPass);
  EXPECT_TRUE(routed.out.empty());
  EXPECT_NE(Slurp(routed_svg).find("<svg"), std::string::npos);

  const Result ascii =
      Call({"render", "--net", net, "--states", plan, "--ascii"});
  EXPECT_EQ(ascii.code, kExitPass);
  EXPECT_NE(ascii.out.find("BSA 3"), std::string::npos);
  EXPECT_EQ(ascii.out.find('?'), std::string::npos);

  EXPECT_EQ(Call({"render", "--net", net, "--svg", svg, "--highlight", "0,5",
                  "--states", plan}).code,
            kExitPass);
  EXPECT_NE(Slurp(svg).find("data-photon=\"5\""), std::string::npos);

  EXPECT_EQ(Call({"render", "--net", net}).code, kExitUsage);
  EXPECT_EQ(Call({"render", "--net", TempPath("missing.json"), "--ascii"}).code,
            kExitUsage);
  for (const auto& p : {net, plan, svg, routed_svg}) std::remove(p.c_str());
}

TEST(CliTest, GenerateReverseToStdout) {
  const Result r =
      Call({"generate", "--design", "triangular", "--ports", "4", "--reverse"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("\"reversed\": true"), std::string::npos);
}

}  // namespace
}  // namespace pairnet::cli
