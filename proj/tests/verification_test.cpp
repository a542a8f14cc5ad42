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

#include "pairnet/verification.hpp"

#include <gtest/gtest.h>

#include <set>

#include "pairnet/error.hpp"

namespace pairnet {
namespace {

TEST(EnumerateTest, CountsAreDoubleFactorials) {
  EXPECT_EQ(EnumeratePairLists(2).size(), 1u);
  EXPECT_EQ(EnumeratePairLists(4).size(), 3u);
  EXPECT_EQ(ForEachPairList(12, [](const PairList&) { return true; }), 10395u);
  EXPECT_EQ(PairListCount(12), 10395u);
  EXPECT_EQ(PairListCount(14), 135135u);
}

TEST(EnumerateTest, DistinctAndOrdered) {
  const std::vector<PairList> all = EnumeratePairLists(8);
  const std::set<PairList> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(all.front().ToString(), "0-1,2-3,4-5,6-7");
}

TEST(EnumerateTest, VisitorCanStop) {
  int calls = 0;
  ForEachPairList(8, [&](const PairList&) { return ++calls < 5; });
  EXPECT_EQ(calls, 5);
}

TEST(WorstCaseTest, NestsOutward) {
  EXPECT_EQ(WorstCasePairList(2).ToString(), "0-1");
  EXPECT_EQ(WorstCasePairList(4).ToString(), "0-3,1-2");
  EXPECT_EQ(WorstCasePairList(12).ToString(), "0-11,1-10,2-9,3-8,4-7,5-6");
}

TEST(LowerBoundTest, Values) {
  EXPECT_EQ(LowerBound(2), 0);
  EXPECT_EQ(LowerBound(4), 2);
  EXPECT_EQ(LowerBound(12), 30);
  for (int n = 2; n <= 64; n += 2) EXPECT_EQ(LowerBound(n), n * (n - 2) / 4);
}

TEST(RandomPairListTest, SeedStable) {
  std::mt19937_64 a(123);
  std::mt19937_64 b(123);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(RandomPairList(32, a), RandomPairList(32, b));
  }
}

TEST(RandomPairListTest, CoversSmallSpace) {
  std::mt19937_64 rng(5);
  std::set<PairList> seen;
  for (int i = 0; i < 2000; ++i) seen.insert(RandomPairList(6, rng));
  EXPECT_EQ(seen.size(), 15u);
}

TEST(VerifyDesignTest, TriangularEight) {
  const VerificationReport r =
      VerifyDesign(DesignKind::kTriangular, 8, VerifyMode::Exhaustive());
  EXPECT_EQ(r.demands_checked, 105u);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.empirical_max_depth, 6);
  EXPECT_EQ(r.empirical_min_depth, 0);
  EXPECT_TRUE(r.worst_case_saturates);
  EXPECT_EQ(r.max_cross_count, 12);
}

TEST(VerifyDesignTest, BrickworkTwelve) {
  const VerificationReport r =
      VerifyDesign(DesignKind::kBrickwork, 12, VerifyMode::Exhaustive());
  EXPECT_EQ(r.demands_checked, 10395u);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.empirical_max_depth, 6);
}

TEST(VerifyDesignTest, ChevronTwo) {
  const VerificationReport r =
      VerifyDesign(DesignKind::kChevron, 2, VerifyMode::Exhaustive());
  EXPECT_EQ(r.demands_checked, 1u);
  EXPECT_TRUE(r.pass());
}

TEST(VerifyDesignTest, RandomModeIsReproducible) {
  const VerifyMode mode = VerifyMode::Random(50, 99);
  const VerificationReport a = VerifyDesign(DesignKind::kChevron, 24, mode);
  const VerificationReport b = VerifyDesign(DesignKind::kChevron, 24, mode);
  EXPECT_EQ(a.demands_checked, 50u);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.empirical_max_depth, b.empirical_max_depth);
  EXPECT_EQ(a.empirical_min_depth, b.empirical_min_depth);
  EXPECT_EQ(a.max_cross_count, b.max_cross_count);
}

TEST(VerifyDesignTest, Limits) {
  EXPECT_THROW(VerifyDesign(DesignKind::kTriangular, 14, VerifyMode::Exhaustive()),
               Error);
  EXPECT_THROW(VerifyDesign(DesignKind::kTriangular, 8, VerifyMode::Random(0, 1)),
               Error);
}

TEST(MinimalityTest, Examples) {
  const MinimalityReport tri = VerifyMinimality(DesignKind::kTriangular, 6);
  EXPECT_EQ(tri.outcomes.size(), 6u);
  EXPECT_TRUE(tri.pass());
  const MinimalityReport chev = VerifyMinimality(DesignKind::kChevron, 4);
  EXPECT_EQ(chev.outcomes.size(), 2u);
  EXPECT_TRUE(chev.pass());
  const MinimalityReport brick = VerifyMinimality(DesignKind::kBrickwork, 8);
  EXPECT_EQ(brick.outcomes.size(), 12u);
  EXPECT_TRUE(brick.pass());
}

TEST(MinimalityTest, Budget) {
  try {
    VerifyMinimality(DesignKind::kTriangular, 8, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoundExceeded);
  }
}

}  // namespace
}  // namespace pairnet
