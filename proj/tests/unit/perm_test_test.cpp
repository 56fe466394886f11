// Copyright 2026 The netspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "netspread/error.hpp"
#include "netspread/perm_test.hpp"
#include "netspread/spread.hpp"
#include "support/oracles.hpp"

namespace netspread {
namespace {

InfectionVector Set(size_t n, std::vector<Vertex> s) { return InfectionVector::FromInfected(n, s); }

TEST(Threshold, CountingRule) {
  const HistogramBin bins[] = {{1, 50}, {2, 30}, {3, 15}, {4, 5}};
  auto t = UpperThreshold(bins, 0.05);
  EXPECT_EQ(t.value, 4);
  EXPECT_FALSE(t.saturated);
  t = UpperThreshold(bins, 0.2);
  EXPECT_EQ(t.value, 3);
  t = UpperThreshold(bins, 0.999);
  EXPECT_EQ(t.value, 2);
}

TEST(Threshold, TiedMaximumAndResolution) {
  const HistogramBin bins[] = {{1, 98}, {2, 2}};
  auto t = UpperThreshold(bins, 0.01);
  EXPECT_EQ(t.value, 2);
  EXPECT_FALSE(t.saturated);
  t = UpperThreshold(bins, 0.005);
  EXPECT_EQ(t.value, 2);
  EXPECT_TRUE(t.saturated);
}

TEST(ExactTest, StarCenterHistogram) {
  // W on the star with k = 2: sets through the center have W = 1.
  const auto r = ExactTest(Statistic::EdgesWithin(StarGraph(5)), Set(5, {0, 1}), TestConfig{});
  EXPECT_EQ(r.total, 120u);
  ASSERT_EQ(r.histogram.size(), 2u);
  EXPECT_EQ(r.histogram[0].count, 72u);
  EXPECT_EQ(r.histogram[1].count, 48u);
  EXPECT_DOUBLE_EQ(r.p_value, 0.4);
  EXPECT_FALSE(r.reject);
}

TEST(ExactTest, ConstantStatisticNeverRejects) {
  TestConfig cfg;
  cfg.alpha = 0.5;
  const auto r = ExactTest(Statistic::EdgesWithin(EmptyGraph(5)), Set(5, {0, 1}), cfg);
  EXPECT_EQ(r.threshold, 0.0);
  EXPECT_FALSE(r.reject);
}

TEST(ExactTest, GuardAndAlpha) {
  TestConfig cfg;
  EXPECT_THROW(ExactTest(Statistic::EdgesWithin(CycleGraph(10)), Set(10, {0}), cfg), Error);
  cfg.alpha = 1.0;
  EXPECT_THROW(ExactTest(Statistic::EdgesWithin(CycleGraph(4)), Set(4, {0}), cfg), Error);
}

TEST(ExactTest, RejectIffObservedAboveThreshold) {
  const Graph g = CycleGraph(6);
  for (size_t k = 1; k <= 4; ++k)
    for (const auto& s : oracle::Subsets(6, k))
      for (double alpha : {0.05, 0.2, 0.5}) {
        TestConfig cfg;
        cfg.alpha = alpha;
        for (const Statistic& stat : {Statistic::EdgesWithin(g), Statistic::Radius(g)}) {
          const auto r = ExactTest(stat, Set(6, s), cfg);
          const bool above = r.lower_tail ? r.observed < r.threshold : r.observed > r.threshold;
          EXPECT_EQ(r.reject, above && !r.saturated);
        }
      }
}

TEST(ExactTest, LevelUnderExactNullLaw) {
  // Star null, cycle alternative: P0(reject) <= alpha for the exact law.
  const Graph star = StarGraph(6);
  const Statistic w = Statistic::EdgesWithin(CycleGraph(6));
  for (double eta : {0.5, 3.0})
    for (size_t k = 2; k <= 3; ++k) {
      const auto law = oracle::ExactSetLaw(star, eta, k);
      for (double alpha : {0.01, 0.1, 0.3, 0.5}) {
        TestConfig cfg;
        cfg.alpha = alpha;
        double reject = 0.0;
        for (const auto& [set, p] : law)
          if (ExactTest(w, Set(6, set), cfg).reject) reject += p;
        EXPECT_LE(reject, alpha + 1e-12);
      }
    }
}

TEST(McTest, DeterministicAcrossThreadCounts) {
  const size_t dims[] = {8, 8};
  const Graph g = TorusGrid(dims);
  Rng rng(2);
  const auto j = SimulateObserved(g, {5.0, 12}, 6, rng);
  TestConfig cfg;
  cfg.B = 300;
  cfg.seed = 17;
  cfg.threads = 1;
  const auto a = McTest(Statistic::EdgesWithin(g), j, cfg);
  cfg.threads = 4;
  const auto b = McTest(Statistic::EdgesWithin(g), j, cfg);
  EXPECT_EQ(a.threshold, b.threshold);
  EXPECT_EQ(a.exceed_count, b.exceed_count);
  ASSERT_EQ(a.histogram.size(), b.histogram.size());
  for (size_t i = 0; i < a.histogram.size(); ++i)
    EXPECT_EQ(a.histogram[i].count, b.histogram[i].count);
  EXPECT_GE(a.p_value, 1.0 / (cfg.B + 1));
  EXPECT_LE(a.p_value, 1.0);
}

TEST(McTest, SingleReplicate) {
  TestConfig cfg;
  cfg.B = 1;
  const auto j = Set(8, {0, 1, 2});
  const auto r = McTest(Statistic::EdgesWithin(CycleGraph(8)), j, cfg);
  EXPECT_EQ(r.threshold, Statistic::EdgesWithin(CycleGraph(8)).Value(Resample(j, cfg, 0)));
}

TEST(Resample, CensorFixedKeepsPattern) {
  InfectionVector j = Set(10, {0, 1, 2, 3});
  j.set(5, Status::kCensored);
  j.set(7, Status::kCensored);
  TestConfig cfg;
  cfg.mode = PermMode::kCensorFixed;
  for (uint64_t r = 0; r < 50; ++r) {
    const auto p = Resample(j, cfg, r);
    EXPECT_EQ(p.censored_vertices(), j.censored_vertices());
    EXPECT_EQ(p.k(), j.k());
  }
  cfg.mode = PermMode::kFull;
  EXPECT_EQ(Resample(j, cfg, 3).c(), 2u);
}

TEST(Resample, AllButOneCensoredGivesUnitPValue) {
  InfectionVector j(6);
  for (Vertex v = 1; v < 6; ++v) j.set(v, Status::kCensored);
  j.set(0, Status::kInfected);
  TestConfig cfg;
  cfg.mode = PermMode::kCensorFixed;
  cfg.B = 50;
  EXPECT_EQ(McTest(Statistic::Center(6, 0), j, cfg).p_value, 1.0);
}

TEST(Composite, IdenticalStatisticsKeepLevel) {
  const Graph star = StarGraph(6);
  const Statistic w = Statistic::EdgesWithin(CycleGraph(6));
  const auto law = oracle::ExactSetLaw(star, 1.0, 3);
  TestConfig cfg;
  cfg.alpha = 0.2;
  double reject = 0.0;
  for (const auto& [set, p] : law)
    if (CompositeExactTest(w, w, Set(6, set), cfg).reject) reject += p;
  EXPECT_LE(reject, cfg.alpha + 1e-12);
}

TEST(Composite, ConstantStatisticsNeverReject) {
  const Statistic z = Statistic::EdgesWithin(EmptyGraph(6));
  TestConfig cfg;
  cfg.alpha = 0.5;
  cfg.B = 100;
  EXPECT_FALSE(CompositeMcTest(z, z, Set(6, {0, 1}), cfg).reject);
}

TEST(MultiSpread, AveragesEdgesWithin) {
  const Graph g = CycleGraph(12);
  const std::vector<InfectionVector> js{Set(12, {0, 1, 2}), Set(12, {4, 5})};
  TestConfig cfg;
  cfg.B = 200;
  const auto r = MultiSpreadMcTest(Statistic::EdgesWithin(g), js, cfg);
  EXPECT_DOUBLE_EQ(r.observed, 1.5);
  EXPECT_EQ(r.total, 200u);
}

TEST(Validity, KnownPairs) {
  EXPECT_EQ(CheckValidity(StarGraph(7), CycleGraph(7)).status, Validity::kValid);
  EXPECT_EQ(CheckValidity(StarGraph(6), PathGraph(6)).status, Validity::kInvalid);
  EXPECT_EQ(CheckValidity(EmptyGraph(6), PathGraph(6)).status, Validity::kValid);
  EXPECT_EQ(CheckValidity(StarGraph(40), ErdosRenyi(40, 0.2, 1)).status, Validity::kUnverifiable);
}

TEST(Validity, CensorFixedUsesStabilizer) {
  InfectionVector j(6);
  j.set(0, Status::kCensored);
  j.set(1, Status::kInfected);
  EXPECT_EQ(CheckValidityCensorFixed(EmptyGraph(6), CycleGraph(6), j).status, Validity::kValid);
}

}  // namespace
}  // namespace netspread
