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

#include <cmath>

#include "netspread/error.hpp"
#include "netspread/rng.hpp"
#include "netspread/risk.hpp"
#include "support/oracles.hpp"

namespace netspread {
namespace {

TEST(Cascades, MatchBruteForce) {
  Rng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const size_t n = 4 + rng.Below(3);
    const Graph g = ErdosRenyi(n, 0.5, rng.Next());
    for (size_t k = 2; k <= 4; ++k)
      for (auto [u, v] : g.edges()) EXPECT_EQ(CascadeCount(g, k, u, v), oracle::BruteCascades(g, k, u, v));
  }
}

TEST(Cascades, CycleClosedForm) {
  EXPECT_EQ(CascadeCount(CycleGraph(6), 3, 0, 1), 8u);
  EXPECT_EQ(CascadeCountCycle(3), 8u);
  for (size_t k = 2; k <= 6; ++k)
    EXPECT_EQ(CascadeCount(CycleGraph(k + 3), k, 0, 1), CascadeCountCycle(k));
  EXPECT_THROW(CascadeCount(CycleGraph(20), 3, 0, 1), Error);
}

TEST(Baselines, ThresholdFormulas) {
  const double n = 2500, k = 500, c = 500;
  const double ll = std::log(std::log(n));
  EXPECT_NEAR(TbThreshold(2, 2500, 500, 500), 1.1 * 4 * std::sqrt(k * n * ll / (n - c)), 1e-9);
  EXPECT_NEAR(TtThreshold(2500, 500, 500), k * n * ll * ll * ll / (n - c), 1e-9);
  EXPECT_THROW(TbThreshold(2, 2, 1, 0), Error);
  EXPECT_THROW(TtThreshold(100, 10, 100), Error);
}

TEST(Baselines, Diagnosis) {
  const size_t dims[] = {50, 50};
  const Graph grid = TorusGrid(dims);
  const auto tb = Baseline(BaselineKind::kTb, grid, 2, 500, 500);
  EXPECT_EQ(tb.ceiling, 50.0);
  EXPECT_EQ(tb.diagnosis, "always rejects");
  const auto tt = Baseline(BaselineKind::kTt, grid, 0, 500, 500);
  EXPECT_EQ(tt.ceiling, 2499.0);
  EXPECT_EQ(tt.diagnosis, "always rejects");
  const auto small = Baseline(BaselineKind::kTb, CycleGraph(400), 1, 2, 0);
  EXPECT_EQ(small.diagnosis, "informative");
}

TEST(Bounds, HEta) {
  EXPECT_DOUBLE_EQ(HEta(10, 1, 3.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(HEta(10, 3, 1.0, 2.0), (1.0 / 11.0) * (1.0 / 10.0));
  EXPECT_DOUBLE_EQ(HEta(10, 3, INFINITY, 2.0), 0.25);
}

TEST(Bounds, StarNullNonincreasingInEta) {
  RiskInputs in;
  in.n = 1000;
  in.k = 40;
  in.alpha = 0.05;
  double prev = INFINITY;
  for (double eta : {1.0, 10.0, 100.0, 1e3, 1e4, HUGE_VAL}) {
    in.eta = eta;
    const auto b = StarNullRiskBound(in, static_cast<double>(CascadeCountCycle(8)));
    EXPECT_LE(b.value, prev + 1e-15);
    EXPECT_GE(b.value, in.alpha);
    prev = b.value;
  }
}

TEST(Bounds, CenterBracket) {
  RiskInputs in;
  in.n = 100;
  for (size_t k = 2; k <= 50; ++k)
    for (double eta : {0.1, 1.0, 10.0}) {
      in.k = k;
      in.eta = eta;
      const auto b = CenterTestRiskBounds(in);
      EXPECT_LE(b.lower, b.upper);
    }
  in.k = 100;
  EXPECT_THROW(CenterTestRiskBounds(in), Error);
}

TEST(Bounds, MultiSpreadDecreasingInM) {
  RiskInputs in;
  in.n = 500;
  in.k = 20;
  in.eta = 50.0;
  double prev_w = INFINITY, prev_c = INFINITY;
  for (size_t m = 1; m <= 64; m *= 2) {
    in.m = m;
    const auto b = MultiSpreadRiskBounds(in, static_cast<double>(CascadeCountCycle(8)));
    EXPECT_LE(b.w_bar.value, prev_w + 1e-15);
    EXPECT_LE(b.c_bar.value, prev_c + 1e-15);
    prev_w = b.w_bar.value;
    prev_c = b.c_bar.value;
  }
}

TEST(Bounds, LineCycleDomain) {
  RiskInputs in;
  in.n = 100;
  in.k = 60;
  in.eta = 10.0;
  EXPECT_THROW(LineCycleBound(in), Error);
  in.k = 10;
  EXPECT_GE(LineCycleBound(in).value, in.alpha);
}

TEST(MonteCarlo, BaselineRiskOnSaturatedGrid) {
  const size_t dims[] = {10, 10};
  const Graph grid = TorusGrid(dims);
  SimulationPlan plan;
  plan.k = 20;
  plan.c = 20;
  plan.reps = 50;
  const auto r = McBaselineRisk(EmptyGraph(100), grid, 0.0, 5.0, BaselineKind::kTt, 0, plan);
  EXPECT_EQ(r.type_i, 1.0);
  EXPECT_EQ(r.type_ii, 0.0);
}

TEST(MonteCarlo, DeterministicPermutationRisk) {
  const Graph g = CycleGraph(30);
  SimulationPlan plan;
  plan.k = 6;
  plan.reps = 40;
  plan.seed = 5;
  TestConfig cfg;
  cfg.B = 50;
  cfg.alpha = 0.1;
  const Statistic w = Statistic::EdgesWithin(g);
  const auto a = McRisk(EmptyGraph(30), g, 0.0, 20.0, w, cfg, plan);
  plan.threads = 3;
  const auto b = McRisk(EmptyGraph(30), g, 0.0, 20.0, w, cfg, plan);
  EXPECT_EQ(a.type_i, b.type_i);
  EXPECT_EQ(a.type_ii, b.type_ii);
  EXPECT_EQ(a.median_threshold, b.median_threshold);
}

TEST(Median, OddEvenEmpty) {
  EXPECT_EQ(Median({3, 1, 2}), 2.0);
  EXPECT_EQ(Median({4, 1, 2, 3}), 2.5);
  EXPECT_EQ(Median({}), 0.0);
}

}  // namespace
}  // namespace netspread
