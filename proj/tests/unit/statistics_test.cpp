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
#include <numeric>

#include "netspread/error.hpp"
#include "netspread/rng.hpp"
#include "netspread/statistics.hpp"
#include "support/oracles.hpp"

namespace netspread {
namespace {

InfectionVector Set(size_t n, std::vector<Vertex> s) { return InfectionVector::FromInfected(n, s); }

TEST(EdgesWithin, IgnoresCensoredEndpoints) {
  const Graph g = CycleGraph(6);
  EXPECT_EQ(EdgesWithin(g, Set(6, {0, 1, 2})), 2u);
  InfectionVector j = Set(6, {0, 1, 2});
  j.set(1, Status::kCensored);
  EXPECT_EQ(EdgesWithin(g, j), 0u);
}

TEST(Radius, BruteForceOnSmallGraphs) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const size_t n = 4 + rng.Below(4);
    const Graph g = ErdosRenyi(n, 0.5, rng.Next());
    for (size_t k = 1; k <= 3; ++k)
      for (const auto& s : oracle::Subsets(n, k)) {
        uint32_t best = kUnreachable;
        for (Vertex v = 0; v < n; ++v) {
          const auto d = BfsDistances(g, v);
          uint32_t worst = 0;
          for (Vertex u : s) worst = std::max(worst, d[u]);
          best = std::min(best, worst);
        }
        EXPECT_EQ(InfectionRadius(g, Set(n, s)), best);
      }
  }
  EXPECT_THROW(InfectionRadius(CycleGraph(4), InfectionVector(4)), Error);
}

TEST(Steiner, BoundsAgainstOptimum) {
  for (int n = 4; n <= 6; ++n)
    for (uint32_t mask : oracle::ConnectedClasses(n)) {
      const Graph g = oracle::ToGraph(mask, n);
      for (uint32_t term = 1; term < (1u << n); ++term) {
        const int t = __builtin_popcount(term);
        if (t < 2 || t > 4) continue;
        std::vector<Vertex> ts;
        for (int v = 0; v < n; ++v)
          if ((term >> v) & 1u) ts.push_back(v);
        const int opt = oracle::SteinerOpt(mask, n, term);
        const auto approx = SteinerWeight(g, ts);
        const auto tree = SteinerTree(g, ts);
        EXPECT_GE(static_cast<int>(tree.size()), opt);
        EXPECT_LE(tree.size(), approx);
        EXPECT_LE(static_cast<double>(approx), 2.0 * (1.0 - 1.0 / t) * opt + 1e-9);
      }
    }
}

TEST(Steiner, TreeSpansTerminals) {
  const size_t dims[] = {6, 6};
  const Graph g = TorusGrid(dims);
  const std::vector<Vertex> ts{0, 8, 21, 35};
  const auto tree = SteinerTree(g, ts);
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : tree) {
    EXPECT_TRUE(g.has_edge(u, v));
    EXPECT_NE(find(u), find(v));
    parent[find(u)] = find(v);
  }
  for (Vertex t : ts) EXPECT_EQ(find(t), find(ts[0]));
}

TEST(Steiner, TrivialAndDisconnected) {
  EXPECT_EQ(SteinerWeight(PathGraph(5), Set(5, {3})), 0u);
  EXPECT_EQ(SteinerWeight(PathGraph(5), Set(5, {0, 4})), 4u);
  try {
    SteinerWeight(EmptyGraph(4), Set(4, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
  EXPECT_TRUE(std::isinf(Statistic::Steiner(EmptyGraph(4)).Value(Set(4, {0, 1}))));
}

TEST(Statistic, OrientationAndNames) {
  const Graph g = CycleGraph(6);
  const auto j = Set(6, {0, 1});
  EXPECT_EQ(Statistic::EdgesWithin(g).Score(j), 1.0);
  EXPECT_EQ(Statistic::Radius(g).Value(j), 1.0);
  EXPECT_EQ(Statistic::Radius(g).Score(j), -1.0);
  EXPECT_EQ(Statistic::Steiner(g).Score(j), -1.0);
  EXPECT_EQ(Statistic::Center(6, 0).Value(j), 1.0);
  EXPECT_EQ(Statistic::OrbitCount(6, {0, 1, 2}).Value(j), 2.0);
  EXPECT_TRUE(Statistic::Radius(g).lower_tail());
  EXPECT_FALSE(Statistic::EdgesWithin(g).lower_tail());
}

TEST(Statistic, AverageEdgesWithin) {
  const Graph g = PathGraph(4);
  const std::vector<InfectionVector> js{Set(4, {0, 1}), Set(4, {0, 2})};
  EXPECT_DOUBLE_EQ(AvgEdgesWithin(g, js), 0.5);
  EXPECT_THROW(AvgEdgesWithin(g, {}), Error);
}

}  // namespace
}  // namespace netspread
