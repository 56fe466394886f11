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
#include "netspread/likelihood.hpp"
#include "netspread/perm_group.hpp"
#include "netspread/statistics.hpp"
#include "support/oracles.hpp"

namespace netspread {
namespace {

InfectionVector Set(size_t n, std::vector<Vertex> s) { return InfectionVector::FromInfected(n, s); }

TEST(Likelihood, MatchesPathSumOracle) {
  for (const Graph& g : {CycleGraph(6), PathGraph(6), StarGraph(6)})
    for (double eta : {0.3, 2.0})
      for (const auto& [set, p] : oracle::ExactSetLaw(g, eta, 3))
        EXPECT_NEAR(LikelihoodExact(g, eta, Set(6, set)).value, p, 1e-13);
}

TEST(Likelihood, EmptyGraphIsUniform) {
  const auto r = LikelihoodExact(EmptyGraph(7), 5.0, Set(7, {1, 2, 3}));
  EXPECT_DOUBLE_EQ(r.value, 1.0 / 35.0);
}

TEST(Likelihood, CycleFiveClosedForms) {
  const Graph c5 = CycleGraph(5);
  const Graph e5 = EmptyGraph(5);
  for (double eta : {0.1, 1.0, 7.5}) {
    EXPECT_NEAR(LikelihoodRatio(e5, c5, eta, Set(5, {0, 1})), (1 + eta) / (1 + eta / 2), 1e-13);
    EXPECT_NEAR(LikelihoodRatio(e5, c5, eta, Set(5, {0, 2})), 1 / (1 + eta / 2), 1e-13);
  }
}

TEST(Likelihood, CensoredSumsToOne) {
  const Graph g = CycleGraph(6);
  for (double eta : {0.5, 3.0}) {
    double total = 0.0;
    for (const auto& j : EnumerateInfections(6, 2, 2)) total += LikelihoodCensored(g, eta, j).value;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Likelihood, NormalizerClosedFormMatchesEnumeration) {
  const Graph g = PathGraph(6);
  for (const auto& j : EnumerateInfections(6, 2, 1)) {
    const auto enumerated = LikelihoodCensored(g, 1.5, j);
    const auto closed = LikelihoodCensored(g, 1.5, j, 0);
    EXPECT_TRUE(enumerated.z_enumerated);
    EXPECT_FALSE(closed.z_enumerated);
    EXPECT_NEAR(enumerated.value, closed.value, 1e-12);
  }
}

TEST(Likelihood, FirstOrderResidualShrinks) {
  const Graph c5 = CycleGraph(5);
  const auto j = Set(5, {0, 1});
  double prev = INFINITY;
  for (double eta : {1e-1, 1e-2, 1e-3}) {
    const double r = std::fabs(FirstOrderResidual(c5, eta, j));
    EXPECT_LT(r, prev);
    EXPECT_LE(r, eta);
    prev = r;
  }
}

TEST(Likelihood, StarMaximumAgreesWithCenterIndicator) {
  // The star beats the empty graph exactly when the center is infected.
  const Graph star = StarGraph(6);
  const Graph empty = EmptyGraph(6);
  for (double eta : {0.5, 1.0, 5.0})
    for (size_t k = 1; k <= 4; ++k)
      for (const auto& s : oracle::Subsets(6, k)) {
        const auto j = Set(6, s);
        const bool star_wins = LikelihoodExact(star, eta, j).value > LikelihoodExact(empty, eta, j).value;
        EXPECT_EQ(star_wins, CenterIndicator(j, 0) == 1 && k > 1);
      }
}

TEST(Likelihood, SupremumOverLabelingsIsInvariant) {
  const Graph c4 = CycleGraph(4);
  for (double eta : {0.5, 2.0}) {
    const double ref = TopologySupLikelihood(c4, eta, Set(4, {0, 1}));
    for (const auto& s : oracle::Subsets(4, 2))
      EXPECT_NEAR(TopologySupLikelihood(c4, eta, Set(4, s)), ref, 1e-14);
  }
}

TEST(Likelihood, Guards) {
  EXPECT_THROW(LikelihoodExact(CycleGraph(12), 1.0, Set(12, {0, 1, 2, 3, 4, 5, 6, 7, 8})), Error);
  EXPECT_THROW(TopologySupLikelihood(CycleGraph(8), 1.0, Set(8, {0})), Error);
}

TEST(PairwiseSum, Accuracy) {
  std::vector<double> v(1 << 16, 0.1);
  EXPECT_NEAR(PairwiseSum(v), 6553.6, 1e-9);
}

}  // namespace
}  // namespace netspread
