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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netspread/graph.hpp"
#include "netspread/infection.hpp"
#include "netspread/perm_test.hpp"
#include "netspread/statistics.hpp"

namespace netspread {

struct RiskInputs {
  size_t n = 0;
  size_t k = 1;
  size_t c = 0;
  double eta = 0.0;
  double alpha = 0.05;
  double D = 2.0;       // degree of the vertex-transitive graph
  size_t m = 1;         // independent spreads
  double nt_min = 2.0;  // lower bound on the cut N_t
};

// A risk bound; vacuous bounds report alpha + 1.
struct Bound {
  double value = 0.0;
  bool vacuous = false;
};

// prod_{m=1}^{k-1} eta / (n - m + eta nt_min); eta = +inf gives nt_min^-(k-1).
double HEta(size_t n, size_t k, double eta, double nt_min);

// Permutation test with W on a connected vertex-transitive alternative of
// degree D against the star null.
Bound StarNullRiskBound(const RiskInputs& in, double c_k);

struct CenterBounds {
  double lower = 0.0;
  double upper = 0.0;
};
// Center indicator test on the star alternative. Throws kDomain if k >= n.
CenterBounds CenterTestRiskBounds(const RiskInputs& in);

// p_{k,0}(eta) as used by the averaged center-indicator bound.
double CenterInfectionProbability(const RiskInputs& in);

struct MultiSpreadBounds {
  Bound w_bar;  // average edges-within statistic
  Bound c_bar;  // average center indicator
};
MultiSpreadBounds MultiSpreadRiskBounds(const RiskInputs& in, double c_k);

// W on the cycle used for a path-graph alternative. Throws kDomain unless
// k < n / 2.
Bound LineCycleBound(const RiskInputs& in);

// Orderings of k distinct vertices, each adjacent to an earlier one, that
// contain both u and v. Throws kGuardExceeded for n > 16 or k > 8.
uint64_t CascadeCount(const Graph& g, size_t k, Vertex u, Vertex v);
// (k - 1) 2^(k - 1).
uint64_t CascadeCountCycle(size_t k);
// min over edges of CascadeCount.
uint64_t MinEdgeCascadeCount(const Graph& g, size_t k);

// 1.1 d^2 (k n ln ln n / (n - c))^(1/d) and k n (ln ln n)^3 / (n - c).
// Throw kDomain unless n > e and c < n.
double TbThreshold(size_t d, size_t n, size_t k, size_t c);
double TtThreshold(size_t n, size_t k, size_t c);

enum class BaselineKind { kTb, kTt };

// Baselines reject when the statistic falls below the threshold.
struct BaselineReport {
  BaselineKind kind = BaselineKind::kTb;
  size_t d = 0;
  double threshold = 0.0;
  // The largest value the statistic can take on g (diameter for TB, n - 1
  // for TT); kUnreachable when g is disconnected.
  double ceiling = 0.0;
  std::string diagnosis;  // "always rejects" or "informative"
};
BaselineReport Baseline(BaselineKind kind, const Graph& g, size_t d, size_t k, size_t c);

// Decision of one test on one simulated infection.
struct Decision {
  bool reject = false;
  double threshold = 0.0;
};
using DecisionFn = std::function<Decision(const InfectionVector& j, uint64_t rep)>;

struct SimulationPlan {
  size_t k = 1;
  size_t c = 0;
  uint64_t reps = 1000;
  uint64_t seed = 0;
  size_t threads = 0;
};

// Simulates reps infections on g with parameter eta (stream `tag`), applies
// decide to each and returns the per-replicate decisions in order.
std::vector<Decision> SimulateDecisions(const Graph& g, double eta, const SimulationPlan& plan,
                                        uint64_t tag, const DecisionFn& decide);

struct RiskEstimate {
  double type_i = 0.0;
  double type_ii = 0.0;
  double median_threshold = 0.0;  // across null replicates
};

// Monte Carlo risk of the permutation test: Type I under (g0, eta0), Type II
// under (g1, eta1). Each replicate runs the test single-threaded.
RiskEstimate McRisk(const Graph& g0, const Graph& g1, double eta0, double eta1,
                    const Statistic& stat, const TestConfig& cfg, const SimulationPlan& plan);

// Same for a baseline threshold rule.
RiskEstimate McBaselineRisk(const Graph& g0, const Graph& g1, double eta0, double eta1,
                            BaselineKind kind, size_t d, const SimulationPlan& plan);

// Decision functions shared by McRisk and the experiment runner.
DecisionFn PermutationDecision(const Statistic& stat, const TestConfig& cfg, uint64_t tag);
DecisionFn BaselineDecision(const Statistic& stat, double threshold);

double Median(std::vector<double> values);

}  // namespace netspread
