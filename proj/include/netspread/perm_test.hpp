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
#include <span>
#include <string>
#include <vector>

#include "netspread/graph.hpp"
#include "netspread/infection.hpp"
#include "netspread/perm_group.hpp"
#include "netspread/statistics.hpp"

namespace netspread {

enum class PermMode { kFull, kCensorFixed };

enum class Validity { kSkipped, kValid, kInvalid, kUnverifiable };

const char* ValidityName(Validity v);

struct ValidityReport {
  Validity status = Validity::kSkipped;
  std::string note;
};

struct TestConfig {
  double alpha = 0.05;
  uint64_t B = 1000;
  uint64_t seed = 0;
  PermMode mode = PermMode::kFull;
  size_t threads = 0;        // 0: NETSPREAD_THREADS or hardware
  size_t exact_max_n = 8;    // guard on the number of permuted positions
};

struct HistogramBin {
  double value;    // statistic in natural units
  uint64_t count;  // permutations (exact) or replicates (Monte Carlo)
};

struct TestResult {
  std::string statistic;
  bool lower_tail = false;  // reject when observed < threshold
  double observed = 0.0;
  double threshold = 0.0;
  uint64_t exceed_count = 0;  // permuted values at least as extreme as observed
  uint64_t total = 0;         // n! (exact) or B
  double p_value = 1.0;       // count/total (exact), (count+1)/(B+1) otherwise
  bool exact = false;
  bool reject = false;
  bool saturated = false;  // alpha below one permutation's mass; never rejects
  std::vector<HistogramBin> histogram;

  // Composite alternatives only.
  bool composite = false;
  std::string statistic2;
  bool lower_tail2 = false;
  double observed2 = 0.0;
  double threshold2 = 0.0;
  uint64_t exceed_count2 = 0;
  double p_value2 = 1.0;
  std::vector<HistogramBin> histogram2;

  ValidityReport validity;
};

// Every permutation of the movable positions, grouped into distinct
// arrangements. Throws kGuardExceeded when more than cfg.exact_max_n
// positions move.
TestResult ExactTest(const Statistic& stat, const InfectionVector& j, const TestConfig& cfg);

// B uniform permutations; replicate r draws on Rng::Substream(seed, r).
// kCensorFixed permutes only the uncensored positions.
TestResult McTest(const Statistic& stat, const InfectionVector& j, const TestConfig& cfg);

// The permuted vector used by replicate r of McTest.
InfectionVector Resample(const InfectionVector& j, const TestConfig& cfg, uint64_t r);

// Two alternatives: t1 is the level-alpha/2 threshold of S1; t2 is the
// smallest S2 value with mass{S2 >= t2, S1 <= t1} <= alpha/2.
TestResult CompositeMcTest(const Statistic& s1, const Statistic& s2, const InfectionVector& j,
                           const TestConfig& cfg);
TestResult CompositeExactTest(const Statistic& s1, const Statistic& s2,
                              const InfectionVector& j, const TestConfig& cfg);

// Each replicate permutes every spread independently and averages the
// per-spread statistic (W gives the average edges-within statistic).
TestResult MultiSpreadMcTest(const Statistic& stat, std::span<const InfectionVector> js,
                             const TestConfig& cfg);

// Smallest value v in the sorted bins with mass{>= v} <= alpha * total. When
// none qualifies the largest value is returned, and saturated is set (the
// test never rejects) only if alpha * total < 1.
struct Threshold {
  double value;
  bool saturated;
};
Threshold UpperThreshold(std::span<const HistogramBin> bins, double alpha);

// Pi_1 Pi_0 = S_n with Pi_i = Aut(G_i).
ValidityReport CheckValidity(const Graph& g0, const Graph& g1,
                             size_t max_n = kDefaultAutomorphismMaxN);
// Same, with a surrogate group standing in for Aut(G_1).
ValidityReport CheckValidity(const Graph& g0, const PermGroup& surrogate,
                             size_t max_n = kDefaultAutomorphismMaxN);
// Restricted to automorphisms that preserve the censored set, acting on the
// uncensored vertices.
ValidityReport CheckValidityCensorFixed(const Graph& g0, const Graph& g1,
                                        const InfectionVector& j,
                                        size_t max_n = kDefaultAutomorphismMaxN);

// The subgroup of g preserving `censored` setwise, restricted to the other
// vertices (relabeled in increasing order).
PermGroup RestrictToUncensored(const PermGroup& g, const InfectionVector& j);

}  // namespace netspread
