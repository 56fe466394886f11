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

#include "netspread/graph.hpp"
#include "netspread/infection.hpp"

namespace netspread {

struct LikelihoodReport {
  double value = 0.0;
  uint64_t n_paths = 0;       // path probabilities summed
  double eta = 0.0;
  uint64_t censor_terms = 0;  // uncensored completions summed (0 if c = 0)
  bool z_enumerated = false;  // normalizer from enumeration (else closed form)
};

inline constexpr size_t kDefaultLikelihoodMaxK = 8;

// Sum of the path probability over all k! orderings of the infected set.
// The empty graph short-circuits to 1 / C(n, k).
LikelihoodReport LikelihoodExact(const Graph& g, double eta, const InfectionVector& j,
                                 size_t max_k = kDefaultLikelihoodMaxK);

// mu(J) / Z: mu averages uncensored likelihoods over all completions of the
// censored entries with weight 1 / C(n, c); Z sums mu over I_{k,c}. Z is
// enumerated when |I_{k,c}| * 2^c <= z_cap, otherwise taken from
// CensoredNormalizer (which does not depend on the graph or eta).
LikelihoodReport LikelihoodCensored(const Graph& g, double eta, const InfectionVector& j,
                                    uint64_t z_cap = 200'000,
                                    size_t max_k = kDefaultLikelihoodMaxK);

// (1 / C(n, c)) sum_{c'} C(k + c', c') C(n - k - c', c - c').
double CensoredNormalizer(size_t n, size_t k, size_t c);

// L(g1) / L(g0), censored likelihood when j has censored entries.
double LikelihoodRatio(const Graph& g0, const Graph& g1, double eta, const InfectionVector& j,
                       size_t max_k = kDefaultLikelihoodMaxK);

// R(empty, g1, eta; j) - (1 + eta W_1(j)).
double FirstOrderResidual(const Graph& g1, double eta, const InfectionVector& j,
                          size_t max_k = kDefaultLikelihoodMaxK);

// max over all relabelings pi of L(pi g, eta; j).
double TopologySupLikelihood(const Graph& g, double eta, const InfectionVector& j,
                             size_t max_n = 6);

// Pairwise summation; deterministic for a given input order.
double PairwiseSum(std::span<const double> values);

}  // namespace netspread
