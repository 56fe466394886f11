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
#include "netspread/rng.hpp"

namespace netspread {

// Sequential spreading with lambda = 1. After m infections vertex v is next
// with probability (1 + eta N_{t,v}) / ((n - m) + eta N_t). eta may be +inf,
// in which case only frontier vertices are eligible (uniform draw when the
// frontier is empty).
struct SpreadParams {
  double eta = 0.0;
  size_t k = 1;
};

InfectionPath SimulateSpread(const Graph& g, const SpreadParams& params, Rng& rng);
InfectionPath SimulateSpread(const Graph& g, const SpreadParams& params, uint64_t seed);

// Picks c censored vertices uniformly, then spreads until k uncensored
// vertices are infected. Censored vertices still transmit. The result lies in
// I_{k,c}.
InfectionVector SimulateObserved(const Graph& g, const SpreadParams& params, size_t c, Rng& rng);
// Same, with the censored set given.
InfectionVector SimulateObserved(const Graph& g, const SpreadParams& params,
                                 std::span<const Vertex> censored, Rng& rng);

// prod_t (1 + eta N_{t,in}) / ((n + 1 - t) + eta N_t).
double PathProbability(const Graph& g, double eta, std::span<const Vertex> path);

// Cut counts along a path: cut[t] = N_t and in[t] = N_{t,in} before step t.
struct PathCounts {
  std::vector<uint64_t> cut;
  std::vector<uint64_t> in;
};
PathCounts PathCutCounts(const Graph& g, std::span<const Vertex> path);

// Throws kInvalidArgument if j already has censored entries or c > n.
InfectionVector CensorUniform(const InfectionVector& j, size_t c, Rng& rng);
InfectionVector CensorFixed(const InfectionVector& j, std::span<const Vertex> censored);

inline constexpr uint64_t kDefaultIsingCap = 1'000'000;

// Exact draw from P(J) proportional to exp(eta W(J)) over I_{k,0}.
InfectionVector IsingSampleExact(const Graph& g, double eta, size_t k, Rng& rng,
                                 uint64_t cap = kDefaultIsingCap);

// C(n, k) as a double (exact below 2^53).
double Binomial(size_t n, size_t k);

}  // namespace netspread
