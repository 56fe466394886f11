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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "netspread/graph.hpp"
#include "netspread/infection.hpp"

namespace netspread {

// Edges with both endpoints infected; censored endpoints never count.
uint64_t EdgesWithin(const Graph& g, const InfectionVector& j);

// min_v max_{u infected} d(u, v). Censored vertices are not targets but may
// be centers. kUnreachable if no vertex reaches every infected vertex.
// Throws kInvalidArgument when nothing is infected.
uint32_t InfectionRadius(const Graph& g, const InfectionVector& j);

// Mehlhorn's Steiner approximation over the infected vertices (unit edge
// weights). SteinerWeight is the MST weight of the Voronoi auxiliary graph,
// which equals the MST weight of the terminal distance network: at least the
// optimum, at most 2 (1 - 1/t) times it, and unchanged by relabeling.
// SteinerTree expands that MST into paths, takes a spanning tree and prunes
// non-terminal leaves; its weight can be smaller but depends on tie-breaks.
// Both throw kDisconnected if the terminals do not share a component.
uint64_t SteinerWeight(const Graph& g, const InfectionVector& j);
uint64_t SteinerWeight(const Graph& g, std::span<const Vertex> terminals);
std::vector<Edge> SteinerTree(const Graph& g, std::span<const Vertex> terminals);

// 1 iff center is infected (censored counts as 0).
int CenterIndicator(const InfectionVector& j, Vertex center);

uint64_t OrbitCount(std::span<const Vertex> orbit, const InfectionVector& j);

// (1/m) sum_i W(g, js[i]); throws on an empty list.
double AvgEdgesWithin(const Graph& g, std::span<const InfectionVector> js);

enum class StatisticKind { kEdgesWithin, kRadius, kSteiner, kCenter, kOrbitCount };

// A test statistic bound to its reference graph. Value() reports the
// statistic in natural units (+inf for disconnected radius/Steiner cases).
// Score() is oriented so that large values are evidence against the null:
// radius and Steiner weight are small under contagion and are negated.
class Statistic {
 public:
  static Statistic EdgesWithin(Graph g);
  static Statistic Radius(Graph g);
  static Statistic Steiner(Graph g);
  static Statistic Center(size_t n, Vertex center);
  static Statistic OrbitCount(size_t n, std::vector<Vertex> orbit);

  StatisticKind kind() const { return kind_; }
  std::string name() const;
  size_t n() const { return n_; }
  bool lower_tail() const {
    return kind_ == StatisticKind::kRadius || kind_ == StatisticKind::kSteiner;
  }
  const Graph* graph() const { return graph_.get(); }

  double Value(const InfectionVector& j) const;
  double Score(const InfectionVector& j) const {
    const double v = Value(j);
    return lower_tail() ? -v : v;
  }
  double ScoreToValue(double score) const { return lower_tail() ? -score : score; }

 private:
  Statistic(StatisticKind kind, size_t n) : kind_(kind), n_(n) {}

  uint32_t CachedRadius(const InfectionVector& j) const;

  StatisticKind kind_;
  size_t n_;
  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const std::vector<uint16_t>> distances_;  // n x n, radius only
  Vertex center_ = 0;
  std::vector<Vertex> orbit_;
};

}  // namespace netspread
