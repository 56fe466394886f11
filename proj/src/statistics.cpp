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

#include "netspread/statistics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>

#include "netspread/error.hpp"

namespace netspread {
namespace {

constexpr uint16_t kFar = std::numeric_limits<uint16_t>::max();
constexpr size_t kDistanceCacheMaxN = 4096;

void CheckSize(const Graph& g, const InfectionVector& j) {
  Require(g.n() == j.n(), ErrorCode::kInvalidArgument, "graph/infection size mismatch");
}

class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<size_t> parent_;
};

}  // namespace

uint64_t EdgesWithin(const Graph& g, const InfectionVector& j) {
  CheckSize(g, j);
  uint64_t w = 0;
  for (auto [u, v] : g.edges()) w += (j.infected(u) && j.infected(v)) ? 1 : 0;
  return w;
}

uint32_t InfectionRadius(const Graph& g, const InfectionVector& j) {
  CheckSize(g, j);
  const auto infected = j.infected_vertices();
  Require(!infected.empty(), ErrorCode::kInvalidArgument, "radius needs an infected vertex");
  std::vector<uint32_t> ecc(g.n(), 0);
  for (Vertex u : infected) {
    const auto d = BfsDistances(g, u);
    for (Vertex v = 0; v < g.n(); ++v) ecc[v] = std::max(ecc[v], d[v]);
  }
  return *std::min_element(ecc.begin(), ecc.end());
}

uint64_t SteinerWeight(const Graph& g, const InfectionVector& j) {
  CheckSize(g, j);
  const auto terminals = j.infected_vertices();
  return SteinerWeight(g, terminals);
}

namespace {

struct MehlhornRun {
  uint64_t aux_weight = 0;
  std::vector<Edge> expanded;  // union of the shortest paths behind the MST
};

MehlhornRun RunMehlhorn(const Graph& g, std::span<const Vertex> terminals, bool expand) {
  const size_t n = g.n();
  const size_t t = terminals.size();
  MehlhornRun run;
  for (Vertex v : terminals)
    Require(v < n, ErrorCode::kInvalidArgument, "terminal out of range");
  if (t <= 1) return run;

  // Voronoi regions by multi-source BFS.
  std::vector<uint32_t> dist(n, kUnreachable);
  std::vector<uint32_t> owner(n, kUnreachable);
  std::vector<Vertex> pred(n, 0);
  std::deque<Vertex> queue;
  for (uint32_t i = 0; i < t; ++i) {
    const Vertex s = terminals[i];
    if (owner[s] != kUnreachable) continue;
    dist[s] = 0;
    owner[s] = i;
    pred[s] = s;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      owner[w] = owner[u];
      pred[w] = u;
      queue.push_back(w);
    }
  }

  // Auxiliary terminal graph: cheapest boundary edge per pair of regions.
  struct AuxEdge {
    uint32_t weight, a, b;
    Vertex u, v;
  };
  std::vector<AuxEdge> aux;
  for (auto [u, v] : g.edges()) {
    if (owner[u] == kUnreachable || owner[u] == owner[v]) continue;
    AuxEdge e{dist[u] + 1 + dist[v], owner[u], owner[v], u, v};
    if (e.a > e.b) {
      std::swap(e.a, e.b);
      std::swap(e.u, e.v);
    }
    aux.push_back(e);
  }
  auto key = [](const AuxEdge& e) { return std::tie(e.a, e.b, e.weight, e.u, e.v); };
  std::sort(aux.begin(), aux.end(), [&](const AuxEdge& x, const AuxEdge& y) { return key(x) < key(y); });
  aux.erase(std::unique(aux.begin(), aux.end(),
                        [](const AuxEdge& x, const AuxEdge& y) { return x.a == y.a && x.b == y.b; }),
            aux.end());
  std::sort(aux.begin(), aux.end(), [](const AuxEdge& x, const AuxEdge& y) {
    return std::tie(x.weight, x.a, x.b) < std::tie(y.weight, y.a, y.b);
  });

  // Kruskal on the auxiliary graph. Any MST of it is an MST of the terminal
  // distance network, so its weight does not depend on tie-breaking.
  DisjointSets regions(t);
  size_t joined = 0;
  for (const auto& e : aux) {
    if (!regions.Union(e.a, e.b)) continue;
    ++joined;
    run.aux_weight += e.weight;
    if (!expand) continue;
    run.expanded.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    for (Vertex x : {e.u, e.v})
      for (; pred[x] != x; x = pred[x])
        run.expanded.emplace_back(std::min(x, pred[x]), std::max(x, pred[x]));
  }
  // Duplicate terminals collapse onto one region.
  size_t distinct = 0;
  for (uint32_t i = 0; i < t; ++i) distinct += owner[terminals[i]] == i ? 1 : 0;
  if (joined + 1 != distinct) Fail(ErrorCode::kDisconnected, "terminals are not connected");
  return run;
}

}  // namespace

uint64_t SteinerWeight(const Graph& g, std::span<const Vertex> terminals) {
  return RunMehlhorn(g, terminals, false).aux_weight;
}

std::vector<Edge> SteinerTree(const Graph& g, std::span<const Vertex> terminals) {
  const size_t n = g.n();
  std::vector<Edge> sub = RunMehlhorn(g, terminals, true).expanded;

  // Spanning tree of the expanded subgraph, then prune non-terminal leaves.
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  DisjointSets span(n);
  std::vector<Edge> tree_edges;
  std::vector<std::vector<Vertex>> tree(n);
  for (auto [u, v] : sub) {
    if (!span.Union(u, v)) continue;
    tree_edges.emplace_back(u, v);
    tree[u].push_back(v);
    tree[v].push_back(u);
  }
  std::vector<bool> is_terminal(n, false);
  for (Vertex v : terminals) is_terminal[v] = true;
  std::vector<size_t> degree(n);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree[v].size();
    if (degree[v] == 1 && !is_terminal[v]) leaves.push_back(v);
  }
  std::vector<bool> removed(n, false);
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    degree[v] = 0;
    removed[v] = true;
    for (Vertex w : tree[v]) {
      if (degree[w] == 0) continue;
      if (--degree[w] == 1 && !is_terminal[w]) leaves.push_back(w);
    }
  }
  std::erase_if(tree_edges, [&](const Edge& e) { return removed[e.first] || removed[e.second]; });
  return tree_edges;
}

int CenterIndicator(const InfectionVector& j, Vertex center) {
  Require(center < j.n(), ErrorCode::kInvalidArgument, "center out of range");
  return j.infected(center) ? 1 : 0;
}

uint64_t OrbitCount(std::span<const Vertex> orbit, const InfectionVector& j) {
  uint64_t count = 0;
  for (Vertex v : orbit) {
    Require(v < j.n(), ErrorCode::kInvalidArgument, "orbit vertex out of range");
    count += j.infected(v) ? 1 : 0;
  }
  return count;
}

double AvgEdgesWithin(const Graph& g, std::span<const InfectionVector> js) {
  Require(!js.empty(), ErrorCode::kInvalidArgument, "average over an empty list");
  double total = 0.0;
  for (const auto& j : js) total += static_cast<double>(EdgesWithin(g, j));
  return total / static_cast<double>(js.size());
}

Statistic Statistic::EdgesWithin(Graph g) {
  Statistic s(StatisticKind::kEdgesWithin, g.n());
  s.graph_ = std::make_shared<const Graph>(std::move(g));
  return s;
}

Statistic Statistic::Radius(Graph g) {
  Statistic s(StatisticKind::kRadius, g.n());
  const size_t n = g.n();
  if (n <= kDistanceCacheMaxN) {
    auto d = std::make_shared<std::vector<uint16_t>>(n * n, kFar);
    for (Vertex u = 0; u < n; ++u) {
      const auto row = BfsDistances(g, u);
      for (Vertex v = 0; v < n; ++v)
        if (row[v] != kUnreachable) (*d)[u * n + v] = static_cast<uint16_t>(row[v]);
    }
    s.distances_ = std::move(d);
  }
  s.graph_ = std::make_shared<const Graph>(std::move(g));
  return s;
}

Statistic Statistic::Steiner(Graph g) {
  Statistic s(StatisticKind::kSteiner, g.n());
  s.graph_ = std::make_shared<const Graph>(std::move(g));
  return s;
}

Statistic Statistic::Center(size_t n, Vertex center) {
  Require(center < n, ErrorCode::kInvalidArgument, "center out of range");
  Statistic s(StatisticKind::kCenter, n);
  s.center_ = center;
  return s;
}

Statistic Statistic::OrbitCount(size_t n, std::vector<Vertex> orbit) {
  for (Vertex v : orbit) Require(v < n, ErrorCode::kInvalidArgument, "orbit vertex out of range");
  Statistic s(StatisticKind::kOrbitCount, n);
  s.orbit_ = std::move(orbit);
  return s;
}

std::string Statistic::name() const {
  switch (kind_) {
    case StatisticKind::kEdgesWithin:
      return "W";
    case StatisticKind::kRadius:
      return "R";
    case StatisticKind::kSteiner:
      return "T";
    case StatisticKind::kCenter:
      return "C";
    case StatisticKind::kOrbitCount:
      return "orbit";
  }
  return "?";
}

uint32_t Statistic::CachedRadius(const InfectionVector& j) const {
  const auto infected = j.infected_vertices();
  Require(!infected.empty(), ErrorCode::kInvalidArgument, "radius needs an infected vertex");
  const auto& d = *distances_;
  uint32_t best = kFar;
  for (Vertex v = 0; v < n_; ++v) {
    uint32_t ecc = 0;
    for (Vertex u : infected) {
      ecc = std::max<uint32_t>(ecc, d[u * n_ + v]);
      if (ecc >= best) break;
    }
    best = std::min(best, ecc);
  }
  return best == kFar ? kUnreachable : best;
}

double Statistic::Value(const InfectionVector& j) const {
  Require(j.n() == n_, ErrorCode::kInvalidArgument, "statistic/infection size mismatch");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (kind_) {
    case StatisticKind::kEdgesWithin:
      return static_cast<double>(netspread::EdgesWithin(*graph_, j));
    case StatisticKind::kRadius: {
      const uint32_t r = distances_ ? CachedRadius(j) : InfectionRadius(*graph_, j);
      return r == kUnreachable ? kInf : static_cast<double>(r);
    }
    case StatisticKind::kSteiner:
      try {
        return static_cast<double>(SteinerWeight(*graph_, j));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDisconnected) throw;
        return kInf;
      }
    case StatisticKind::kCenter:
      return CenterIndicator(j, center_);
    case StatisticKind::kOrbitCount:
      return static_cast<double>(netspread::OrbitCount(orbit_, j));
  }
  return 0.0;
}

}  // namespace netspread
