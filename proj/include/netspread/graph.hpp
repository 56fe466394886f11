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
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netspread {

using Vertex = uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr uint32_t kUnreachable = std::numeric_limits<uint32_t>::max();

// Immutable simple undirected graph. Edges are stored normalized (u < v) and
// sorted; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  size_t n() const { return adjacency_.size(); }
  size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  size_t degree(Vertex v) const { return adjacency_[v].size(); }
  size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  friend Graph BuildGraph(size_t n, std::span<const Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Deduplicates and normalizes edges. Throws kInvalidArgument for n == 0,
// self-loops, or out-of-range endpoints.
Graph BuildGraph(size_t n, std::span<const Edge> edges);

// Named families.
Graph EmptyGraph(size_t n);
Graph CompleteGraph(size_t n);
Graph StarGraph(size_t n);  // center is vertex 0
Graph CycleGraph(size_t n);
Graph PathGraph(size_t n);
Graph CompleteBipartiteGraph(size_t a, size_t b);  // parts [0,a) and [a,a+b)
// Cartesian product of cycles; vertex index is mixed radix, first dim fastest.
Graph TorusGrid(std::span<const size_t> dims);

Graph ErdosRenyi(size_t n, double p, uint64_t seed);
// Two equal blocks ([0, n/2) and [n/2, n)); within-block probability a,
// between-block probability b.
Graph TwoBlockSbm(size_t n, double a, double b, uint64_t seed);
// Each pair is present in both graphs with probability gamma * p and in
// exactly one of them with probability p - gamma * p each.
std::pair<Graph, Graph> CorrelatedErPair(size_t n, double p, double gamma,
                                         uint64_t seed);

std::vector<uint32_t> BfsDistances(const Graph& g, Vertex source);

bool IsConnected(const Graph& g);

// Largest finite hop distance; kUnreachable if g is disconnected.
uint32_t Diameter(const Graph& g);

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // index -> label
  std::unordered_map<std::string, Vertex> index;

  // Labels "0".."n-1".
  static LabeledGraph WithDecimalLabels(Graph g);
};

// One edge per line "u v"; text after '#' and blank lines are skipped; labels are
// mapped to dense indices in order of first appearance.
LabeledGraph ParseEdgeList(std::string_view text);
LabeledGraph LoadEdgeListFile(const std::string& path);

// Graph specification strings, e.g. "cycle:10", "torus:20x20", "er:100:0.05",
// "bipartite:3,4", "file:contacts.txt". Random families take an optional
// trailing seed and fall back to default_seed.
LabeledGraph GraphFromSpec(std::string_view spec, uint64_t default_seed = 0);

}  // namespace netspread
