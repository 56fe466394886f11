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

#include "netspread/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

#include "netspread/error.hpp"
#include "netspread/rng.hpp"

namespace netspread {

size_t Graph::max_degree() const {
  size_t d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, adj.size());
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n() || v >= n()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

Graph BuildGraph(size_t n, std::span<const Edge> edges) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      Fail(ErrorCode::kInvalidArgument,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      Fail(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.adjacency_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

Graph EmptyGraph(size_t n) { return BuildGraph(n, {}); }

Graph CompleteGraph(size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return BuildGraph(n, e);
}

Graph StarGraph(size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return BuildGraph(n, e);
}

Graph CycleGraph(size_t n) {
  Require(n >= 3, ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return BuildGraph(n, e);
}

Graph PathGraph(size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return BuildGraph(n, e);
}

Graph CompleteBipartiteGraph(size_t a, size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, static_cast<Vertex>(a + v));
  return BuildGraph(a + b, e);
}

Graph TorusGrid(std::span<const size_t> dims) {
  Require(!dims.empty(), ErrorCode::kInvalidArgument, "torus needs at least one dimension");
  size_t n = 1;
  for (size_t d : dims) {
    Require(d >= 3, ErrorCode::kInvalidArgument, "torus dimensions must each be >= 3");
    n *= d;
  }
  std::vector<Edge> e;
  e.reserve(n * dims.size());
  for (size_t v = 0; v < n; ++v) {
    size_t stride = 1;
    size_t rest = v;
    for (size_t d : dims) {
      const size_t coord = rest % d;
      rest /= d;
      const size_t next = v - coord * stride + ((coord + 1) % d) * stride;
      e.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(next));
      stride *= d;
    }
  }
  return BuildGraph(n, e);
}

namespace {

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, std::string(name) + " must lie in [0,1]");
  }
}

}  // namespace

Graph ErdosRenyi(size_t n, double p, uint64_t seed) {
  CheckProbability(p, "p");
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.Bernoulli(p)) e.emplace_back(u, v);
  return BuildGraph(n, e);
}

Graph TwoBlockSbm(size_t n, double a, double b, uint64_t seed) {
  CheckProbability(a, "a");
  CheckProbability(b, "b");
  Rng rng(seed);
  const size_t half = n / 2;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool same = (u < half) == (v < half);
      if (rng.Bernoulli(same ? a : b)) e.emplace_back(u, v);
    }
  return BuildGraph(n, e);
}

std::pair<Graph, Graph> CorrelatedErPair(size_t n, double p, double gamma,
                                         uint64_t seed) {
  CheckProbability(p, "p");
  CheckProbability(gamma, "gamma");
  const double both = gamma * p;
  const double only = p - both;
  if (1.0 - 2.0 * only - both < -1e-12) {
    Fail(ErrorCode::kInvalidArgument,
         "gamma must be >= 2 - 1/p for valid joint edge probabilities");
  }
  Rng rng(seed);
  std::vector<Edge> e0, e1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = rng.Uniform();
      if (x < both) {
        e0.emplace_back(u, v);
        e1.emplace_back(u, v);
      } else if (x < both + only) {
        e0.emplace_back(u, v);
      } else if (x < both + 2.0 * only) {
        e1.emplace_back(u, v);
      }
    }
  return {BuildGraph(n, e0), BuildGraph(n, e1)};
}

std::vector<uint32_t> BfsDistances(const Graph& g, Vertex source) {
  Require(source < g.n(), ErrorCode::kInvalidArgument, "bfs source out of range");
  std::vector<uint32_t> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool IsConnected(const Graph& g) {
  const auto d = BfsDistances(g, 0);
  return std::none_of(d.begin(), d.end(), [](uint32_t x) { return x == kUnreachable; });
}

uint32_t Diameter(const Graph& g) {
  uint32_t best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    for (uint32_t d : BfsDistances(g, s)) {
      if (d == kUnreachable) return kUnreachable;
      best = std::max(best, d);
    }
  }
  return best;
}

LabeledGraph LabeledGraph::WithDecimalLabels(Graph g) {
  LabeledGraph out;
  out.labels.reserve(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    out.labels.push_back(std::to_string(v));
    out.index.emplace(out.labels.back(), v);
  }
  out.graph = std::move(g);
  return out;
}

LabeledGraph ParseEdgeList(std::string_view text) {
  LabeledGraph out;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = out.index.emplace(label, static_cast<Vertex>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                  ": expected two vertex labels");
    }
    if (a == b) {
      Fail(ErrorCode::kParse, "line " + std::to_string(line_no) + ": self-loop on '" + a + "'");
    }
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    edges.emplace_back(u, v);
  }
  Require(!out.labels.empty(), ErrorCode::kParse, "edge list contains no edges");
  out.graph = BuildGraph(out.labels.size(), edges);
  return out;
}

LabeledGraph LoadEdgeListFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorCode::kIo, "cannot open edge list '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseEdgeList(buf.str());
}

namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

size_t ParseCount(std::string_view s, std::string_view spec) {
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "bad integer '" + std::string(s) + "' in graph spec '" + std::string(spec) + "'");
  }
  return value;
}

double ParseReal(std::string_view s, std::string_view spec) {
  std::string copy(s);
  size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != copy.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "bad number '" + copy + "' in graph spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

LabeledGraph GraphFromSpec(std::string_view spec, uint64_t default_seed) {
  const auto colon = spec.find(':');
  Require(colon != std::string_view::npos, ErrorCode::kInvalidArgument,
          "graph spec '" + std::string(spec) + "' must look like kind:params");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (kind == "file") return LoadEdgeListFile(std::string(rest));

  const auto args = Split(rest, ':');
  auto arity = [&](size_t lo, size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      Fail(ErrorCode::kInvalidArgument,
           "wrong number of parameters in graph spec '" + std::string(spec) + "'");
    }
  };
  auto seed_at = [&](size_t i) {
    return args.size() > i ? static_cast<uint64_t>(ParseCount(args[i], spec)) : default_seed;
  };

  Graph g;
  if (kind == "empty" || kind == "complete" || kind == "star" || kind == "cycle" ||
      kind == "path") {
    arity(1, 1);
    const size_t n = ParseCount(args[0], spec);
    Require(n >= 1, ErrorCode::kInvalidArgument, "graph needs at least one vertex");
    if (kind == "empty") g = EmptyGraph(n);
    if (kind == "complete") g = CompleteGraph(n);
    if (kind == "star") g = StarGraph(n);
    if (kind == "cycle") g = CycleGraph(n);
    if (kind == "path") g = PathGraph(n);
  } else if (kind == "bipartite") {
    arity(1, 1);
    const auto sides = Split(args[0], ',');
    Require(sides.size() == 2, ErrorCode::kInvalidArgument, "bipartite spec is bipartite:a,b");
    g = CompleteBipartiteGraph(ParseCount(sides[0], spec), ParseCount(sides[1], spec));
  } else if (kind == "torus") {
    arity(1, 1);
    std::vector<size_t> dims;
    for (auto d : Split(args[0], 'x')) dims.push_back(ParseCount(d, spec));
    g = TorusGrid(dims);
  } else if (kind == "er") {
    arity(2, 3);
    g = ErdosRenyi(ParseCount(args[0], spec), ParseReal(args[1], spec), seed_at(2));
  } else if (kind == "sbm") {
    arity(3, 4);
    g = TwoBlockSbm(ParseCount(args[0], spec), ParseReal(args[1], spec),
                    ParseReal(args[2], spec), seed_at(3));
  } else if (kind == "cer0" || kind == "cer1") {
    arity(3, 4);
    auto pair = CorrelatedErPair(ParseCount(args[0], spec), ParseReal(args[1], spec),
                                 ParseReal(args[2], spec), seed_at(3));
    g = kind == "cer0" ? std::move(pair.first) : std::move(pair.second);
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown graph kind '" + std::string(kind) + "'");
  }
  return LabeledGraph::WithDecimalLabels(std::move(g));
}

}  // namespace netspread
