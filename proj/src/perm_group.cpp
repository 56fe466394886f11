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

#include "netspread/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "netspread/error.hpp"

namespace netspread {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    Require(v < image_.size() && !hit[v], ErrorCode::kInvalidArgument,
            "permutation image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::Identity(size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return Permutation(std::move(image));
}

Permutation Permutation::Inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  Permutation out;
  out.image_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  Require(a.n() == b.n(), ErrorCode::kInvalidArgument, "permutation degree mismatch");
  std::vector<Vertex> image(a.n());
  for (Vertex v = 0; v < a.n(); ++v) image[v] = a(b(v));
  return Permutation(std::move(image));
}

InfectionVector Apply(const Permutation& pi, const InfectionVector& j) {
  Require(pi.n() == j.n(), ErrorCode::kInvalidArgument, "permutation/infection degree mismatch");
  std::vector<Status> out(j.n());
  for (Vertex u = 0; u < j.n(); ++u) out[pi(u)] = j[u];
  return InfectionVector(std::move(out));
}

Graph Apply(const Permutation& pi, const Graph& g) {
  Require(pi.n() == g.n(), ErrorCode::kInvalidArgument, "permutation/graph degree mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) edges.emplace_back(pi(u), pi(v));
  return BuildGraph(g.n(), edges);
}

InfectionPath Apply(const Permutation& pi, const InfectionPath& p) {
  InfectionPath out;
  out.order.reserve(p.order.size());
  for (Vertex v : p.order) {
    Require(v < pi.n(), ErrorCode::kInvalidArgument, "path vertex out of range");
    out.order.push_back(pi(v));
  }
  return out;
}

bool IsAutomorphism(const Graph& g, const Permutation& pi) {
  if (pi.n() != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (!g.has_edge(pi(u), pi(v))) return false;
  // pi is a bijection on a finite edge set, so edges -> edges suffices.
  return true;
}

uint64_t Factorial(size_t n) {
  Require(n <= 20, ErrorCode::kGuardExceeded, std::to_string(n) + "! does not fit in 64 bits");
  uint64_t f = 1;
  for (size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

PermGroup PermGroup::Symmetric(size_t n) { return PermGroup(n, Kind::kSymmetric); }

PermGroup PermGroup::PointStabilizer(size_t n, Vertex fixed) {
  Require(fixed < n, ErrorCode::kInvalidArgument, "fixed point out of range");
  PermGroup g(n, Kind::kPointStabilizer);
  g.fixed_ = fixed;
  return g;
}

PermGroup PermGroup::Dihedral(std::vector<Vertex> cycle_order) {
  const size_t n = cycle_order.size();
  Require(n >= 3, ErrorCode::kInvalidArgument, "dihedral group needs a cycle of length >= 3");
  Permutation check(cycle_order);  // validates bijection
  PermGroup g(n, Kind::kDihedral);
  g.cycle_pos_.assign(n, 0);
  for (uint32_t i = 0; i < n; ++i) g.cycle_pos_[cycle_order[i]] = i;
  g.cycle_ = std::move(cycle_order);
  return g;
}

PermGroup PermGroup::Explicit(size_t n, std::vector<Permutation> elements) {
  for (const auto& e : elements)
    Require(e.n() == n, ErrorCode::kInvalidArgument, "group element degree mismatch");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g(n, Kind::kExplicit);
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Permutation& pi) const {
  if (pi.n() != n_) return false;
  switch (kind_) {
    case Kind::kSymmetric:
      return true;
    case Kind::kPointStabilizer:
      return pi(fixed_) == fixed_;
    case Kind::kDihedral: {
      const size_t len = cycle_.size();
      const uint32_t a = cycle_pos_[pi(cycle_[0])];
      bool rotation = true, reflection = true;
      for (uint32_t i = 0; i < len && (rotation || reflection); ++i) {
        const uint32_t p = cycle_pos_[pi(cycle_[i])];
        rotation = rotation && p == (a + i) % len;
        reflection = reflection && p == (a + len - i) % len;
      }
      return rotation || reflection;
    }
    case Kind::kExplicit:
      return std::binary_search(elements_.begin(), elements_.end(), pi);
  }
  return false;
}

std::optional<uint64_t> PermGroup::order() const {
  switch (kind_) {
    case Kind::kSymmetric:
      if (n_ > 20) return std::nullopt;
      return Factorial(n_);
    case Kind::kPointStabilizer:
      if (n_ > 21) return std::nullopt;
      return Factorial(n_ - 1);
    case Kind::kDihedral:
      return 2 * static_cast<uint64_t>(n_);
    case Kind::kExplicit:
      return elements_.size();
  }
  return std::nullopt;
}

std::vector<Permutation> PermGroup::Elements(uint64_t max_elements) const {
  const auto ord = order();
  // Also bound the total storage (order x degree entries).
  if (!ord || *ord > max_elements || *ord > 50'000'000 / std::max<size_t>(n_, 1)) {
    Fail(ErrorCode::kGuardExceeded, "group of degree " + std::to_string(n_) +
                                        " has more than " + std::to_string(max_elements) +
                                        " elements");
  }
  std::vector<Permutation> out;
  out.reserve(*ord);
  switch (kind_) {
    case Kind::kSymmetric:
    case Kind::kPointStabilizer: {
      std::vector<Vertex> image(n_);
      std::iota(image.begin(), image.end(), Vertex{0});
      do {
        if (kind_ == Kind::kSymmetric || image[fixed_] == fixed_) out.emplace_back(image);
      } while (std::next_permutation(image.begin(), image.end()));
      break;
    }
    case Kind::kDihedral: {
      const size_t len = cycle_.size();
      for (size_t a = 0; a < len; ++a) {
        for (bool reflect : {false, true}) {
          std::vector<Vertex> image(n_);
          for (size_t i = 0; i < len; ++i) {
            const size_t target = reflect ? (a + len - i) % len : (a + i) % len;
            image[cycle_[i]] = cycle_[target];
          }
          out.emplace_back(std::move(image));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    }
    case Kind::kExplicit:
      out = elements_;
      break;
  }
  return out;
}

std::vector<Vertex> PermGroup::Orbit(Vertex v) const {
  Require(v < n_, ErrorCode::kInvalidArgument, "orbit vertex out of range");
  std::vector<Vertex> out;
  switch (kind_) {
    case Kind::kSymmetric:
    case Kind::kDihedral:
      out.resize(n_);
      std::iota(out.begin(), out.end(), Vertex{0});
      break;
    case Kind::kPointStabilizer:
      if (v == fixed_) return {v};
      for (Vertex w = 0; w < n_; ++w)
        if (w != fixed_) out.push_back(w);
      break;
    case Kind::kExplicit:
      for (const auto& pi : elements_) out.push_back(pi(v));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  return out;
}

namespace {

bool IsStar(const Graph& g, Vertex* center) {
  if (g.n() < 3 || g.num_edges() != g.n() - 1) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.n() - 1) {
      *center = v;
      return true;
    }
  }
  return false;
}

bool IsCycle(const Graph& g, std::vector<Vertex>* order) {
  if (g.n() < 4 || g.num_edges() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  order->clear();
  Vertex prev = 0, cur = 0;
  do {
    order->push_back(cur);
    const auto nb = g.neighbors(cur);
    const Vertex next = (order->size() == 1 || nb[0] != prev) ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  } while (cur != 0 && order->size() <= g.n());
  return order->size() == g.n();
}

// Degree-pruned backtracking over vertex images in BFS order.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g) : g_(g), image_(g.n()), used_(g.n(), false) {
    std::vector<bool> queued(g.n(), false);
    for (Vertex root = 0; root < g.n(); ++root) {
      if (queued[root]) continue;
      queued[root] = true;
      const size_t start = order_.size();
      order_.push_back(root);
      for (size_t h = start; h < order_.size(); ++h)
        for (Vertex w : g.neighbors(order_[h]))
          if (!queued[w]) {
            queued[w] = true;
            order_.push_back(w);
          }
    }
  }

  std::vector<Permutation> Run() {
    Extend(0);
    return std::move(found_);
  }

 private:
  void Extend(size_t depth) {
    if (depth == order_.size()) {
      found_.emplace_back(image_);
      return;
    }
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < g_.n(); ++w) {
      if (used_[w] || g_.degree(w) != g_.degree(v)) continue;
      bool ok = true;
      for (size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order_[i];
        ok = g_.has_edge(u, v) == g_.has_edge(image_[u], w);
      }
      if (!ok) continue;
      used_[w] = true;
      image_[v] = w;
      Extend(depth + 1);
      used_[w] = false;
    }
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

PermGroup AutomorphismGroup(const Graph& g, size_t max_n) {
  const size_t n = g.n();
  if (g.num_edges() == 0 || g.num_edges() == n * (n - 1) / 2) return PermGroup::Symmetric(n);
  Vertex center = 0;
  if (IsStar(g, &center)) return PermGroup::PointStabilizer(n, center);
  std::vector<Vertex> cycle;
  if (IsCycle(g, &cycle)) return PermGroup::Dihedral(std::move(cycle));
  if (n > max_n) {
    Fail(ErrorCode::kGuardExceeded,
         "automorphism search needs n <= " + std::to_string(max_n) + " (graph has n = " +
             std::to_string(n) + ")");
  }
  return PermGroup::Explicit(n, AutomorphismSearch(g).Run());
}

bool ProductGroupIsFull(const PermGroup& p1, const PermGroup& p0) {
  Require(p1.n() == p0.n(), ErrorCode::kInvalidArgument, "group degree mismatch");
  const size_t n = p1.n();
  if (p1.is_symmetric() || p0.is_symmetric()) return true;
  // P Stab(c) has |orbit_P(c)| (n-1)! elements.
  if (p0.kind() == PermGroup::Kind::kPointStabilizer)
    return p1.Orbit(p0.fixed_point()).size() == n;
  if (p1.kind() == PermGroup::Kind::kPointStabilizer)
    return p0.Orbit(p1.fixed_point()).size() == n;

  const uint64_t o1 = *p1.order();
  const uint64_t o0 = *p0.order();
  const PermGroup& small = o1 <= o0 ? p1 : p0;
  const PermGroup& large = o1 <= o0 ? p0 : p1;
  const uint64_t small_order = std::min(o1, o0);
  const uint64_t large_order = std::max(o1, o0);
  uint64_t common = 0;
  for (const auto& pi : small.Elements()) common += large.contains(pi) ? 1 : 0;
  // |small| / |small n large| must equal the index n! / |large|.
  if (n > 20) return false;
  const uint64_t index = Factorial(n) / large_order;
  return small_order / common == index && small_order % common == 0;
}

bool IsVertexTransitive(const Graph& g, size_t max_n) {
  return AutomorphismGroup(g, max_n).Orbit(0).size() == g.n();
}

}  // namespace netspread
