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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netspread/graph.hpp"
#include "netspread/infection.hpp"

namespace netspread {

// Bijection on [0, n); image()[v] = pi(v).
class Permutation {
 public:
  Permutation() = default;
  // Throws kInvalidArgument unless image is a bijection on [0, size).
  explicit Permutation(std::vector<Vertex> image);
  static Permutation Identity(size_t n);

  size_t n() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<const Vertex> image() const { return image_; }
  Permutation Inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<Vertex> image_;
};

// (a * b)(v) = a(b(v)).
Permutation Compose(const Permutation& a, const Permutation& b);

// (pi J)_v = J_{pi^{-1}(v)}: the status of u moves to pi(u).
InfectionVector Apply(const Permutation& pi, const InfectionVector& j);
Graph Apply(const Permutation& pi, const Graph& g);
InfectionPath Apply(const Permutation& pi, const InfectionPath& p);

// (u,v) in E iff (pi(u), pi(v)) in E.
bool IsAutomorphism(const Graph& g, const Permutation& pi);

// Finite permutation group on [0, n). Groups whose order explodes (the full
// symmetric group, point stabilizers) and the dihedral group of a cycle are
// kept symbolic; everything else is an explicit, lexicographically sorted
// element list.
class PermGroup {
 public:
  enum class Kind { kSymmetric, kPointStabilizer, kDihedral, kExplicit };

  static PermGroup Symmetric(size_t n);
  static PermGroup PointStabilizer(size_t n, Vertex fixed);
  // Symmetries of the cycle visiting cycle_order[0], cycle_order[1], ...
  static PermGroup Dihedral(std::vector<Vertex> cycle_order);
  // Elements are sorted and deduplicated; closure is the caller's contract.
  static PermGroup Explicit(size_t n, std::vector<Permutation> elements);

  size_t n() const { return n_; }
  Kind kind() const { return kind_; }
  bool is_symmetric() const { return kind_ == Kind::kSymmetric; }
  Vertex fixed_point() const { return fixed_; }

  bool contains(const Permutation& pi) const;
  // nullopt when the order does not fit in 64 bits.
  std::optional<uint64_t> order() const;
  // Materializes every element; throws kGuardExceeded above max_elements.
  std::vector<Permutation> Elements(uint64_t max_elements = 1'000'000) const;
  std::vector<Vertex> Orbit(Vertex v) const;

 private:
  PermGroup(size_t n, Kind kind) : n_(n), kind_(kind) {}

  size_t n_ = 0;
  Kind kind_ = Kind::kExplicit;
  Vertex fixed_ = 0;
  std::vector<Vertex> cycle_;      // dihedral: vertex at each cycle position
  std::vector<uint32_t> cycle_pos_;  // dihedral: position of each vertex
  std::vector<Permutation> elements_;
};

inline constexpr size_t kDefaultAutomorphismMaxN = 10;

// Empty and complete graphs give the symmetric group, stars a point
// stabilizer, cycles the dihedral group, at any n. Other graphs are searched
// exhaustively (degree-pruned backtracking) and require n <= max_n; larger
// inputs throw kGuardExceeded.
PermGroup AutomorphismGroup(const Graph& g, size_t max_n = kDefaultAutomorphismMaxN);

// |P1 P0| = |P1| |P0| / |P1 n P0| == n!, with the intersection counted by
// membership-testing the elements of the smaller group in the other.
bool ProductGroupIsFull(const PermGroup& p1, const PermGroup& p0);

bool IsVertexTransitive(const Graph& g, size_t max_n = kDefaultAutomorphismMaxN);

uint64_t Factorial(size_t n);  // throws kGuardExceeded past 20!

}  // namespace netspread
