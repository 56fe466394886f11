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
#include <string_view>
#include <vector>

#include "netspread/graph.hpp"

namespace netspread {

enum class Status : uint8_t { kUninfected = 0, kInfected = 1, kCensored = 2 };

// Per-vertex snapshot status with cached counts k (infected) and c (censored).
class InfectionVector {
 public:
  InfectionVector() = default;
  explicit InfectionVector(size_t n) : status_(n, Status::kUninfected) {}
  explicit InfectionVector(std::vector<Status> status);

  // Infected set given; everything else uninfected.
  static InfectionVector FromInfected(size_t n, std::span<const Vertex> infected);

  size_t n() const { return status_.size(); }
  size_t k() const { return k_; }
  size_t c() const { return c_; }
  Status operator[](Vertex v) const { return status_[v]; }
  bool infected(Vertex v) const { return status_[v] == Status::kInfected; }
  std::span<const Status> statuses() const { return status_; }
  std::vector<Vertex> infected_vertices() const;
  std::vector<Vertex> censored_vertices() const;

  void set(Vertex v, Status s);

  friend bool operator==(const InfectionVector&, const InfectionVector&) = default;
  friend auto operator<=>(const InfectionVector& a, const InfectionVector& b) {
    return a.status_ <=> b.status_;
  }

 private:
  std::vector<Status> status_;
  size_t k_ = 0;
  size_t c_ = 0;
};

// Ordered infection sequence: order[i] is the (i+1)-th vertex infected.
struct InfectionPath {
  std::vector<Vertex> order;

  InfectionVector ToInfection(size_t n) const {
    return InfectionVector::FromInfected(n, order);
  }
};

// Throws kInvalidArgument if the path repeats a vertex or leaves [0, n).
void ValidatePath(size_t n, std::span<const Vertex> path);

char StatusChar(Status s);

// Status file: one "label status" line per vertex, status in {0, 1, *}.
InfectionVector ParseStatusFile(std::string_view text, const LabeledGraph& g);
InfectionVector LoadStatusFile(const std::string& path, const LabeledGraph& g);
std::string FormatStatusFile(const InfectionVector& j, const LabeledGraph& g);

// Every vector in I_{k,c} on n vertices, in lexicographic status order.
std::vector<InfectionVector> EnumerateInfections(size_t n, size_t k, size_t c);

}  // namespace netspread
