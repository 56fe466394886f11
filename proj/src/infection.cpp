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

#include "netspread/infection.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "netspread/error.hpp"

namespace netspread {

InfectionVector::InfectionVector(std::vector<Status> status) : status_(std::move(status)) {
  for (Status s : status_) {
    if (s == Status::kInfected) ++k_;
    if (s == Status::kCensored) ++c_;
  }
}

InfectionVector InfectionVector::FromInfected(size_t n, std::span<const Vertex> infected) {
  InfectionVector j(n);
  for (Vertex v : infected) {
    Require(v < n, ErrorCode::kInvalidArgument, "infected vertex out of range");
    j.set(v, Status::kInfected);
  }
  return j;
}

std::vector<Vertex> InfectionVector::infected_vertices() const {
  std::vector<Vertex> out;
  out.reserve(k_);
  for (Vertex v = 0; v < status_.size(); ++v)
    if (status_[v] == Status::kInfected) out.push_back(v);
  return out;
}

std::vector<Vertex> InfectionVector::censored_vertices() const {
  std::vector<Vertex> out;
  out.reserve(c_);
  for (Vertex v = 0; v < status_.size(); ++v)
    if (status_[v] == Status::kCensored) out.push_back(v);
  return out;
}

void InfectionVector::set(Vertex v, Status s) {
  Status& cur = status_.at(v);
  if (cur == Status::kInfected) --k_;
  if (cur == Status::kCensored) --c_;
  cur = s;
  if (s == Status::kInfected) ++k_;
  if (s == Status::kCensored) ++c_;
}

void ValidatePath(size_t n, std::span<const Vertex> path) {
  std::vector<bool> seen(n, false);
  for (Vertex v : path) {
    Require(v < n, ErrorCode::kInvalidArgument, "path vertex out of range");
    Require(!seen[v], ErrorCode::kInvalidArgument, "path repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
}

char StatusChar(Status s) {
  switch (s) {
    case Status::kUninfected:
      return '0';
    case Status::kInfected:
      return '1';
    case Status::kCensored:
      return '*';
  }
  return '?';
}

InfectionVector ParseStatusFile(std::string_view text, const LabeledGraph& g) {
  const size_t n = g.graph.n();
  std::vector<Status> status(n, Status::kUninfected);
  std::vector<bool> seen(n, false);
  size_t assigned = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    Fail(ErrorCode::kParse, "status line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string label, value, extra;
    if (!(fields >> label >> value) || (fields >> extra)) fail("expected 'label status'");
    auto it = g.index.find(label);
    if (it == g.index.end()) fail("unknown vertex label '" + label + "'");
    const Vertex v = it->second;
    if (seen[v]) fail("duplicate vertex label '" + label + "'");
    if (value == "0") {
      status[v] = Status::kUninfected;
    } else if (value == "1") {
      status[v] = Status::kInfected;
    } else if (value == "*") {
      status[v] = Status::kCensored;
    } else {
      fail("status must be 0, 1 or *");
    }
    seen[v] = true;
    ++assigned;
  }
  if (assigned != n) {
    Fail(ErrorCode::kParse, "status file covers " + std::to_string(assigned) + " of " +
                                std::to_string(n) + " vertices");
  }
  return InfectionVector(std::move(status));
}

InfectionVector LoadStatusFile(const std::string& path, const LabeledGraph& g) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorCode::kIo, "cannot open status file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseStatusFile(buf.str(), g);
}

std::string FormatStatusFile(const InfectionVector& j, const LabeledGraph& g) {
  Require(j.n() == g.graph.n(), ErrorCode::kInvalidArgument, "status vector size mismatch");
  std::string out;
  for (Vertex v = 0; v < j.n(); ++v) {
    out += g.labels[v];
    out += ' ';
    out += StatusChar(j[v]);
    out += '\n';
  }
  return out;
}

std::vector<InfectionVector> EnumerateInfections(size_t n, size_t k, size_t c) {
  Require(k + c <= n, ErrorCode::kInvalidArgument, "k + c exceeds n");
  std::vector<Status> s;
  s.insert(s.end(), n - k - c, Status::kUninfected);
  s.insert(s.end(), k, Status::kInfected);
  s.insert(s.end(), c, Status::kCensored);
  std::vector<InfectionVector> out;
  do {
    out.emplace_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace netspread
