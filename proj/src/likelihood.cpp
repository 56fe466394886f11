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

#include "netspread/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "netspread/error.hpp"
#include "netspread/perm_group.hpp"
#include "netspread/spread.hpp"
#include "netspread/statistics.hpp"

namespace netspread {

double PairwiseSum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const size_t half = values.size() / 2;
  return PairwiseSum(values.first(half)) + PairwiseSum(values.subspan(half));
}

LikelihoodReport LikelihoodExact(const Graph& g, double eta, const InfectionVector& j,
                                 size_t max_k) {
  Require(g.n() == j.n(), ErrorCode::kInvalidArgument, "graph/infection size mismatch");
  Require(j.c() == 0, ErrorCode::kInvalidArgument,
          "exact likelihood needs an uncensored vector; use the censored likelihood");
  Require(eta >= 0.0, ErrorCode::kInvalidArgument, "eta must be >= 0");
  const size_t k = j.k();
  LikelihoodReport r;
  r.eta = eta;
  if (g.num_edges() == 0) {
    r.value = 1.0 / Binomial(g.n(), k);
    r.n_paths = 0;
    return r;
  }
  if (k > max_k) {
    Fail(ErrorCode::kGuardExceeded, "likelihood sums " + std::to_string(k) +
                                        "! paths (limit " + std::to_string(max_k) + "!)");
  }
  auto order = j.infected_vertices();
  std::vector<double> terms;
  terms.reserve(Factorial(k));
  do {
    terms.push_back(PathProbability(g, eta, order));
  } while (std::next_permutation(order.begin(), order.end()));
  r.n_paths = terms.size();
  r.value = PairwiseSum(terms);
  return r;
}

double CensoredNormalizer(size_t n, size_t k, size_t c) {
  Require(k + c <= n, ErrorCode::kInvalidArgument, "k + c exceeds n");
  double z = 0.0;
  for (size_t cp = 0; cp <= c; ++cp) z += Binomial(k + cp, cp) * Binomial(n - k - cp, c - cp);
  return z / Binomial(n, c);
}

namespace {

// mu(J) with memoized uncensored likelihoods.
class CensorMeasure {
 public:
  CensorMeasure(const Graph& g, double eta, size_t max_k) : g_(g), eta_(eta), max_k_(max_k) {}

  double operator()(const InfectionVector& j, uint64_t* terms, uint64_t* paths) {
    const auto censored = j.censored_vertices();
    const size_t c = censored.size();
    Require(c < 63, ErrorCode::kGuardExceeded, "too many censored vertices to enumerate");
    std::vector<double> parts;
    parts.reserve(size_t{1} << c);
    std::vector<Status> s(j.statuses().begin(), j.statuses().end());
    for (uint64_t mask = 0; mask < (uint64_t{1} << c); ++mask) {
      for (size_t i = 0; i < c; ++i)
        s[censored[i]] = (mask >> i) & 1 ? Status::kInfected : Status::kUninfected;
      auto it = cache_.find(s);
      if (it == cache_.end()) {
        const auto rep = LikelihoodExact(g_, eta_, InfectionVector(s), max_k_);
        if (paths) *paths += rep.n_paths;
        it = cache_.emplace(s, rep.value).first;
      }
      parts.push_back(it->second);
    }
    if (terms) *terms += parts.size();
    return PairwiseSum(parts) / Binomial(j.n(), c);
  }

 private:
  const Graph& g_;
  double eta_;
  size_t max_k_;
  std::map<std::vector<Status>, double> cache_;
};

}  // namespace

LikelihoodReport LikelihoodCensored(const Graph& g, double eta, const InfectionVector& j,
                                    uint64_t z_cap, size_t max_k) {
  Require(g.n() == j.n(), ErrorCode::kInvalidArgument, "graph/infection size mismatch");
  if (j.c() == 0) return LikelihoodExact(g, eta, j, max_k);
  const size_t n = j.n(), k = j.k(), c = j.c();
  Require(k + c <= max_k || g.num_edges() == 0, ErrorCode::kGuardExceeded,
          "censored likelihood needs k + c <= " + std::to_string(max_k));
  CensorMeasure mu(g, eta, max_k);
  LikelihoodReport r;
  r.eta = eta;
  const double num = mu(j, &r.censor_terms, &r.n_paths);
  const double space = Binomial(n, k) * Binomial(n - k, c);
  double z;
  if (space * std::ldexp(1.0, static_cast<int>(c)) <= static_cast<double>(z_cap)) {
    std::vector<double> parts;
    for (const auto& jj : EnumerateInfections(n, k, c)) parts.push_back(mu(jj, nullptr, nullptr));
    z = PairwiseSum(parts);
    r.z_enumerated = true;
  } else {
    z = CensoredNormalizer(n, k, c);
  }
  r.value = num / z;
  return r;
}

namespace {

double Likelihood(const Graph& g, double eta, const InfectionVector& j, size_t max_k) {
  return j.c() == 0 ? LikelihoodExact(g, eta, j, max_k).value
                    : LikelihoodCensored(g, eta, j, 200'000, max_k).value;
}

}  // namespace

double LikelihoodRatio(const Graph& g0, const Graph& g1, double eta, const InfectionVector& j,
                       size_t max_k) {
  Require(g0.n() == g1.n(), ErrorCode::kInvalidArgument, "graphs differ in vertex count");
  return Likelihood(g1, eta, j, max_k) / Likelihood(g0, eta, j, max_k);
}

double FirstOrderResidual(const Graph& g1, double eta, const InfectionVector& j, size_t max_k) {
  Require(j.c() == 0, ErrorCode::kInvalidArgument, "residual needs an uncensored vector");
  const double ratio = LikelihoodRatio(EmptyGraph(g1.n()), g1, eta, j, max_k);
  return ratio - (1.0 + eta * static_cast<double>(EdgesWithin(g1, j)));
}

double TopologySupLikelihood(const Graph& g, double eta, const InfectionVector& j,
                             size_t max_n) {
  Require(g.n() <= max_n, ErrorCode::kGuardExceeded,
          "supremum over " + std::to_string(g.n()) + "! relabelings exceeds limit " +
              std::to_string(max_n) + "!");
  std::vector<Vertex> image(g.n());
  std::iota(image.begin(), image.end(), Vertex{0});
  double best = 0.0;
  do {
    const Graph pg = Apply(Permutation(image), g);
    best = std::max(best, LikelihoodExact(pg, eta, j).value);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

}  // namespace netspread
