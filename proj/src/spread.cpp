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

#include "netspread/spread.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "netspread/error.hpp"

namespace netspread {
namespace {

// Fenwick tree over nonnegative integer weights.
class Fenwick {
 public:
  explicit Fenwick(size_t n) : tree_(n + 1, 0) {}

  void Add(size_t i, int64_t delta) {
    for (size_t x = i + 1; x < tree_.size(); x += x & (~x + 1)) tree_[x] += delta;
  }
  int64_t node(size_t x) const { return tree_[x]; }
  size_t size() const { return tree_.size() - 1; }

 private:
  std::vector<int64_t> tree_;
};

// Incremental state of the spreading chain. Vertex v carries weight
// a[v] + eta b[v], where a[v] = 1 while v is uninfected and b[v] is its
// infected-neighbor count (zero once infected).
class Spreader {
 public:
  Spreader(const Graph& g, double eta)
      : g_(g), eta_(eta), a_(g.n()), b_(g.n()), nb_(g.n(), 0), infected_(g.n(), false) {
    for (Vertex v = 0; v < g.n(); ++v) a_.Add(v, 1);
    a_total_ = static_cast<int64_t>(g.n());
    step_ = std::bit_floor(g.n());
  }

  Vertex Draw(Rng& rng) {
    const bool inf = std::isinf(eta_);
    if (eta_ == 0.0 || (inf && b_total_ == 0)) return DescendInt(a_, rng.Below(a_total_));
    if (inf) return DescendInt(b_, rng.Below(b_total_));
    const double total = static_cast<double>(a_total_) + eta_ * static_cast<double>(b_total_);
    double u = rng.Uniform() * total;
    size_t pos = 0;
    for (size_t step = step_; step > 0; step >>= 1) {
      const size_t next = pos + step;
      if (next > g_.n()) continue;
      const double w = static_cast<double>(a_.node(next)) + eta_ * static_cast<double>(b_.node(next));
      if (w <= u) {
        u -= w;
        pos = next;
      }
    }
    // Rounding can land past the end or on a zero-weight vertex.
    if (pos >= g_.n()) pos = g_.n() - 1;
    if (!infected_[pos]) return static_cast<Vertex>(pos);
    for (size_t v = pos + 1; v < g_.n(); ++v)
      if (!infected_[v]) return static_cast<Vertex>(v);
    for (size_t v = pos; v-- > 0;)
      if (!infected_[v]) return static_cast<Vertex>(v);
    Fail(ErrorCode::kInvalidArgument, "no uninfected vertex left");
  }

  void Infect(Vertex v) {
    infected_[v] = true;
    a_.Add(v, -1);
    --a_total_;
    if (nb_[v] > 0) {
      b_.Add(v, -nb_[v]);
      b_total_ -= nb_[v];
    }
    for (Vertex w : g_.neighbors(v)) {
      ++nb_[w];
      if (!infected_[w]) {
        b_.Add(w, 1);
        ++b_total_;
      }
    }
  }

 private:
  Vertex DescendInt(const Fenwick& f, uint64_t target) const {
    int64_t r = static_cast<int64_t>(target);
    size_t pos = 0;
    for (size_t step = step_; step > 0; step >>= 1) {
      const size_t next = pos + step;
      if (next <= f.size() && f.node(next) <= r) {
        r -= f.node(next);
        pos = next;
      }
    }
    return static_cast<Vertex>(pos);
  }

  const Graph& g_;
  double eta_;
  Fenwick a_, b_;
  std::vector<int64_t> nb_;
  std::vector<bool> infected_;
  int64_t a_total_ = 0;
  int64_t b_total_ = 0;
  size_t step_ = 1;
};

void CheckEta(double eta) {
  Require(eta >= 0.0 && !std::isnan(eta), ErrorCode::kInvalidArgument, "eta must be >= 0");
}

std::vector<Vertex> SampleSubset(size_t n, size_t c, Rng& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (size_t i = 0; i < c; ++i) std::swap(all[i], all[i + rng.Below(n - i)]);
  all.resize(c);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

InfectionPath SimulateSpread(const Graph& g, const SpreadParams& params, Rng& rng) {
  CheckEta(params.eta);
  Require(params.k >= 1 && params.k <= g.n(), ErrorCode::kInvalidArgument,
          "k must lie in [1, n]");
  Spreader s(g, params.eta);
  InfectionPath path;
  path.order.reserve(params.k);
  for (size_t m = 0; m < params.k; ++m) {
    const Vertex v = s.Draw(rng);
    s.Infect(v);
    path.order.push_back(v);
  }
  return path;
}

InfectionPath SimulateSpread(const Graph& g, const SpreadParams& params, uint64_t seed) {
  Rng rng(seed);
  return SimulateSpread(g, params, rng);
}

InfectionVector SimulateObserved(const Graph& g, const SpreadParams& params,
                                 std::span<const Vertex> censored, Rng& rng) {
  CheckEta(params.eta);
  InfectionVector j(g.n());
  for (Vertex v : censored) {
    Require(v < g.n(), ErrorCode::kInvalidArgument, "censored vertex out of range");
    j.set(v, Status::kCensored);
  }
  Require(j.c() == censored.size(), ErrorCode::kInvalidArgument, "censored set repeats a vertex");
  Require(params.k + j.c() <= g.n(), ErrorCode::kInvalidArgument, "k + c exceeds n");
  Spreader s(g, params.eta);
  size_t observed = 0;
  while (observed < params.k) {
    const Vertex v = s.Draw(rng);
    s.Infect(v);
    if (j[v] != Status::kCensored) {
      j.set(v, Status::kInfected);
      ++observed;
    }
  }
  return j;
}

InfectionVector SimulateObserved(const Graph& g, const SpreadParams& params, size_t c, Rng& rng) {
  Require(c <= g.n(), ErrorCode::kInvalidArgument, "c exceeds n");
  const auto censored = SampleSubset(g.n(), c, rng);
  return SimulateObserved(g, params, censored, rng);
}

PathCounts PathCutCounts(const Graph& g, std::span<const Vertex> path) {
  ValidatePath(g.n(), path);
  std::vector<bool> infected(g.n(), false);
  PathCounts out;
  uint64_t cut = 0;
  for (Vertex v : path) {
    uint64_t in = 0;
    for (Vertex w : g.neighbors(v)) in += infected[w] ? 1 : 0;
    out.cut.push_back(cut);
    out.in.push_back(in);
    cut = cut + g.degree(v) - 2 * in;
    infected[v] = true;
  }
  return out;
}

double PathProbability(const Graph& g, double eta, std::span<const Vertex> path) {
  CheckEta(eta);
  const auto counts = PathCutCounts(g, path);
  const double n = static_cast<double>(g.n());
  double p = 1.0;
  for (size_t t = 0; t < path.size(); ++t) {
    const double remaining = n - static_cast<double>(t);
    const double cut = static_cast<double>(counts.cut[t]);
    const double in = static_cast<double>(counts.in[t]);
    if (std::isinf(eta)) {
      p *= counts.cut[t] > 0 ? in / cut : 1.0 / remaining;
    } else {
      p *= (1.0 + eta * in) / (remaining + eta * cut);
    }
  }
  return p;
}

InfectionVector CensorUniform(const InfectionVector& j, size_t c, Rng& rng) {
  Require(j.c() == 0, ErrorCode::kInvalidArgument, "input already has censored entries");
  Require(c <= j.n(), ErrorCode::kInvalidArgument, "c exceeds n");
  return CensorFixed(j, SampleSubset(j.n(), c, rng));
}

InfectionVector CensorFixed(const InfectionVector& j, std::span<const Vertex> censored) {
  InfectionVector out = j;
  for (Vertex v : censored) {
    Require(v < j.n(), ErrorCode::kInvalidArgument, "censored vertex out of range");
    out.set(v, Status::kCensored);
  }
  return out;
}

double Binomial(size_t n, size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  long double r = 1.0L;
  for (size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return static_cast<double>(std::round(r));
}

InfectionVector IsingSampleExact(const Graph& g, double eta, size_t k, Rng& rng, uint64_t cap) {
  CheckEta(eta);
  Require(std::isfinite(eta), ErrorCode::kInvalidArgument, "Ising sampling needs finite eta");
  const size_t n = g.n();
  Require(k <= n, ErrorCode::kInvalidArgument, "k exceeds n");
  const double count = Binomial(n, k);
  if (count > static_cast<double>(cap)) {
    Fail(ErrorCode::kGuardExceeded, "Ising enumeration over C(" + std::to_string(n) + "," +
                                        std::to_string(k) + ") subsets exceeds cap " +
                                        std::to_string(cap));
  }
  auto for_each_subset = [&](auto&& fn) {
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    while (true) {
      if (!fn(std::span<const Vertex>(idx))) return;
      size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) return;
      ++idx[i - 1];
      for (size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  };
  std::vector<uint32_t> within;
  within.reserve(static_cast<size_t>(count));
  for_each_subset([&](std::span<const Vertex> s) {
    uint32_t w = 0;
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a + 1; b < s.size(); ++b) w += g.has_edge(s[a], s[b]) ? 1 : 0;
    within.push_back(w);
    return true;
  });
  const uint32_t wmax = *std::max_element(within.begin(), within.end());
  std::vector<double> cumulative(within.size());
  double total = 0.0;
  for (size_t i = 0; i < within.size(); ++i) {
    total += std::exp(eta * (static_cast<double>(within[i]) - wmax));
    cumulative[i] = total;
  }
  const double u = rng.Uniform() * total;
  size_t pick = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
  pick = std::min(pick, cumulative.size() - 1);
  InfectionVector out(n);
  size_t seen = 0;
  for_each_subset([&](std::span<const Vertex> s) {
    if (seen++ != pick) return true;
    for (Vertex v : s) out.set(v, Status::kInfected);
    return false;
  });
  return out;
}

}  // namespace netspread
