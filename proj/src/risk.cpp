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

#include "netspread/risk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netspread/error.hpp"
#include "netspread/parallel.hpp"
#include "netspread/rng.hpp"
#include "netspread/spread.hpp"

namespace netspread {
namespace {

void CheckInputs(const RiskInputs& in) {
  Require(in.n >= 1 && in.k >= 1 && in.k <= in.n, ErrorCode::kInvalidArgument,
          "need 1 <= k <= n");
  Require(in.c <= in.n - in.k, ErrorCode::kInvalidArgument, "need c <= n - k");
  Require(in.eta >= 0.0, ErrorCode::kInvalidArgument, "eta must be >= 0");
  Require(in.alpha > 0.0 && in.alpha <= 1.0, ErrorCode::kInvalidArgument,
          "alpha must lie in (0, 1]");
  Require(in.m >= 1, ErrorCode::kInvalidArgument, "m must be >= 1");
}

Bound FromBracket(double alpha, double bracket, double scale) {
  if (!(bracket > 0.0)) return {alpha + 1.0, true};
  return {alpha + std::exp(-scale * bracket * bracket), false};
}

// Exponent numerator k + eta k (k - 1) / 2 shared by the center bounds.
double CenterAttempts(const RiskInputs& in) {
  const double k = static_cast<double>(in.k);
  return k + in.eta * k * (k - 1.0) / 2.0;
}

double UpperDenominator(const RiskInputs& in) {
  const double n = static_cast<double>(in.n), k = static_cast<double>(in.k);
  return in.eta >= 1.0 ? (n - k + 1.0) + (k - 1.0) * in.eta : n;
}

}  // namespace

double HEta(size_t n, size_t k, double eta, double nt_min) {
  Require(k >= 1 && k <= n, ErrorCode::kInvalidArgument, "need 1 <= k <= n");
  Require(eta >= 0.0 && nt_min > 0.0, ErrorCode::kInvalidArgument,
          "need eta >= 0 and nt_min > 0");
  double h = 1.0;
  for (size_t m = 1; m < k; ++m) {
    h *= std::isinf(eta) ? 1.0 / nt_min
                         : eta / (static_cast<double>(n - m) + eta * nt_min);
  }
  return h;
}

Bound StarNullRiskBound(const RiskInputs& in, double c_k) {
  CheckInputs(in);
  Require(in.n >= 2, ErrorCode::kDomain, "bound needs n >= 2");
  const double n = static_cast<double>(in.n), k = static_cast<double>(in.k), D = in.D;
  const double h = HEta(in.n, in.k, in.eta, in.nt_min);
  const double bracket = D / 2.0 * c_k * h - D * k * (k - 1.0) / (2.0 * (n - 1.0)) -
                         std::sqrt(k * D * D / 2.0 * std::log(1.0 / in.alpha));
  return FromBracket(in.alpha, bracket, 2.0 / (k * D * D));
}

CenterBounds CenterTestRiskBounds(const RiskInputs& in) {
  CheckInputs(in);
  Require(in.k < in.n, ErrorCode::kDomain, "center bounds need k < n");
  Require(std::isfinite(in.eta), ErrorCode::kDomain, "center bounds need finite eta");
  const double n = static_cast<double>(in.n), k = static_cast<double>(in.k);
  const double a = CenterAttempts(in);
  return {k / n + std::exp(-a / (n - k)), k / n + std::exp(-a / UpperDenominator(in))};
}

double CenterInfectionProbability(const RiskInputs& in) {
  CheckInputs(in);
  Require(std::isfinite(in.eta), ErrorCode::kDomain, "p_{k,0} needs finite eta");
  return 1.0 - std::exp(-CenterAttempts(in) / UpperDenominator(in));
}

MultiSpreadBounds MultiSpreadRiskBounds(const RiskInputs& in, double c_k) {
  CheckInputs(in);
  Require(in.n >= 2, ErrorCode::kDomain, "bound needs n >= 2");
  const double n = static_cast<double>(in.n), k = static_cast<double>(in.k), D = in.D;
  const double m = static_cast<double>(in.m);
  const double log_alpha = std::log(1.0 / in.alpha);
  MultiSpreadBounds out;
  const double h = HEta(in.n, in.k, in.eta, in.nt_min);
  const double w = D / 2.0 * c_k * h - D * k * (k - 1.0) / (2.0 * (n - 1.0)) -
                   std::sqrt(k * D * D / (2.0 * m) * log_alpha);
  out.w_bar = FromBracket(in.alpha, w, 2.0 * m / (k * D * D));
  // The center bracket must be negative: p_{k,0} has to clear k/n + slack.
  const double slack = k / n + std::sqrt(log_alpha / (2.0 * m)) - CenterInfectionProbability(in);
  out.c_bar = FromBracket(in.alpha, -slack, 2.0 * m);
  return out;
}

Bound LineCycleBound(const RiskInputs& in) {
  CheckInputs(in);
  Require(2 * in.k < in.n, ErrorCode::kDomain, "line/cycle bound needs k < n/2");
  const double n = static_cast<double>(in.n), k = static_cast<double>(in.k);
  const double c = static_cast<double>(in.c);
  const double prefactor = (n - c) * (n - c - 1.0) / (n * n * (n - 1.0));
  const double lead = prefactor * static_cast<double>(CascadeCountCycle(in.k)) *
                      (n - k + 1.0) / n * HEta(in.n, in.k, in.eta, 2.0);
  const double bracket =
      lead - k * (k - 1.0) / (n - 1.0) - std::sqrt(2.0 * k * std::log(1.0 / in.alpha));
  return FromBracket(in.alpha, bracket, 1.0 / (2.0 * k));
}

namespace {

class CascadeCounter {
 public:
  CascadeCounter(const Graph& g, size_t k, Vertex u, Vertex v)
      : g_(g), k_(k), u_(u), v_(v), used_(g.n(), false), adjacent_(g.n(), 0) {}

  uint64_t Run() {
    for (Vertex s = 0; s < g_.n(); ++s) Extend(s, 1);
    return count_;
  }

 private:
  void Place(Vertex x, int delta) {
    used_[x] = delta > 0;
    for (Vertex w : g_.neighbors(x)) adjacent_[w] += delta;
  }

  void Extend(Vertex x, size_t depth) {
    Place(x, +1);
    if (depth == k_) {
      count_ += (used_[u_] && used_[v_]) ? 1 : 0;
    } else {
      for (Vertex w = 0; w < g_.n(); ++w)
        if (!used_[w] && adjacent_[w] > 0) Extend(w, depth + 1);
    }
    Place(x, -1);
  }

  const Graph& g_;
  size_t k_;
  Vertex u_, v_;
  std::vector<bool> used_;
  std::vector<int> adjacent_;
  uint64_t count_ = 0;
};

}  // namespace

uint64_t CascadeCount(const Graph& g, size_t k, Vertex u, Vertex v) {
  Require(u < g.n() && v < g.n(), ErrorCode::kInvalidArgument, "vertex out of range");
  Require(g.n() <= 16 && k <= 8, ErrorCode::kGuardExceeded,
          "cascade enumeration needs n <= 16 and k <= 8");
  if (k == 0 || k > g.n()) return 0;
  return CascadeCounter(g, k, u, v).Run();
}

uint64_t CascadeCountCycle(size_t k) {
  Require(k >= 1 && k <= 63, ErrorCode::kInvalidArgument, "need 1 <= k <= 63");
  return (k - 1) << (k - 1);
}

uint64_t MinEdgeCascadeCount(const Graph& g, size_t k) {
  Require(g.num_edges() > 0, ErrorCode::kInvalidArgument, "graph has no edges");
  uint64_t best = UINT64_MAX;
  for (auto [u, v] : g.edges()) best = std::min(best, CascadeCount(g, k, u, v));
  return best;
}

namespace {

double LogLog(size_t n, size_t c) {
  Require(static_cast<double>(n) > std::numbers::e, ErrorCode::kDomain,
          "threshold needs n > e (log log n must be positive)");
  Require(c < n, ErrorCode::kDomain, "threshold needs c < n");
  return std::log(std::log(static_cast<double>(n)));
}

}  // namespace

double TbThreshold(size_t d, size_t n, size_t k, size_t c) {
  Require(d >= 1, ErrorCode::kDomain, "TB needs d >= 1");
  const double ll = LogLog(n, c);
  const double dd = static_cast<double>(d);
  const double base = static_cast<double>(k) * static_cast<double>(n) * ll /
                      static_cast<double>(n - c);
  return 1.1 * dd * dd * std::pow(base, 1.0 / dd);
}

double TtThreshold(size_t n, size_t k, size_t c) {
  const double ll = LogLog(n, c);
  return static_cast<double>(k) * static_cast<double>(n) * ll * ll * ll /
         static_cast<double>(n - c);
}

BaselineReport Baseline(BaselineKind kind, const Graph& g, size_t d, size_t k, size_t c) {
  BaselineReport r;
  r.kind = kind;
  r.d = d;
  r.threshold = kind == BaselineKind::kTb ? TbThreshold(d, g.n(), k, c) : TtThreshold(g.n(), k, c);
  bool always = false;
  if (kind == BaselineKind::kTb) {
    const uint32_t diameter = Diameter(g);
    r.ceiling = diameter == kUnreachable ? static_cast<double>(kUnreachable) : diameter;
    always = diameter != kUnreachable && r.threshold > diameter;
  } else {
    const bool connected = IsConnected(g);
    r.ceiling = connected ? static_cast<double>(g.n() - 1) : static_cast<double>(kUnreachable);
    always = connected && r.threshold > static_cast<double>(g.n() - 1);
  }
  r.diagnosis = always ? "always rejects" : "informative";
  return r;
}

std::vector<Decision> SimulateDecisions(const Graph& g, double eta, const SimulationPlan& plan,
                                        uint64_t tag, const DecisionFn& decide) {
  Require(plan.k + plan.c <= g.n(), ErrorCode::kInvalidArgument, "k + c exceeds n");
  std::vector<Decision> out(plan.reps);
  const uint64_t stream = Mix64(plan.seed ^ Mix64(tag));
  ParallelFor(plan.reps, ResolveThreads(plan.threads), [&](size_t r) {
    Rng rng = Rng::Substream(stream, r);
    const auto j = SimulateObserved(g, SpreadParams{eta, plan.k}, plan.c, rng);
    out[r] = decide(j, r);
  });
  return out;
}

DecisionFn PermutationDecision(const Statistic& stat, const TestConfig& cfg, uint64_t tag) {
  return [stat, cfg, tag](const InfectionVector& j, uint64_t rep) {
    TestConfig local = cfg;
    local.threads = 1;
    local.seed = Mix64(Mix64(cfg.seed ^ Mix64(tag)) + rep);
    const auto result = McTest(stat, j, local);
    return Decision{result.reject, result.threshold};
  };
}

DecisionFn BaselineDecision(const Statistic& stat, double threshold) {
  return [stat, threshold](const InfectionVector& j, uint64_t) {
    return Decision{stat.Value(j) < threshold, threshold};
  };
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const size_t h = values.size() / 2;
  return values.size() % 2 ? values[h] : 0.5 * (values[h - 1] + values[h]);
}

namespace {

double RejectRate(const std::vector<Decision>& ds) {
  if (ds.empty()) return 0.0;
  size_t rejects = 0;
  for (const auto& d : ds) rejects += d.reject ? 1 : 0;
  return static_cast<double>(rejects) / static_cast<double>(ds.size());
}

RiskEstimate Combine(const std::vector<Decision>& null_runs, const std::vector<Decision>& alt_runs) {
  RiskEstimate est;
  est.type_i = RejectRate(null_runs);
  est.type_ii = 1.0 - RejectRate(alt_runs);
  std::vector<double> th;
  for (const auto& d : null_runs) th.push_back(d.threshold);
  est.median_threshold = Median(std::move(th));
  return est;
}

}  // namespace

RiskEstimate McRisk(const Graph& g0, const Graph& g1, double eta0, double eta1,
                    const Statistic& stat, const TestConfig& cfg, const SimulationPlan& plan) {
  Require(g0.n() == g1.n(), ErrorCode::kInvalidArgument, "graphs differ in vertex count");
  const auto null_runs = SimulateDecisions(g0, eta0, plan, 0, PermutationDecision(stat, cfg, 0));
  const auto alt_runs = SimulateDecisions(g1, eta1, plan, 1, PermutationDecision(stat, cfg, 1));
  return Combine(null_runs, alt_runs);
}

RiskEstimate McBaselineRisk(const Graph& g0, const Graph& g1, double eta0, double eta1,
                            BaselineKind kind, size_t d, const SimulationPlan& plan) {
  Require(g0.n() == g1.n(), ErrorCode::kInvalidArgument, "graphs differ in vertex count");
  const Statistic stat =
      kind == BaselineKind::kTb ? Statistic::Radius(g1) : Statistic::Steiner(g1);
  const double t = kind == BaselineKind::kTb ? TbThreshold(d, g1.n(), plan.k, plan.c)
                                             : TtThreshold(g1.n(), plan.k, plan.c);
  const auto decide = BaselineDecision(stat, t);
  return Combine(SimulateDecisions(g0, eta0, plan, 0, decide),
                 SimulateDecisions(g1, eta1, plan, 1, decide));
}

}  // namespace netspread
