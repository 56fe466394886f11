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

#include "netspread/netspread.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "netspread/error.hpp"
#include "netspread/graph.hpp"
#include "netspread/infection.hpp"
#include "netspread/likelihood.hpp"
#include "netspread/parallel.hpp"
#include "netspread/perm_group.hpp"
#include "netspread/perm_test.hpp"
#include "netspread/risk.hpp"
#include "netspread/rng.hpp"
#include "netspread/spread.hpp"
#include "netspread/statistics.hpp"

struct ns_graph {
  netspread::LabeledGraph lg;
};

struct ns_infection {
  netspread::InfectionVector j;
};

struct ns_statistic {
  netspread::Statistic stat;
};

struct ns_test_result {
  netspread::TestResult r;
};

namespace {

using namespace netspread;

thread_local std::string g_last_error;

ns_status FromCode(ErrorCode c) {
  switch (c) {
    case ErrorCode::kInvalidArgument: return NS_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return NS_ERR_PARSE;
    case ErrorCode::kGuardExceeded: return NS_ERR_GUARD;
    case ErrorCode::kDomain: return NS_ERR_DOMAIN;
    case ErrorCode::kDisconnected: return NS_ERR_DISCONNECTED;
    case ErrorCode::kIo: return NS_ERR_IO;
  }
  return NS_ERR_INTERNAL;
}

template <typename F>
ns_status Guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return NS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return FromCode(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NS_ERR_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  Require(p != nullptr, ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

TestConfig ToConfig(const ns_test_config* cfg) {
  TestConfig out;
  if (cfg == nullptr) return out;
  Require(cfg->alpha > 0.0 && cfg->alpha <= 1.0, ErrorCode::kInvalidArgument,
          "alpha must lie in (0, 1]");
  Require(cfg->exact || cfg->B > 0, ErrorCode::kInvalidArgument, "B must be positive");
  out.alpha = cfg->alpha;
  out.B = cfg->B;
  out.seed = cfg->seed;
  out.mode = cfg->mode == NS_MODE_CENSOR_FIXED ? PermMode::kCensorFixed : PermMode::kFull;
  out.threads = cfg->threads;
  out.exact_max_n = cfg->exact_max_n;
  return out;
}

RiskInputs ToInputs(const ns_risk_inputs* in) {
  NotNull(in, "risk inputs");
  RiskInputs r;
  r.n = in->n;
  r.k = in->k;
  r.c = in->c;
  r.eta = in->eta;
  r.alpha = in->alpha;
  r.D = in->D;
  r.m = in->m;
  r.nt_min = in->nt_min;
  return r;
}

SimulationPlan ToPlan(const ns_sim_plan* p) {
  NotNull(p, "simulation plan");
  SimulationPlan plan;
  plan.k = p->k;
  plan.c = p->c;
  plan.reps = p->reps;
  plan.seed = p->seed;
  plan.threads = p->threads;
  return plan;
}

ns_validity ToValidity(Validity v) {
  switch (v) {
    case Validity::kSkipped: return NS_VALIDITY_SKIPPED;
    case Validity::kValid: return NS_VALIDITY_VALID;
    case Validity::kInvalid: return NS_VALIDITY_INVALID;
    case Validity::kUnverifiable: return NS_VALIDITY_UNVERIFIABLE;
  }
  return NS_VALIDITY_SKIPPED;
}

ValidityReport Validate(const Graph& g0, const Graph& g1, const InfectionVector* censoring,
                        PermMode mode) {
  try {
    if (mode == PermMode::kCensorFixed && censoring != nullptr && censoring->c() > 0)
      return CheckValidityCensorFixed(g0, g1, *censoring);
    return CheckValidity(g0, g1);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGuardExceeded) throw;
    return ValidityReport{Validity::kUnverifiable, e.what()};
  }
}

void CheckSizes(const Statistic& s, const InfectionVector& j) {
  Require(s.n() == j.n(), ErrorCode::kInvalidArgument,
          "statistic is for " + std::to_string(s.n()) + " vertices, infection has " +
              std::to_string(j.n()));
}

DecisionFn AlgorithmDecision(const ns_algorithm& alg, const Statistic& stat, size_t k, size_t c,
                             uint64_t tag) {
  switch (alg.kind) {
    case NS_ALG_PERMUTATION: {
      const TestConfig cfg = ToConfig(&alg.cfg);
      if (!alg.cfg.exact) return PermutationDecision(stat, cfg, tag);
      return [stat, cfg](const InfectionVector& j, uint64_t) {
        TestConfig local = cfg;
        local.threads = 1;
        const auto r = ExactTest(stat, j, local);
        return Decision{r.reject, r.threshold};
      };
    }
    case NS_ALG_TB:
    case NS_ALG_TT: {
      const Graph* g = stat.graph();
      NotNull(g, "baseline statistic graph");
      const bool tb = alg.kind == NS_ALG_TB;
      const Statistic s = tb ? Statistic::Radius(*g) : Statistic::Steiner(*g);
      const double t = tb ? TbThreshold(alg.d, g->n(), k, c) : TtThreshold(g->n(), k, c);
      return BaselineDecision(s, t);
    }
  }
  Fail(ErrorCode::kInvalidArgument, "unknown algorithm kind");
}

}  // namespace

extern "C" {

const char* ns_version(void) { return "1.0.0"; }

const char* ns_last_error(void) { return g_last_error.c_str(); }

const char* ns_status_name(ns_status s) {
  switch (s) {
    case NS_OK: return "ok";
    case NS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NS_ERR_PARSE: return "parse error";
    case NS_ERR_GUARD: return "guard exceeded";
    case NS_ERR_DOMAIN: return "domain error";
    case NS_ERR_DISCONNECTED: return "disconnected";
    case NS_ERR_IO: return "i/o error";
    case NS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

ns_status ns_graph_from_spec(const char* spec, uint64_t seed, ns_graph** out) {
  return Guarded([&] {
    NotNull(spec, "spec");
    NotNull(out, "out");
    *out = new ns_graph{GraphFromSpec(spec, seed)};
  });
}

ns_status ns_graph_load_edge_list(const char* path, ns_graph** out) {
  return Guarded([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new ns_graph{LoadEdgeListFile(path)};
  });
}

void ns_graph_free(ns_graph* g) { delete g; }

ns_status ns_graph_info_get(const ns_graph* g, ns_graph_info* out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(out, "out");
    out->n = g->lg.graph.n();
    out->num_edges = g->lg.graph.num_edges();
    out->max_degree = g->lg.graph.max_degree();
    out->diameter = Diameter(g->lg.graph);
  });
}

const char* ns_graph_label(const ns_graph* g, size_t v) {
  if (g == nullptr || v >= g->lg.labels.size()) return nullptr;
  return g->lg.labels[v].c_str();
}

ns_status ns_automorphism_info(const ns_graph* g, size_t max_n, ns_group_info* out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(out, "out");
    const size_t limit = max_n == 0 ? kDefaultAutomorphismMaxN : max_n;
    const PermGroup group = AutomorphismGroup(g->lg.graph, limit);
    switch (group.kind()) {
      case PermGroup::Kind::kSymmetric: out->kind = NS_GROUP_SYMMETRIC; break;
      case PermGroup::Kind::kPointStabilizer: out->kind = NS_GROUP_POINT_STABILIZER; break;
      case PermGroup::Kind::kDihedral: out->kind = NS_GROUP_DIHEDRAL; break;
      case PermGroup::Kind::kExplicit: out->kind = NS_GROUP_EXPLICIT; break;
    }
    const auto order = group.order();
    out->order_known = order.has_value();
    out->order = order.value_or(0);
    out->vertex_transitive = group.Orbit(0).size() == g->lg.graph.n();
  });
}

ns_status ns_infection_simulate(const ns_graph* g, double eta, size_t k, size_t c,
                                uint64_t seed, ns_infection** out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(out, "out");
    Require(eta >= 0.0, ErrorCode::kInvalidArgument, "eta must be >= 0");
    Require(k + c <= g->lg.graph.n(), ErrorCode::kInvalidArgument, "k + c exceeds n");
    Rng rng(seed);
    *out = new ns_infection{SimulateObserved(g->lg.graph, SpreadParams{eta, k}, c, rng)};
  });
}

ns_status ns_infection_simulate_censored(const ns_graph* g, double eta, size_t k,
                                         const ns_infection* pattern, uint64_t seed,
                                         ns_infection** out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(pattern, "pattern");
    NotNull(out, "out");
    Require(pattern->j.n() == g->lg.graph.n(), ErrorCode::kInvalidArgument,
            "pattern size differs from graph");
    Require(eta >= 0.0, ErrorCode::kInvalidArgument, "eta must be >= 0");
    Rng rng(seed);
    const auto censored = pattern->j.censored_vertices();
    *out = new ns_infection{SimulateObserved(g->lg.graph, SpreadParams{eta, k}, censored, rng)};
  });
}

ns_status ns_infection_from_string(const char* status, ns_infection** out) {
  return Guarded([&] {
    NotNull(status, "status");
    NotNull(out, "out");
    std::vector<Status> s;
    for (const char* p = status; *p; ++p) {
      switch (*p) {
        case '0': s.push_back(Status::kUninfected); break;
        case '1': s.push_back(Status::kInfected); break;
        case '*': s.push_back(Status::kCensored); break;
        default:
          Fail(ErrorCode::kParse, std::string("bad status character '") + *p + "'");
      }
    }
    Require(!s.empty(), ErrorCode::kParse, "empty status string");
    *out = new ns_infection{InfectionVector(std::move(s))};
  });
}

ns_status ns_infection_load(const ns_graph* g, const char* path, ns_infection** out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new ns_infection{LoadStatusFile(path, g->lg)};
  });
}

ns_status ns_infection_save(const ns_graph* g, const ns_infection* j, const char* path) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(j, "infection");
    NotNull(path, "path");
    const std::string text = FormatStatusFile(j->j, g->lg);
    std::FILE* f = std::fopen(path, "w");
    Require(f != nullptr, ErrorCode::kIo, std::string("cannot open ") + path);
    const size_t written = std::fwrite(text.data(), 1, text.size(), f);
    const bool ok = std::fclose(f) == 0 && written == text.size();
    Require(ok, ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

ns_status ns_infection_counts(const ns_infection* j, size_t* n, size_t* k, size_t* c) {
  return Guarded([&] {
    NotNull(j, "infection");
    if (n) *n = j->j.n();
    if (k) *k = j->j.k();
    if (c) *c = j->j.c();
  });
}

ns_status ns_infection_status(const ns_infection* j, size_t v, char* out) {
  return Guarded([&] {
    NotNull(j, "infection");
    NotNull(out, "out");
    Require(v < j->j.n(), ErrorCode::kInvalidArgument, "vertex out of range");
    *out = StatusChar(j->j[static_cast<Vertex>(v)]);
  });
}

void ns_infection_free(ns_infection* j) { delete j; }

ns_status ns_statistic_create(ns_statistic_kind kind, const ns_graph* graph, size_t n,
                              uint32_t vertex, ns_statistic** out) {
  return Guarded([&] {
    NotNull(out, "out");
    if (graph != nullptr) n = graph->lg.graph.n();
    Require(n > 0, ErrorCode::kInvalidArgument, "statistic needs a graph or n > 0");
    std::optional<Statistic> s;
    switch (kind) {
      case NS_STAT_EDGES_WITHIN:
        NotNull(graph, "graph");
        s = Statistic::EdgesWithin(graph->lg.graph);
        break;
      case NS_STAT_RADIUS:
        NotNull(graph, "graph");
        s = Statistic::Radius(graph->lg.graph);
        break;
      case NS_STAT_STEINER:
        NotNull(graph, "graph");
        s = Statistic::Steiner(graph->lg.graph);
        break;
      case NS_STAT_CENTER:
        Require(vertex < n, ErrorCode::kInvalidArgument, "center out of range");
        s = Statistic::Center(n, vertex);
        break;
      case NS_STAT_ORBIT: {
        NotNull(graph, "graph");
        Require(vertex < n, ErrorCode::kInvalidArgument, "vertex out of range");
        const PermGroup group = AutomorphismGroup(graph->lg.graph);
        s = Statistic::OrbitCount(n, group.Orbit(vertex));
        break;
      }
      default:
        Fail(ErrorCode::kInvalidArgument, "unknown statistic kind");
    }
    *out = new ns_statistic{*s};
  });
}

ns_status ns_statistic_evaluate(const ns_statistic* s, const ns_infection* j, double* out) {
  return Guarded([&] {
    NotNull(s, "statistic");
    NotNull(j, "infection");
    NotNull(out, "out");
    CheckSizes(s->stat, j->j);
    *out = s->stat.Value(j->j);
  });
}

void ns_statistic_free(ns_statistic* s) { delete s; }

void ns_test_config_default(ns_test_config* cfg) {
  if (cfg == nullptr) return;
  const TestConfig d;
  cfg->alpha = d.alpha;
  cfg->B = d.B;
  cfg->seed = d.seed;
  cfg->mode = NS_MODE_FULL;
  cfg->exact = 0;
  cfg->threads = d.threads;
  cfg->exact_max_n = d.exact_max_n;
}

ns_status ns_check_validity(const ns_graph* g0, const ns_graph* g1,
                            const ns_infection* censoring, ns_validity* out, char* note,
                            size_t note_len) {
  return Guarded([&] {
    NotNull(g0, "null graph");
    NotNull(g1, "alternative graph");
    NotNull(out, "out");
    Require(g0->lg.graph.n() == g1->lg.graph.n(), ErrorCode::kInvalidArgument,
            "graphs differ in vertex count");
    const InfectionVector* j = censoring ? &censoring->j : nullptr;
    const auto rep = Validate(g0->lg.graph, g1->lg.graph, j,
                              j ? PermMode::kCensorFixed : PermMode::kFull);
    *out = ToValidity(rep.status);
    if (note != nullptr && note_len > 0) {
      const size_t len = std::min(note_len - 1, rep.note.size());
      std::memcpy(note, rep.note.data(), len);
      note[len] = '\0';
    }
  });
}

ns_status ns_test_run(const ns_statistic* s, const ns_infection* j, const ns_test_config* cfg,
                      const ns_graph* null_graph, ns_test_result** out) {
  return Guarded([&] {
    NotNull(s, "statistic");
    NotNull(j, "infection");
    NotNull(out, "out");
    CheckSizes(s->stat, j->j);
    const TestConfig c = ToConfig(cfg);
    const bool exact = cfg != nullptr && cfg->exact;
    auto result = std::make_unique<ns_test_result>();
    result->r = exact ? ExactTest(s->stat, j->j, c) : McTest(s->stat, j->j, c);
    if (null_graph != nullptr && s->stat.graph() != nullptr)
      result->r.validity = Validate(null_graph->lg.graph, *s->stat.graph(), &j->j, c.mode);
    *out = result.release();
  });
}

ns_status ns_test_composite(const ns_statistic* s1, const ns_statistic* s2,
                            const ns_infection* j, const ns_test_config* cfg,
                            const ns_graph* null_graph, ns_test_result** out) {
  return Guarded([&] {
    NotNull(s1, "first statistic");
    NotNull(s2, "second statistic");
    NotNull(j, "infection");
    NotNull(out, "out");
    CheckSizes(s1->stat, j->j);
    CheckSizes(s2->stat, j->j);
    const TestConfig c = ToConfig(cfg);
    const bool exact = cfg != nullptr && cfg->exact;
    auto result = std::make_unique<ns_test_result>();
    result->r = exact ? CompositeExactTest(s1->stat, s2->stat, j->j, c)
                      : CompositeMcTest(s1->stat, s2->stat, j->j, c);
    if (null_graph != nullptr && s1->stat.graph() != nullptr) {
      auto v = Validate(null_graph->lg.graph, *s1->stat.graph(), &j->j, c.mode);
      if (v.status == Validity::kValid && s2->stat.graph() != nullptr)
        v = Validate(null_graph->lg.graph, *s2->stat.graph(), &j->j, c.mode);
      result->r.validity = v;
    }
    *out = result.release();
  });
}

ns_status ns_test_multi(const ns_statistic* s, const ns_infection* const* js, size_t m,
                        const ns_test_config* cfg, ns_test_result** out) {
  return Guarded([&] {
    NotNull(s, "statistic");
    NotNull(js, "infections");
    NotNull(out, "out");
    Require(m > 0, ErrorCode::kInvalidArgument, "need at least one spread");
    std::vector<InfectionVector> list;
    for (size_t i = 0; i < m; ++i) {
      NotNull(js[i], "infection");
      CheckSizes(s->stat, js[i]->j);
      list.push_back(js[i]->j);
    }
    Require(cfg == nullptr || !cfg->exact, ErrorCode::kInvalidArgument,
            "multi-spread test is Monte Carlo only");
    auto result = std::make_unique<ns_test_result>();
    result->r = MultiSpreadMcTest(s->stat, list, ToConfig(cfg));
    *out = result.release();
  });
}

ns_status ns_test_resample(const ns_infection* j, const ns_test_config* cfg, uint64_t r,
                           ns_infection** out) {
  return Guarded([&] {
    NotNull(j, "infection");
    NotNull(out, "out");
    *out = new ns_infection{Resample(j->j, ToConfig(cfg), r)};
  });
}

void ns_test_result_free(ns_test_result* r) { delete r; }

ns_status ns_test_result_summary(const ns_test_result* r, ns_test_summary* out) {
  return Guarded([&] {
    NotNull(r, "result");
    NotNull(out, "out");
    const TestResult& t = r->r;
    out->observed = t.observed;
    out->threshold = t.threshold;
    out->p_value = t.p_value;
    out->exceed_count = t.exceed_count;
    out->total = t.total;
    out->reject = t.reject;
    out->saturated = t.saturated;
    out->exact = t.exact;
    out->lower_tail = t.lower_tail;
    out->composite = t.composite;
    out->observed2 = t.observed2;
    out->threshold2 = t.threshold2;
    out->p_value2 = t.p_value2;
    out->exceed_count2 = t.exceed_count2;
    out->lower_tail2 = t.lower_tail2;
    out->validity = ToValidity(t.validity.status);
  });
}

const char* ns_test_result_statistic(const ns_test_result* r, int which) {
  if (r == nullptr) return nullptr;
  return which == 0 ? r->r.statistic.c_str() : r->r.statistic2.c_str();
}

const char* ns_test_result_validity_note(const ns_test_result* r) {
  return r == nullptr ? nullptr : r->r.validity.note.c_str();
}

size_t ns_test_result_histogram_size(const ns_test_result* r, int which) {
  if (r == nullptr) return 0;
  return which == 0 ? r->r.histogram.size() : r->r.histogram2.size();
}

ns_status ns_test_result_histogram_bin(const ns_test_result* r, int which, size_t i,
                                       double* value, uint64_t* count) {
  return Guarded([&] {
    NotNull(r, "result");
    const auto& h = which == 0 ? r->r.histogram : r->r.histogram2;
    Require(i < h.size(), ErrorCode::kInvalidArgument, "bin out of range");
    if (value) *value = h[i].value;
    if (count) *count = h[i].count;
  });
}

ns_status ns_likelihood(const ns_graph* g, double eta, const ns_infection* j, double* out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(j, "infection");
    NotNull(out, "out");
    *out = j->j.c() == 0 ? LikelihoodExact(g->lg.graph, eta, j->j).value
                         : LikelihoodCensored(g->lg.graph, eta, j->j).value;
  });
}

ns_status ns_likelihood_ratio(const ns_graph* g0, const ns_graph* g1, double eta,
                              const ns_infection* j, double* out) {
  return Guarded([&] {
    NotNull(g0, "null graph");
    NotNull(g1, "alternative graph");
    NotNull(j, "infection");
    NotNull(out, "out");
    *out = LikelihoodRatio(g0->lg.graph, g1->lg.graph, eta, j->j);
  });
}

void ns_risk_inputs_default(ns_risk_inputs* in) {
  if (in == nullptr) return;
  const RiskInputs d;
  in->n = d.n;
  in->k = d.k;
  in->c = d.c;
  in->eta = d.eta;
  in->alpha = d.alpha;
  in->D = d.D;
  in->m = d.m;
  in->nt_min = d.nt_min;
}

ns_status ns_h_eta(size_t n, size_t k, double eta, double nt_min, double* out) {
  return Guarded([&] {
    NotNull(out, "out");
    *out = HEta(n, k, eta, nt_min);
  });
}

ns_status ns_star_null_risk_bound(const ns_risk_inputs* in, double c_k, ns_bound* out) {
  return Guarded([&] {
    NotNull(out, "out");
    const Bound b = StarNullRiskBound(ToInputs(in), c_k);
    *out = ns_bound{b.value, b.vacuous};
  });
}

ns_status ns_center_test_risk_bounds(const ns_risk_inputs* in, double* lower, double* upper) {
  return Guarded([&] {
    const CenterBounds b = CenterTestRiskBounds(ToInputs(in));
    if (lower) *lower = b.lower;
    if (upper) *upper = b.upper;
  });
}

ns_status ns_multi_spread_bounds(const ns_risk_inputs* in, double c_k, ns_bound* w_bar,
                                 ns_bound* c_bar) {
  return Guarded([&] {
    const MultiSpreadBounds b = MultiSpreadRiskBounds(ToInputs(in), c_k);
    if (w_bar) *w_bar = ns_bound{b.w_bar.value, b.w_bar.vacuous};
    if (c_bar) *c_bar = ns_bound{b.c_bar.value, b.c_bar.vacuous};
  });
}

ns_status ns_line_cycle_bound(const ns_risk_inputs* in, ns_bound* out) {
  return Guarded([&] {
    NotNull(out, "out");
    const Bound b = LineCycleBound(ToInputs(in));
    *out = ns_bound{b.value, b.vacuous};
  });
}

ns_status ns_cascade_count(const ns_graph* g, size_t k, uint32_t u, uint32_t v, uint64_t* out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(out, "out");
    Require(u < g->lg.graph.n() && v < g->lg.graph.n(), ErrorCode::kInvalidArgument,
            "vertex out of range");
    *out = CascadeCount(g->lg.graph, k, u, v);
  });
}

ns_status ns_cascade_count_cycle(size_t k, uint64_t* out) {
  return Guarded([&] {
    NotNull(out, "out");
    *out = CascadeCountCycle(k);
  });
}

ns_status ns_tb_threshold(size_t d, size_t n, size_t k, size_t c, double* out) {
  return Guarded([&] {
    NotNull(out, "out");
    *out = TbThreshold(d, n, k, c);
  });
}

ns_status ns_tt_threshold(size_t n, size_t k, size_t c, double* out) {
  return Guarded([&] {
    NotNull(out, "out");
    *out = TtThreshold(n, k, c);
  });
}

ns_status ns_baseline(ns_baseline_kind kind, const ns_graph* g, size_t d, size_t k, size_t c,
                      ns_baseline_report* out) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(out, "out");
    const auto rep = Baseline(kind == NS_BASELINE_TB ? BaselineKind::kTb : BaselineKind::kTt,
                              g->lg.graph, d, k, c);
    out->threshold = rep.threshold;
    out->ceiling = rep.ceiling;
    out->always_rejects = rep.diagnosis == "always rejects";
  });
}

ns_status ns_rejection_rate(const ns_graph* g, double eta, const ns_algorithm* alg,
                            const ns_sim_plan* plan, uint64_t tag, double* rate,
                            double* median_threshold) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(alg, "algorithm");
    NotNull(alg->statistic, "algorithm statistic");
    const SimulationPlan p = ToPlan(plan);
    Require(alg->statistic->stat.n() == g->lg.graph.n(), ErrorCode::kInvalidArgument,
            "statistic and graph differ in vertex count");
    const auto decide = AlgorithmDecision(*alg, alg->statistic->stat, p.k, p.c, tag);
    const auto runs = SimulateDecisions(g->lg.graph, eta, p, tag, decide);
    size_t rejects = 0;
    std::vector<double> th;
    for (const auto& d : runs) {
      rejects += d.reject ? 1 : 0;
      th.push_back(d.threshold);
    }
    if (rate) *rate = runs.empty() ? 0.0 : static_cast<double>(rejects) / runs.size();
    if (median_threshold) *median_threshold = Median(std::move(th));
  });
}

ns_status ns_mc_risk(const ns_graph* g0, const ns_graph* g1, double eta0, double eta1,
                     const ns_algorithm* alg, const ns_sim_plan* plan, ns_risk_estimate* out) {
  double r0 = 0.0, r1 = 0.0, t0 = 0.0;
  if (g0 == nullptr || g1 == nullptr || out == nullptr) {
    g_last_error = "NULL argument";
    return NS_ERR_INVALID_ARGUMENT;
  }
  if (g0->lg.graph.n() != g1->lg.graph.n()) {
    g_last_error = "graphs differ in vertex count";
    return NS_ERR_INVALID_ARGUMENT;
  }
  ns_status s = ns_rejection_rate(g0, eta0, alg, plan, 0, &r0, &t0);
  if (s != NS_OK) return s;
  s = ns_rejection_rate(g1, eta1, alg, plan, 1, &r1, nullptr);
  if (s != NS_OK) return s;
  out->type_i = r0;
  out->type_ii = 1.0 - r1;
  out->median_threshold = t0;
  return NS_OK;
}

ns_status ns_simulate_statistic(const ns_graph* g, double eta, const ns_statistic* s,
                                const ns_sim_plan* plan, double* values) {
  return Guarded([&] {
    NotNull(g, "graph");
    NotNull(s, "statistic");
    NotNull(values, "values");
    const SimulationPlan p = ToPlan(plan);
    Require(s->stat.n() == g->lg.graph.n(), ErrorCode::kInvalidArgument,
            "statistic and graph differ in vertex count");
    const Statistic& stat = s->stat;
    const auto runs = SimulateDecisions(
        g->lg.graph, eta, p, 0,
        [&stat](const InfectionVector& j, uint64_t) { return Decision{false, stat.Value(j)}; });
    for (size_t i = 0; i < runs.size(); ++i) values[i] = runs[i].threshold;
  });
}

}  // extern "C"
