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

/* C interface to the netspread library. Every fallible call returns an
 * ns_status; on failure ns_last_error() describes the problem for the
 * calling thread. Objects are opaque and released with their _free call. */
#ifndef NETSPREAD_NETSPREAD_H_
#define NETSPREAD_NETSPREAD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(NETSPREAD_BUILDING)
#define NS_API __declspec(dllexport)
#else
#define NS_API __declspec(dllimport)
#endif
#else
#define NS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ns_status {
  NS_OK = 0,
  NS_ERR_INVALID_ARGUMENT = 1,
  NS_ERR_PARSE = 2,
  NS_ERR_GUARD = 3, /* enumeration or search limit exceeded */
  NS_ERR_DOMAIN = 4,
  NS_ERR_DISCONNECTED = 5,
  NS_ERR_IO = 6,
  NS_ERR_INTERNAL = 7
} ns_status;

typedef struct ns_graph ns_graph;
typedef struct ns_infection ns_infection;
typedef struct ns_statistic ns_statistic;
typedef struct ns_test_result ns_test_result;

NS_API const char* ns_version(void);
NS_API const char* ns_last_error(void);
NS_API const char* ns_status_name(ns_status s);

/* Graphs. Specs: empty:N complete:N star:N cycle:N path:N bipartite:A,B
 * torus:AxB[xC...] er:N:P[:SEED] sbm:N:A:B[:SEED] cer0:N:P:G[:SEED]
 * cer1:N:P:G[:SEED] file:PATH. */
NS_API ns_status ns_graph_from_spec(const char* spec, uint64_t seed, ns_graph** out);
NS_API ns_status ns_graph_load_edge_list(const char* path, ns_graph** out);
NS_API void ns_graph_free(ns_graph* g);

typedef struct ns_graph_info {
  size_t n;
  size_t num_edges;
  size_t max_degree;
  uint32_t diameter; /* UINT32_MAX when disconnected */
} ns_graph_info;
NS_API ns_status ns_graph_info_get(const ns_graph* g, ns_graph_info* out);
/* Original label of vertex v, or NULL when out of range. */
NS_API const char* ns_graph_label(const ns_graph* g, size_t v);

typedef enum ns_group_kind {
  NS_GROUP_SYMMETRIC = 0,
  NS_GROUP_POINT_STABILIZER = 1,
  NS_GROUP_DIHEDRAL = 2,
  NS_GROUP_EXPLICIT = 3
} ns_group_kind;

typedef struct ns_group_info {
  ns_group_kind kind;
  int order_known; /* 0 when the order overflows 64 bits */
  uint64_t order;
  int vertex_transitive;
} ns_group_info;
/* max_n = 0 selects the default search limit. */
NS_API ns_status ns_automorphism_info(const ns_graph* g, size_t max_n, ns_group_info* out);

/* Infections. Status characters are '0', '1' and '*'. */
NS_API ns_status ns_infection_simulate(const ns_graph* g, double eta, size_t k, size_t c,
                                       uint64_t seed, ns_infection** out);
/* Censors exactly the '*' entries of `pattern`, then spreads until k
 * uncensored vertices are infected. */
NS_API ns_status ns_infection_simulate_censored(const ns_graph* g, double eta, size_t k,
                                                const ns_infection* pattern, uint64_t seed,
                                                ns_infection** out);
NS_API ns_status ns_infection_from_string(const char* status, ns_infection** out);
NS_API ns_status ns_infection_load(const ns_graph* g, const char* path, ns_infection** out);
NS_API ns_status ns_infection_save(const ns_graph* g, const ns_infection* j, const char* path);
NS_API ns_status ns_infection_counts(const ns_infection* j, size_t* n, size_t* k, size_t* c);
NS_API ns_status ns_infection_status(const ns_infection* j, size_t v, char* out);
NS_API void ns_infection_free(ns_infection* j);

/* Statistics. graph is the alternative graph (may be NULL for the center
 * statistic). For NS_STAT_ORBIT the orbit of `vertex` under Aut(graph) is
 * counted; for NS_STAT_CENTER `vertex` is the center. */
typedef enum ns_statistic_kind {
  NS_STAT_EDGES_WITHIN = 0,
  NS_STAT_RADIUS = 1,
  NS_STAT_STEINER = 2,
  NS_STAT_CENTER = 3,
  NS_STAT_ORBIT = 4
} ns_statistic_kind;

NS_API ns_status ns_statistic_create(ns_statistic_kind kind, const ns_graph* graph, size_t n,
                                     uint32_t vertex, ns_statistic** out);
/* +inf for disconnected radius / Steiner cases. */
NS_API ns_status ns_statistic_evaluate(const ns_statistic* s, const ns_infection* j,
                                       double* out);
NS_API void ns_statistic_free(ns_statistic* s);

typedef enum ns_perm_mode { NS_MODE_FULL = 0, NS_MODE_CENSOR_FIXED = 1 } ns_perm_mode;

typedef struct ns_test_config {
  double alpha;
  uint64_t B;
  uint64_t seed;
  ns_perm_mode mode;
  int exact;          /* enumerate all permutations instead of sampling */
  size_t threads;     /* 0: NETSPREAD_THREADS or hardware */
  size_t exact_max_n; /* guard for exact mode */
} ns_test_config;
NS_API void ns_test_config_default(ns_test_config* cfg);

typedef enum ns_validity {
  NS_VALIDITY_SKIPPED = 0,
  NS_VALIDITY_VALID = 1,
  NS_VALIDITY_INVALID = 2,
  NS_VALIDITY_UNVERIFIABLE = 3
} ns_validity;

/* Validity of the permutation test for null g0 and alternative g1. With a
 * non-NULL `censoring`, only automorphisms preserving its '*' set count. The
 * note is copied into `note` (truncated to note_len) when non-NULL. */
NS_API ns_status ns_check_validity(const ns_graph* g0, const ns_graph* g1,
                                   const ns_infection* censoring, ns_validity* out,
                                   char* note, size_t note_len);

/* null_graph may be NULL to skip the validity check. */
NS_API ns_status ns_test_run(const ns_statistic* s, const ns_infection* j,
                             const ns_test_config* cfg, const ns_graph* null_graph,
                             ns_test_result** out);
NS_API ns_status ns_test_composite(const ns_statistic* s1, const ns_statistic* s2,
                                   const ns_infection* j, const ns_test_config* cfg,
                                   const ns_graph* null_graph, ns_test_result** out);
NS_API ns_status ns_test_multi(const ns_statistic* s, const ns_infection* const* js, size_t m,
                               const ns_test_config* cfg, ns_test_result** out);
/* The permuted vector used by Monte Carlo replicate r. */
NS_API ns_status ns_test_resample(const ns_infection* j, const ns_test_config* cfg, uint64_t r,
                                  ns_infection** out);
NS_API void ns_test_result_free(ns_test_result* r);

typedef struct ns_test_summary {
  double observed;
  double threshold;
  double p_value;
  uint64_t exceed_count;
  uint64_t total;
  int reject;
  int saturated;
  int exact;
  int lower_tail;
  int composite;
  double observed2;
  double threshold2;
  double p_value2;
  uint64_t exceed_count2;
  int lower_tail2;
  ns_validity validity;
} ns_test_summary;
NS_API ns_status ns_test_result_summary(const ns_test_result* r, ns_test_summary* out);
/* which = 0 for the (first) statistic, 1 for the second composite one. */
NS_API const char* ns_test_result_statistic(const ns_test_result* r, int which);
NS_API const char* ns_test_result_validity_note(const ns_test_result* r);
NS_API size_t ns_test_result_histogram_size(const ns_test_result* r, int which);
NS_API ns_status ns_test_result_histogram_bin(const ns_test_result* r, int which, size_t i,
                                              double* value, uint64_t* count);

/* Likelihoods (small instances). */
NS_API ns_status ns_likelihood(const ns_graph* g, double eta, const ns_infection* j,
                               double* out);
NS_API ns_status ns_likelihood_ratio(const ns_graph* g0, const ns_graph* g1, double eta,
                                     const ns_infection* j, double* out);

/* Closed-form risk evaluators. */
typedef struct ns_risk_inputs {
  size_t n;
  size_t k;
  size_t c;
  double eta;
  double alpha;
  double D;
  size_t m;
  double nt_min;
} ns_risk_inputs;
NS_API void ns_risk_inputs_default(ns_risk_inputs* in);

typedef struct ns_bound {
  double value;
  int vacuous;
} ns_bound;

NS_API ns_status ns_h_eta(size_t n, size_t k, double eta, double nt_min, double* out);
NS_API ns_status ns_star_null_risk_bound(const ns_risk_inputs* in, double c_k, ns_bound* out);
NS_API ns_status ns_center_test_risk_bounds(const ns_risk_inputs* in, double* lower,
                                            double* upper);
NS_API ns_status ns_multi_spread_bounds(const ns_risk_inputs* in, double c_k, ns_bound* w_bar,
                                        ns_bound* c_bar);
NS_API ns_status ns_line_cycle_bound(const ns_risk_inputs* in, ns_bound* out);
NS_API ns_status ns_cascade_count(const ns_graph* g, size_t k, uint32_t u, uint32_t v,
                                  uint64_t* out);
NS_API ns_status ns_cascade_count_cycle(size_t k, uint64_t* out);
NS_API ns_status ns_tb_threshold(size_t d, size_t n, size_t k, size_t c, double* out);
NS_API ns_status ns_tt_threshold(size_t n, size_t k, size_t c, double* out);

typedef enum ns_baseline_kind { NS_BASELINE_TB = 0, NS_BASELINE_TT = 1 } ns_baseline_kind;

typedef struct ns_baseline_report {
  double threshold;
  double ceiling; /* diameter (TB) or n - 1 (TT); UINT32_MAX if disconnected */
  int always_rejects;
} ns_baseline_report;
NS_API ns_status ns_baseline(ns_baseline_kind kind, const ns_graph* g, size_t d, size_t k,
                             size_t c, ns_baseline_report* out);

/* Monte Carlo harness. */
typedef struct ns_sim_plan {
  size_t k;
  size_t c;
  uint64_t reps;
  uint64_t seed;
  size_t threads;
} ns_sim_plan;

typedef enum ns_algorithm_kind {
  NS_ALG_PERMUTATION = 0,
  NS_ALG_TB = 1,
  NS_ALG_TT = 2
} ns_algorithm_kind;

/* Baselines evaluate radius (TB) or Steiner weight (TT) on the graph of
 * `statistic`; the permutation algorithm runs ns_test_run with `cfg`. */
typedef struct ns_algorithm {
  ns_algorithm_kind kind;
  const ns_statistic* statistic;
  ns_test_config cfg;
  size_t d;
} ns_algorithm;

/* Rejection frequency over plan->reps infections simulated on g with
 * parameter eta; `tag` selects an independent random stream. */
NS_API ns_status ns_rejection_rate(const ns_graph* g, double eta, const ns_algorithm* alg,
                                   const ns_sim_plan* plan, uint64_t tag, double* rate,
                                   double* median_threshold);

typedef struct ns_risk_estimate {
  double type_i;
  double type_ii;
  double median_threshold;
} ns_risk_estimate;
NS_API ns_status ns_mc_risk(const ns_graph* g0, const ns_graph* g1, double eta0, double eta1,
                            const ns_algorithm* alg, const ns_sim_plan* plan,
                            ns_risk_estimate* out);

/* Writes plan->reps values of the statistic on infections simulated on g. */
NS_API ns_status ns_simulate_statistic(const ns_graph* g, double eta, const ns_statistic* s,
                                       const ns_sim_plan* plan, double* values);

#ifdef __cplusplus
}
#endif

#endif /* NETSPREAD_NETSPREAD_H_ */
