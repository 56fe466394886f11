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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "netspread/netspread.h"

namespace {

struct Graph {
  ns_graph* g = nullptr;
  explicit Graph(const char* spec) { EXPECT_EQ(ns_graph_from_spec(spec, 0, &g), NS_OK); }
  ~Graph() { ns_graph_free(g); }
};

TEST(CApi, GraphInfoAndErrors) {
  Graph cyc("cycle:7");
  ns_graph_info info;
  ASSERT_EQ(ns_graph_info_get(cyc.g, &info), NS_OK);
  EXPECT_EQ(info.n, 7u);
  EXPECT_EQ(info.num_edges, 7u);
  EXPECT_EQ(info.diameter, 3u);
  EXPECT_STREQ(ns_graph_label(cyc.g, 2), "2");
  EXPECT_EQ(ns_graph_label(cyc.g, 7), nullptr);

  ns_graph* bad = nullptr;
  EXPECT_EQ(ns_graph_from_spec("nonsense:3", 0, &bad), NS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::strlen(ns_last_error()), 0u);
  EXPECT_EQ(ns_graph_load_edge_list("/nonexistent/edges.txt", &bad), NS_ERR_IO);
  EXPECT_EQ(ns_graph_info_get(nullptr, &info), NS_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(ns_status_name(NS_ERR_GUARD), "guard exceeded");
}

TEST(CApi, AutomorphismInfo) {
  Graph star("star:7");
  ns_group_info gi;
  ASSERT_EQ(ns_automorphism_info(star.g, 0, &gi), NS_OK);
  EXPECT_EQ(gi.kind, NS_GROUP_POINT_STABILIZER);
  EXPECT_EQ(gi.order, 720u);
  EXPECT_FALSE(gi.vertex_transitive);
  Graph er("er:30:0.3:1");
  EXPECT_EQ(ns_automorphism_info(er.g, 0, &gi), NS_ERR_GUARD);
}

TEST(CApi, SimulateAndTest) {
  Graph grid("torus:10x10");
  Graph empty("empty:100");
  ns_infection* j = nullptr;
  ASSERT_EQ(ns_infection_simulate(grid.g, 50.0, 20, 10, 4, &j), NS_OK);
  size_t n, k, c;
  ns_infection_counts(j, &n, &k, &c);
  EXPECT_EQ(n, 100u);
  EXPECT_EQ(k, 20u);
  EXPECT_EQ(c, 10u);

  ns_statistic* w = nullptr;
  ASSERT_EQ(ns_statistic_create(NS_STAT_EDGES_WITHIN, grid.g, 100, 0, &w), NS_OK);
  ns_test_config cfg;
  ns_test_config_default(&cfg);
  cfg.B = 200;
  cfg.alpha = 0.01;
  ns_test_result* r = nullptr;
  ASSERT_EQ(ns_test_run(w, j, &cfg, empty.g, &r), NS_OK);
  ns_test_summary s;
  ASSERT_EQ(ns_test_result_summary(r, &s), NS_OK);
  EXPECT_TRUE(s.reject);
  EXPECT_EQ(s.total, 200u);
  EXPECT_EQ(s.validity, NS_VALIDITY_VALID);
  EXPECT_STREQ(ns_test_result_statistic(r, 0), "W");
  size_t bins = ns_test_result_histogram_size(r, 0);
  uint64_t sum = 0;
  for (size_t i = 0; i < bins; ++i) {
    double v;
    uint64_t count;
    ASSERT_EQ(ns_test_result_histogram_bin(r, 0, i, &v, &count), NS_OK);
    sum += count;
  }
  EXPECT_EQ(sum, 200u);
  double v;
  uint64_t count;
  EXPECT_EQ(ns_test_result_histogram_bin(r, 0, bins, &v, &count), NS_ERR_INVALID_ARGUMENT);

  cfg.alpha = 1.5;
  ns_test_result* r2 = nullptr;
  EXPECT_EQ(ns_test_run(w, j, &cfg, nullptr, &r2), NS_ERR_INVALID_ARGUMENT);
  ns_test_result_free(r);
  ns_statistic_free(w);
  ns_infection_free(j);
}

TEST(CApi, ValidityNote) {
  Graph star("star:6"), path("path:6");
  ns_validity v;
  char note[128];
  ASSERT_EQ(ns_check_validity(star.g, path.g, nullptr, &v, note, sizeof note), NS_OK);
  EXPECT_EQ(v, NS_VALIDITY_INVALID);
  EXPECT_GT(std::strlen(note), 0u);
}

TEST(CApi, InfectionStrings) {
  ns_infection* j = nullptr;
  ASSERT_EQ(ns_infection_from_string("01*10", &j), NS_OK);
  char st;
  ns_infection_status(j, 2, &st);
  EXPECT_EQ(st, '*');
  size_t n, k, c;
  ns_infection_counts(j, &n, &k, &c);
  EXPECT_EQ(k, 2u);
  EXPECT_EQ(c, 1u);
  ns_infection_free(j);
  EXPECT_EQ(ns_infection_from_string("01x", &j), NS_ERR_PARSE);
}

TEST(CApi, LikelihoodAndBounds) {
  Graph c5("cycle:5"), e5("empty:5");
  ns_infection* j = nullptr;
  ns_infection_from_string("11000", &j);
  double ratio;
  ASSERT_EQ(ns_likelihood_ratio(e5.g, c5.g, 2.0, j, &ratio), NS_OK);
  EXPECT_NEAR(ratio, 1.5, 1e-13);
  ns_infection_free(j);

  double t;
  ASSERT_EQ(ns_tb_threshold(2, 2500, 500, 500, &t), NS_OK);
  EXPECT_NEAR(t, 157.77, 0.01);
  EXPECT_EQ(ns_tb_threshold(2, 2, 1, 0, &t), NS_ERR_DOMAIN);
  uint64_t ck;
  ns_cascade_count_cycle(3, &ck);
  EXPECT_EQ(ck, 8u);

  ns_risk_inputs in;
  ns_risk_inputs_default(&in);
  in.n = 100;
  in.k = 10;
  in.eta = 5.0;
  double lo, hi;
  ASSERT_EQ(ns_center_test_risk_bounds(&in, &lo, &hi), NS_OK);
  EXPECT_LE(lo, hi);
}

TEST(CApi, MonteCarloRisk) {
  Graph cyc("cycle:40"), empty("empty:40");
  ns_statistic* w = nullptr;
  ns_statistic_create(NS_STAT_EDGES_WITHIN, cyc.g, 40, 0, &w);
  ns_algorithm alg{};
  alg.kind = NS_ALG_PERMUTATION;
  alg.statistic = w;
  ns_test_config_default(&alg.cfg);
  alg.cfg.B = 60;
  alg.cfg.alpha = 0.05;
  ns_sim_plan plan{8, 0, 40, 3, 0};
  ns_risk_estimate a, b;
  ASSERT_EQ(ns_mc_risk(empty.g, cyc.g, 0.0, 30.0, &alg, &plan, &a), NS_OK);
  ASSERT_EQ(ns_mc_risk(empty.g, cyc.g, 0.0, 30.0, &alg, &plan, &b), NS_OK);
  EXPECT_EQ(a.type_i, b.type_i);
  EXPECT_EQ(a.type_ii, b.type_ii);
  EXPECT_LE(a.type_i, 0.2);

  std::vector<double> values(plan.reps);
  ASSERT_EQ(ns_simulate_statistic(cyc.g, 30.0, w, &plan, values.data()), NS_OK);
  for (double v : values) EXPECT_GE(v, 0.0);
  ns_statistic_free(w);
}

}  // namespace
