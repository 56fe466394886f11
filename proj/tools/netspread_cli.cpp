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

// netspread command-line front end. Talks to the library only through the C
// interface in netspread/netspread.h.
#include <netspread/netspread.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitGuard = 4;
constexpr int kExitInternal = 1;

constexpr const char* kSchema = "netspread.experiment/1";

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

[[noreturn]] void Usage(const std::string& what) { throw CliError(kExitUsage, what); }

int ExitCodeFor(ns_status s) {
  switch (s) {
    case NS_OK: return kExitOk;
    case NS_ERR_INVALID_ARGUMENT: return kExitUsage;
    case NS_ERR_PARSE:
    case NS_ERR_IO:
    case NS_ERR_DOMAIN:
    case NS_ERR_DISCONNECTED: return kExitData;
    case NS_ERR_GUARD: return kExitGuard;
    case NS_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

void Check(ns_status s) {
  if (s != NS_OK) throw CliError(ExitCodeFor(s), ns_last_error());
}

struct GraphDel { void operator()(ns_graph* g) const { ns_graph_free(g); } };
struct InfDel { void operator()(ns_infection* j) const { ns_infection_free(j); } };
struct StatDel { void operator()(ns_statistic* s) const { ns_statistic_free(s); } };
struct ResDel { void operator()(ns_test_result* r) const { ns_test_result_free(r); } };
using GraphPtr = std::unique_ptr<ns_graph, GraphDel>;
using InfPtr = std::unique_ptr<ns_infection, InfDel>;
using StatPtr = std::unique_ptr<ns_statistic, StatDel>;
using ResPtr = std::unique_ptr<ns_test_result, ResDel>;

// Locale-independent, 6 significant digits.
std::string Num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

Json JsonNum(double v) {
  if (std::isfinite(v)) return v;
  return Num(v);
}

double ParseEta(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !(v >= 0.0))
    Usage("bad eta '" + s + "' (expected a number >= 0 or inf)");
  return v;
}

// Accepts "star7" as shorthand for "star:7", and bare paths to edge lists.
std::string NormalizeSpec(const std::string& spec) {
  static const std::regex shorthand("([a-z]+)([0-9]+)");
  std::smatch m;
  if (std::regex_match(spec, m, shorthand)) return m[1].str() + ":" + m[2].str();
  if (spec.find(':') == std::string::npos) {
    std::ifstream probe(spec);
    if (probe) return "file:" + spec;
  }
  return spec;
}

GraphPtr LoadGraph(const std::string& spec, uint64_t seed) {
  ns_graph* g = nullptr;
  Check(ns_graph_from_spec(NormalizeSpec(spec).c_str(), seed, &g));
  return GraphPtr(g);
}

ns_graph_info Info(const ns_graph* g) {
  ns_graph_info info{};
  Check(ns_graph_info_get(g, &info));
  return info;
}

uint32_t VertexByLabel(const ns_graph* g, const std::string& label) {
  const size_t n = Info(g).n;
  for (size_t v = 0; v < n; ++v)
    if (label == ns_graph_label(g, v)) return static_cast<uint32_t>(v);
  Usage("no vertex labeled '" + label + "'");
}

InfPtr LoadInfection(const ns_graph* g, const std::string& path) {
  ns_infection* j = nullptr;
  Check(ns_infection_load(g, path.c_str(), &j));
  return InfPtr(j);
}

std::string StatusString(const ns_infection* j) {
  size_t n = 0;
  Check(ns_infection_counts(j, &n, nullptr, nullptr));
  std::string s(n, '0');
  for (size_t v = 0; v < n; ++v) Check(ns_infection_status(j, v, &s[v]));
  return s;
}

StatPtr MakeStatistic(const std::string& name, const ns_graph* g, uint32_t vertex) {
  ns_statistic_kind kind;
  if (name == "W") kind = NS_STAT_EDGES_WITHIN;
  else if (name == "R") kind = NS_STAT_RADIUS;
  else if (name == "T") kind = NS_STAT_STEINER;
  else if (name == "C") kind = NS_STAT_CENTER;
  else if (name == "orbit") kind = NS_STAT_ORBIT;
  else Usage("unknown statistic '" + name + "' (expected W, R, T, C or orbit)");
  ns_statistic* s = nullptr;
  Check(ns_statistic_create(kind, g, 0, vertex, &s));
  return StatPtr(s);
}

const char* ValidityText(ns_validity v) {
  switch (v) {
    case NS_VALIDITY_SKIPPED: return "skipped";
    case NS_VALIDITY_VALID: return "valid";
    case NS_VALIDITY_INVALID: return "invalid";
    case NS_VALIDITY_UNVERIFIABLE: return "unverifiable";
  }
  return "unknown";
}

std::ostream* OpenOut(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw CliError(kExitData, "cannot open " + path + " for writing");
  return &file;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string graph;
  std::string eta = "0";
  size_t k = 1;
  std::optional<size_t> c;
  std::string censor_file;
  uint64_t seed = 0;
  std::string out = "-";
};

int RunSimulate(const SimulateArgs& a) {
  const GraphPtr g = LoadGraph(a.graph, a.seed);
  const double eta = ParseEta(a.eta);
  ns_infection* j = nullptr;
  if (!a.censor_file.empty()) {
    const InfPtr pattern = LoadInfection(g.get(), a.censor_file);
    Check(ns_infection_simulate_censored(g.get(), eta, a.k, pattern.get(), a.seed, &j));
  } else {
    Check(ns_infection_simulate(g.get(), eta, a.k, a.c.value_or(0), a.seed, &j));
  }
  const InfPtr owned(j);
  const std::string path = a.out == "-" ? "/dev/stdout" : a.out;
  std::cout.flush();
  Check(ns_infection_save(g.get(), owned.get(), path.c_str()));
  return kExitOk;
}

// -------------------------------------------------------------------- test

struct TestArgs {
  std::string null_graph;
  std::string alt_graph;
  std::string statistic = "W";
  std::string statistic2;
  std::vector<std::string> infections;
  std::string center;
  double alpha = 0.05;
  uint64_t B = 1000;
  std::string mode = "full";
  uint64_t seed = 0;
  bool exact = false;
  size_t exact_max_n = 8;
  bool json = false;
  bool histogram = false;
  std::string debug_dump;
};

Json HistogramJson(const ns_test_result* r, int which) {
  Json bins = Json::array();
  const size_t size = ns_test_result_histogram_size(r, which);
  for (size_t i = 0; i < size; ++i) {
    double value = 0.0;
    uint64_t count = 0;
    Check(ns_test_result_histogram_bin(r, which, i, &value, &count));
    bins.push_back(Json{{"value", JsonNum(value)}, {"count", count}});
  }
  return bins;
}

int RunTest(const TestArgs& a) {
  const GraphPtr alt = LoadGraph(a.alt_graph, a.seed);
  GraphPtr null_g;
  if (!a.null_graph.empty()) null_g = LoadGraph(a.null_graph, a.seed);
  if (null_g && Info(null_g.get()).n != Info(alt.get()).n)
    Usage("null and alternative graphs differ in vertex count");
  if (a.infections.empty()) Usage("--infection is required");

  const uint32_t vertex = a.center.empty() ? 0 : VertexByLabel(alt.get(), a.center);
  const StatPtr s1 = MakeStatistic(a.statistic, alt.get(), vertex);
  StatPtr s2;
  if (!a.statistic2.empty()) s2 = MakeStatistic(a.statistic2, alt.get(), vertex);

  std::vector<InfPtr> js;
  for (const auto& path : a.infections) js.push_back(LoadInfection(alt.get(), path));

  ns_test_config cfg;
  ns_test_config_default(&cfg);
  cfg.alpha = a.alpha;
  cfg.B = a.B;
  cfg.seed = a.seed;
  cfg.exact = a.exact;
  cfg.exact_max_n = a.exact_max_n;
  if (a.mode == "full") cfg.mode = NS_MODE_FULL;
  else if (a.mode == "censor-fixed") cfg.mode = NS_MODE_CENSOR_FIXED;
  else Usage("unknown mode '" + a.mode + "' (expected full or censor-fixed)");

  ns_test_result* raw = nullptr;
  if (js.size() > 1) {
    if (s2) Usage("a composite test takes a single infection");
    if (a.statistic != "W" && a.statistic != "C")
      Usage("multi-spread tests average W or C");
    std::vector<const ns_infection*> list;
    for (const auto& j : js) list.push_back(j.get());
    Check(ns_test_multi(s1.get(), list.data(), list.size(), &cfg, &raw));
  } else if (s2) {
    Check(ns_test_composite(s1.get(), s2.get(), js[0].get(), &cfg, null_g.get(), &raw));
  } else {
    Check(ns_test_run(s1.get(), js[0].get(), &cfg, null_g.get(), &raw));
  }
  const ResPtr result(raw);
  ns_test_summary sum{};
  Check(ns_test_result_summary(result.get(), &sum));
  const std::string note = ns_test_result_validity_note(result.get());

  if (!a.debug_dump.empty()) {
    if (a.exact || js.size() > 1) Usage("--debug-dump audits single-vector Monte Carlo tests");
    std::ofstream f(a.debug_dump, std::ios::binary);
    if (!f) throw CliError(kExitData, "cannot open " + a.debug_dump);
    f << "replicate,status\n";
    for (uint64_t r = 0; r < a.B; ++r) {
      ns_infection* p = nullptr;
      Check(ns_test_resample(js[0].get(), &cfg, r, &p));
      const InfPtr owned(p);
      f << r << ',' << StatusString(owned.get()) << '\n';
    }
  }

  if (sum.validity == NS_VALIDITY_INVALID)
    std::cerr << "warning: validity condition fails (" << note
              << "); the test may not control its level\n";

  if (a.json) {
    Json out;
    out["statistic"] = ns_test_result_statistic(result.get(), 0);
    out["lower_tail"] = static_cast<bool>(sum.lower_tail);
    out["observed"] = JsonNum(sum.observed);
    out["threshold"] = JsonNum(sum.threshold);
    out["exceed_count"] = sum.exceed_count;
    out["total"] = sum.total;
    out["p_value"] = sum.p_value;
    out["exact"] = static_cast<bool>(sum.exact);
    out["saturated"] = static_cast<bool>(sum.saturated);
    if (sum.composite) {
      out["statistic2"] = ns_test_result_statistic(result.get(), 1);
      out["lower_tail2"] = static_cast<bool>(sum.lower_tail2);
      out["observed2"] = JsonNum(sum.observed2);
      out["threshold2"] = JsonNum(sum.threshold2);
      out["exceed_count2"] = sum.exceed_count2;
      out["p_value2"] = sum.p_value2;
    }
    out["reject"] = static_cast<bool>(sum.reject);
    out["validity"] = ValidityText(sum.validity);
    out["validity_note"] = note;
    out["alpha"] = a.alpha;
    out["seed"] = a.seed;
    if (a.histogram) {
      out["histogram"] = HistogramJson(result.get(), 0);
      if (sum.composite) out["histogram2"] = HistogramJson(result.get(), 1);
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "statistic: " << ns_test_result_statistic(result.get(), 0)
            << (sum.lower_tail ? " (lower tail)" : "") << '\n'
            << "observed: " << Num(sum.observed) << '\n'
            << "threshold: " << Num(sum.threshold) << (sum.saturated ? " (saturated)" : "")
            << '\n'
            << "exceed_count: " << sum.exceed_count << " / " << sum.total << '\n'
            << "p_value: " << Num(sum.p_value) << '\n';
  if (sum.composite) {
    std::cout << "statistic2: " << ns_test_result_statistic(result.get(), 1)
              << (sum.lower_tail2 ? " (lower tail)" : "") << '\n'
              << "observed2: " << Num(sum.observed2) << '\n'
              << "threshold2: " << Num(sum.threshold2) << '\n'
              << "p_value2: " << Num(sum.p_value2) << '\n';
  }
  std::cout << "reject: " << (sum.reject ? "yes" : "no") << '\n'
            << "validity: " << ValidityText(sum.validity);
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << '\n';
  if (a.histogram) {
    std::cout << "histogram:\n";
    for (const auto& bin : HistogramJson(result.get(), 0))
      std::cout << "  " << bin["value"].dump() << ' ' << bin["count"].get<uint64_t>() << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------------- risk

struct RiskArgs {
  std::string bound = "star-null";
  size_t n = 0, k = 1, c = 0, m = 1;
  std::string eta = "1";
  double alpha = 0.05, D = 2.0, nt_min = 2.0;
  std::optional<double> ck;
  bool json = false;
};

Json BoundJson(const ns_bound& b) {
  return Json{{"value", JsonNum(b.value)}, {"vacuous", static_cast<bool>(b.vacuous)}};
}

int RunRisk(const RiskArgs& a) {
  ns_risk_inputs in;
  ns_risk_inputs_default(&in);
  in.n = a.n;
  in.k = a.k;
  in.c = a.c;
  in.eta = ParseEta(a.eta);
  in.alpha = a.alpha;
  in.D = a.D;
  in.m = a.m;
  in.nt_min = a.nt_min;
  double ck = 0.0;
  if (a.ck) {
    ck = *a.ck;
  } else {
    uint64_t cycle = 0;
    Check(ns_cascade_count_cycle(a.k, &cycle));
    ck = static_cast<double>(cycle);
  }

  Json out;
  out["bound"] = a.bound;
  out["n"] = a.n;
  out["k"] = a.k;
  out["c"] = a.c;
  out["eta"] = JsonNum(in.eta);
  out["alpha"] = a.alpha;
  if (a.bound == "star-null") {
    ns_bound b{};
    Check(ns_star_null_risk_bound(&in, ck, &b));
    out["D"] = a.D;
    out["C_k"] = ck;
    out["risk"] = BoundJson(b);
  } else if (a.bound == "center") {
    double lo = 0.0, hi = 0.0;
    Check(ns_center_test_risk_bounds(&in, &lo, &hi));
    out["lower"] = JsonNum(lo);
    out["upper"] = JsonNum(hi);
  } else if (a.bound == "multi") {
    ns_bound w{}, cb{};
    Check(ns_multi_spread_bounds(&in, ck, &w, &cb));
    out["m"] = a.m;
    out["C_k"] = ck;
    out["w_bar"] = BoundJson(w);
    out["c_bar"] = BoundJson(cb);
  } else if (a.bound == "line-cycle") {
    ns_bound b{};
    Check(ns_line_cycle_bound(&in, &b));
    out["risk"] = BoundJson(b);
  } else if (a.bound == "h-eta") {
    double h = 0.0;
    Check(ns_h_eta(a.n, a.k, in.eta, a.nt_min, &h));
    out["nt_min"] = a.nt_min;
    out["h"] = JsonNum(h);
  } else {
    Usage("unknown bound '" + a.bound + "'");
  }
  if (a.json) {
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : out.items()) {
      std::cout << key << ": ";
      if (value.is_number()) {
        std::cout << Num(value.get<double>());
      } else if (value.is_string()) {
        std::cout << value.get<std::string>();
      } else if (value.is_object() && value.contains("value")) {
        std::cout << Num(value["value"].get<double>());
        if (value.value("vacuous", false)) std::cout << " (vacuous)";
      } else {
        std::cout << value.dump();
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- baseline

struct BaselineArgs {
  std::string graph;
  std::string kind = "both";
  size_t d = 2, k = 1, c = 0;
  uint64_t seed = 0;
  bool json = false;
};

Json BaselineJson(ns_baseline_kind kind, const ns_graph* g, size_t d, size_t k, size_t c) {
  ns_baseline_report rep{};
  Check(ns_baseline(kind, g, d, k, c, &rep));
  Json j;
  j["algorithm"] = kind == NS_BASELINE_TB ? "TB(" + std::to_string(d) + ")" : std::string("TT");
  j["threshold"] = JsonNum(rep.threshold);
  if (rep.ceiling >= static_cast<double>(UINT32_MAX)) j["ceiling"] = "disconnected";
  else j["ceiling"] = rep.ceiling;
  j["diagnosis"] = rep.always_rejects ? "always rejects" : "informative";
  return j;
}

int RunBaseline(const BaselineArgs& a) {
  const GraphPtr g = LoadGraph(a.graph, a.seed);
  Json rows = Json::array();
  if (a.kind == "TB" || a.kind == "both")
    rows.push_back(BaselineJson(NS_BASELINE_TB, g.get(), a.d, a.k, a.c));
  if (a.kind == "TT" || a.kind == "both")
    rows.push_back(BaselineJson(NS_BASELINE_TT, g.get(), a.d, a.k, a.c));
  if (rows.empty()) Usage("unknown baseline '" + a.kind + "' (expected TB, TT or both)");
  if (a.json) {
    std::cout << (rows.size() == 1 ? rows[0] : rows).dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& r : rows) {
    std::cout << r["algorithm"].get<std::string>() << ": threshold "
              << Num(r["threshold"].get<double>()) << ", ceiling "
              << (r["ceiling"].is_string() ? r["ceiling"].get<std::string>()
                                           : Num(r["ceiling"].get<double>()))
              << ", " << r["diagnosis"].get<std::string>() << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------- check-aut

struct CheckAutArgs {
  std::string null_graph;
  std::string alt_graph;
  std::string censor_file;
  size_t max_n = 0;
  uint64_t seed = 0;
  bool json = false;
};

Json GroupJson(const ns_graph* g, size_t max_n) {
  ns_group_info info{};
  const ns_status s = ns_automorphism_info(g, max_n, &info);
  if (s == NS_ERR_GUARD) return Json{{"order", "unknown"}, {"note", ns_last_error()}};
  Check(s);
  static const char* kinds[] = {"symmetric", "point stabilizer", "dihedral", "explicit"};
  Json j;
  j["kind"] = kinds[info.kind];
  if (info.order_known) j["order"] = info.order;
  else j["order"] = "overflow";
  j["vertex_transitive"] = static_cast<bool>(info.vertex_transitive);
  return j;
}

int RunCheckAut(const CheckAutArgs& a) {
  const GraphPtr g0 = LoadGraph(a.null_graph, a.seed);
  const GraphPtr g1 = LoadGraph(a.alt_graph, a.seed);
  InfPtr censoring;
  if (!a.censor_file.empty()) censoring = LoadInfection(g1.get(), a.censor_file);
  ns_validity v = NS_VALIDITY_SKIPPED;
  char note[256] = {0};
  Check(ns_check_validity(g0.get(), g1.get(), censoring.get(), &v, note, sizeof note));
  if (a.json) {
    Json out;
    out["validity"] = ValidityText(v);
    out["note"] = note;
    out["null_group"] = GroupJson(g0.get(), a.max_n);
    out["alt_group"] = GroupJson(g1.get(), a.max_n);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << ValidityText(v);
    if (note[0]) std::cout << " (" << note << ")";
    std::cout << '\n';
  }
  return kExitOk;
}

// -------------------------------------------------------------- experiment

uint64_t SplitMix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Path-qualified config accessors.
class Cfg {
 public:
  Cfg(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  bool has(const char* key) const { return j_.contains(key); }
  Cfg at(const char* key) const {
    if (!j_.contains(key)) Bad(key, "missing required field");
    return Cfg(j_.at(key), Child(key));
  }
  Cfg at(size_t i) const { return Cfg(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }
  size_t size() const { return j_.size(); }

  std::string Str(const char* key) const {
    const Cfg c = at(key);
    if (!c.j_.is_string()) c.Fail("expected a string");
    return c.j_.get<std::string>();
  }
  std::string Str(const char* key, const std::string& def) const {
    return has(key) ? Str(key) : def;
  }
  uint64_t UInt(const char* key) const {
    const Cfg c = at(key);
    if (!c.j_.is_number_unsigned() && !(c.j_.is_number_integer() && c.j_.get<int64_t>() >= 0))
      c.Fail("expected a non-negative integer");
    return c.j_.get<uint64_t>();
  }
  uint64_t UInt(const char* key, uint64_t def) const { return has(key) ? UInt(key) : def; }
  double Dbl(const char* key) const {
    const Cfg c = at(key);
    return c.Eta();
  }
  double Dbl(const char* key, double def) const { return has(key) ? Dbl(key) : def; }
  // Number, or the string "inf".
  double Eta() const {
    if (j_.is_number()) return j_.get<double>();
    if (j_.is_string() && j_.get<std::string>() == "inf")
      return std::numeric_limits<double>::infinity();
    Fail("expected a number or \"inf\"");
  }
  std::vector<double> EtaList(const char* key) const {
    const Cfg c = at(key);
    if (!c.j_.is_array() || c.j_.empty()) c.Fail("expected a non-empty array of eta values");
    std::vector<double> out;
    for (size_t i = 0; i < c.size(); ++i) out.push_back(c.at(i).Eta());
    return out;
  }
  bool Bool(const char* key, bool def) const {
    if (!has(key)) return def;
    const Cfg c = at(key);
    if (!c.j_.is_boolean()) c.Fail("expected true or false");
    return c.j_.get<bool>();
  }
  bool IsArray() const { return j_.is_array(); }
  bool IsObject() const { return j_.is_object(); }

  [[noreturn]] void Fail(const std::string& what) const { Usage(path_ + ": " + what); }
  [[noreturn]] void Bad(const char* key, const std::string& what) const {
    Usage(Child(key) + ": " + what);
  }

 private:
  std::string Child(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json& j_;
  std::string path_;
};

struct AlgorithmSpec {
  std::string label;
  ns_algorithm_kind kind = NS_ALG_PERMUTATION;
  std::string statistic = "W";
  std::string center;
  ns_test_config cfg{};
  size_t d = 2;
};

AlgorithmSpec ParseAlgorithm(const Cfg& c, uint64_t seed) {
  AlgorithmSpec a;
  const std::string type = c.Str("type", "permutation");
  ns_test_config_default(&a.cfg);
  a.cfg.seed = seed;
  a.cfg.threads = 1;
  if (type == "permutation") {
    a.kind = NS_ALG_PERMUTATION;
    a.statistic = c.Str("statistic", "W");
    a.center = c.Str("center", "");
    a.cfg.alpha = c.Dbl("alpha", 0.05);
    a.cfg.B = c.UInt("B", 1000);
    a.cfg.exact = c.Bool("exact", false);
    const std::string mode = c.Str("mode", "full");
    if (mode == "full") a.cfg.mode = NS_MODE_FULL;
    else if (mode == "censor-fixed") a.cfg.mode = NS_MODE_CENSOR_FIXED;
    else c.Bad("mode", "expected full or censor-fixed");
    if (!(a.cfg.alpha > 0.0 && a.cfg.alpha <= 1.0)) c.Bad("alpha", "must lie in (0, 1]");
    if (a.cfg.B == 0) c.Bad("B", "must be positive");
    a.label = c.Str("label", "perm-" + a.statistic);
  } else if (type == "TB") {
    a.kind = NS_ALG_TB;
    a.d = c.UInt("d", 2);
    a.label = c.Str("label", "TB(" + std::to_string(a.d) + ")");
  } else if (type == "TT") {
    a.kind = NS_ALG_TT;
    a.label = c.Str("label", "TT");
  } else {
    c.Bad("type", "expected permutation, TB or TT");
  }
  return a;
}

std::string EtaHeader(double eta) { return "type_ii@eta=" + Num(eta); }

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct ExperimentArgs {
  std::string config;
  std::string out = "-";
  std::string dist_out;
  size_t threads = 0;
};

Json LoadConfig(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError(kExitData, "cannot open config " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    Usage("config " + path + " is empty");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CliError(kExitData, "config " + path + ": " + e.what());
  }
}

void RunDistributions(const Cfg& root, uint64_t master, size_t threads, std::ostream& out) {
  const Cfg list = root.at("distributions");
  if (!list.IsArray()) list.Fail("expected an array");
  std::string column;
  for (size_t i = 0; i < list.size(); ++i) {
    const Cfg d = list.at(i);
    const std::string stat = d.Str("statistic", "W");
    if (column.empty()) {
      column = stat;
      out << "distribution,eta,replicate," << column << '\n';
    } else if (stat != column) {
      d.Bad("statistic", "all distributions in one file must share a statistic");
    }
    const std::string name = d.Str("name", "dist" + std::to_string(i));
    const GraphPtr g = LoadGraph(d.Str("graph"), SplitMix(master + 1000 + i));
    const std::string center = d.Str("center", "");
    const StatPtr s = MakeStatistic(stat, g.get(), center.empty() ? 0 : VertexByLabel(g.get(), center));
    ns_sim_plan plan{};
    plan.k = d.UInt("k");
    plan.c = d.UInt("c", 0);
    plan.reps = d.UInt("replicates", 100);
    plan.threads = threads;
    const auto etas = d.EtaList("eta");
    std::vector<double> values(plan.reps);
    for (size_t e = 0; e < etas.size(); ++e) {
      plan.seed = SplitMix(SplitMix(master ^ (0xd157ULL + i)) + e);
      Check(ns_simulate_statistic(g.get(), etas[e], s.get(), &plan, values.data()));
      for (uint64_t r = 0; r < plan.reps; ++r)
        out << CsvField(name) << ',' << Num(etas[e]) << ',' << r << ',' << Num(values[r]) << '\n';
    }
  }
}

int RunExperiment(const ExperimentArgs& a) {
  const Json doc = LoadConfig(a.config);
  if (!doc.is_object() || doc.empty()) Usage("config " + a.config + " has no content");
  const Cfg root(doc, "");
  const std::string schema = root.Str("schema");
  if (schema != kSchema) root.Bad("schema", "unsupported schema '" + schema + "', expected " + kSchema);
  const uint64_t master = root.UInt("seed", 0);
  const size_t threads = a.threads ? a.threads : root.UInt("threads", 0);
  const bool has_exp = root.has("experiments");
  const bool has_dist = root.has("distributions");
  if (!has_exp && !has_dist) Usage("config defines neither experiments nor distributions");
  if (has_dist && a.dist_out.empty()) Usage("config has distributions; pass --dist-out");

  struct Row {
    std::string experiment, algorithm, threshold, type_i, diagnosis;
    std::map<std::string, std::string> type_ii;
  };
  std::vector<Row> rows;
  std::vector<std::string> eta_columns;

  if (has_exp) {
    const Cfg list = root.at("experiments");
    if (!list.IsArray() || list.size() == 0) list.Fail("expected a non-empty array");
    for (size_t i = 0; i < list.size(); ++i) {
      const Cfg e = list.at(i);
      const std::string name = e.Str("name", "exp" + std::to_string(i));
      const uint64_t seed = e.UInt("seed", SplitMix(master + i));
      const GraphPtr g0 = LoadGraph(e.Str("null_graph"), SplitMix(seed ^ 0x6e756c6cULL));
      const GraphPtr g1 = LoadGraph(e.Str("alt_graph"), SplitMix(seed ^ 0x616c74ULL));
      const size_t n = Info(g1.get()).n;
      if (Info(g0.get()).n != n) e.Fail("null_graph and alt_graph differ in vertex count");
      const double null_eta = e.Dbl("null_eta", 0.0);
      const auto etas = e.EtaList("eta");
      for (double eta : etas) {
        const std::string col = EtaHeader(eta);
        if (std::find(eta_columns.begin(), eta_columns.end(), col) == eta_columns.end())
          eta_columns.push_back(col);
      }
      ns_sim_plan plan{};
      plan.k = e.UInt("k");
      plan.c = e.UInt("c", 0);
      plan.reps = e.UInt("replicates", 1000);
      plan.seed = seed;
      plan.threads = threads;
      if (plan.k + plan.c > n) e.Fail("k + c exceeds the number of vertices");

      // With eta = 0 the null law is uniform whatever the graph.
      GraphPtr validity_null;
      if (null_eta == 0.0) validity_null = LoadGraph("empty:" + std::to_string(n), 0);

      const Cfg algs = e.at("algorithms");
      if (!algs.IsArray() || algs.size() == 0) algs.Fail("expected a non-empty array");
      for (size_t ai = 0; ai < algs.size(); ++ai) {
        const AlgorithmSpec spec = ParseAlgorithm(algs.at(ai), SplitMix(seed + 17 * (ai + 1)));
        const bool perm = spec.kind == NS_ALG_PERMUTATION;
        const std::string stat_name =
            perm ? spec.statistic : (spec.kind == NS_ALG_TB ? "R" : "T");
        const StatPtr stat = MakeStatistic(
            stat_name, g1.get(), spec.center.empty() ? 0 : VertexByLabel(g1.get(), spec.center));
        ns_algorithm alg{};
        alg.kind = spec.kind;
        alg.statistic = stat.get();
        alg.cfg = spec.cfg;
        alg.d = spec.d;

        Row row;
        row.experiment = name;
        row.algorithm = spec.label;
        double type_i = 0.0, median_t = 0.0;
        Check(ns_rejection_rate(g0.get(), null_eta, &alg, &plan, 0, &type_i, &median_t));
        row.type_i = Num(type_i);
        if (perm) {
          row.threshold = Num(median_t);
          ns_validity v = NS_VALIDITY_SKIPPED;
          const ns_graph* vnull = validity_null ? validity_null.get() : g0.get();
          Check(ns_check_validity(vnull, g1.get(), nullptr, &v, nullptr, 0));
          row.diagnosis = ValidityText(v);
        } else {
          ns_baseline_report rep{};
          Check(ns_baseline(spec.kind == NS_ALG_TB ? NS_BASELINE_TB : NS_BASELINE_TT, g1.get(),
                            spec.d, plan.k, plan.c, &rep));
          row.threshold = Num(rep.threshold);
          row.diagnosis = rep.always_rejects ? "always rejects" : "informative";
        }
        for (size_t ei = 0; ei < etas.size(); ++ei) {
          double power = 0.0;
          Check(ns_rejection_rate(g1.get(), etas[ei], &alg, &plan, 1 + ei, &power, nullptr));
          row.type_ii[EtaHeader(etas[ei])] = Num(1.0 - power);
        }
        rows.push_back(std::move(row));
      }
    }
  }

  // Single writer: everything is computed before output starts.
  if (has_exp) {
    std::ofstream file;
    std::ostream& out = *OpenOut(a.out, file);
    out << "experiment,algorithm,threshold,type_i";
    for (const auto& col : eta_columns) out << ',' << col;
    out << ",diagnosis\n";
    for (const auto& r : rows) {
      out << CsvField(r.experiment) << ',' << CsvField(r.algorithm) << ',' << r.threshold << ','
          << r.type_i;
      for (const auto& col : eta_columns) {
        const auto it = r.type_ii.find(col);
        out << ',' << (it == r.type_ii.end() ? "" : it->second);
      }
      out << ',' << CsvField(r.diagnosis) << '\n';
    }
  }
  if (has_dist) {
    std::ostringstream buf;
    RunDistributions(root, master, threads, buf);
    std::ofstream file;
    *OpenOut(a.dist_out, file) << buf.str();
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"netspread: hypothesis tests for infection snapshots on graphs"};
  app.set_version_flag("--version", std::string(ns_version()));
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* s_cmd = app.add_subcommand("simulate", "simulate a spread and write a status file");
  s_cmd->add_option("--graph", sim.graph, "graph spec or edge-list path")->required();
  s_cmd->add_option("--eta", sim.eta, "spreading strength (number or inf)");
  s_cmd->add_option("--k", sim.k, "infected (uncensored) vertices")->required();
  auto* c_opt = s_cmd->add_option("--c", sim.c, "censored vertices, chosen uniformly");
  s_cmd->add_option("--censor-file", sim.censor_file, "status file whose * entries are censored")
      ->excludes(c_opt);
  s_cmd->add_option("--seed", sim.seed, "random seed");
  s_cmd->add_option("--out", sim.out, "output status file (- for stdout)");

  TestArgs test;
  auto* t_cmd = app.add_subcommand("test", "run a permutation test on an infection");
  t_cmd->add_option("--null-graph", test.null_graph, "null graph (enables the validity check)");
  t_cmd->add_option("--alt-graph", test.alt_graph, "alternative graph")->required();
  t_cmd->add_option("--statistic", test.statistic, "W, R, T, C or orbit");
  t_cmd->add_option("--statistic2", test.statistic2, "second statistic (composite test)");
  t_cmd->add_option("--infection", test.infections, "status file; repeat for multi-spread tests")
      ->required();
  t_cmd->add_option("--center", test.center, "vertex label for C and orbit (default: vertex 0)");
  t_cmd->add_option("--alpha", test.alpha, "level")
      ->check(CLI::Validator(
          [](std::string& v) {
            const double a = std::strtod(v.c_str(), nullptr);
            return a > 0.0 && a < 1.0 ? std::string() : "alpha must lie in (0, 1)";
          },
          "in (0, 1)"));
  t_cmd->add_option("--B", test.B, "Monte Carlo permutations")->check(CLI::PositiveNumber);
  t_cmd->add_option("--mode", test.mode, "full or censor-fixed");
  t_cmd->add_option("--seed", test.seed, "random seed");
  t_cmd->add_flag("--exact", test.exact, "enumerate every permutation");
  t_cmd->add_option("--exact-max-n", test.exact_max_n, "largest number of permuted positions");
  t_cmd->add_flag("--json", test.json, "machine-readable output");
  t_cmd->add_flag("--histogram", test.histogram, "include the permutation distribution");
  t_cmd->add_option("--debug-dump", test.debug_dump, "write every resampled vector to a CSV file");

  RiskArgs risk;
  auto* r_cmd = app.add_subcommand("risk", "evaluate a closed-form risk bound");
  r_cmd->add_option("--bound", risk.bound, "star-null, center, multi, line-cycle or h-eta");
  r_cmd->add_option("--n", risk.n, "vertices")->required();
  r_cmd->add_option("--k", risk.k, "infected vertices")->required();
  r_cmd->add_option("--c", risk.c, "censored vertices");
  r_cmd->add_option("--eta", risk.eta, "spreading strength (number or inf)");
  r_cmd->add_option("--alpha", risk.alpha, "level")->check(CLI::Range(0.0, 1.0));
  r_cmd->add_option("--D", risk.D, "degree of the alternative graph");
  r_cmd->add_option("--m", risk.m, "independent spreads");
  r_cmd->add_option("--nt-min", risk.nt_min, "lower bound on the cut size");
  r_cmd->add_option("--ck", risk.ck, "cascade count (default (k-1) 2^(k-1))");
  r_cmd->add_flag("--json", risk.json, "machine-readable output");

  BaselineArgs base;
  auto* b_cmd = app.add_subcommand("baseline", "TB/TT thresholds and reject diagnosis");
  b_cmd->add_option("--graph", base.graph, "graph spec or edge-list path")->required();
  b_cmd->add_option("--kind", base.kind, "TB, TT or both");
  b_cmd->add_option("--d", base.d, "TB dimension parameter");
  b_cmd->add_option("--k", base.k, "infected vertices")->required();
  b_cmd->add_option("--c", base.c, "censored vertices");
  b_cmd->add_option("--seed", base.seed, "seed for random graph specs");
  b_cmd->add_flag("--json", base.json, "machine-readable output");

  CheckAutArgs aut;
  auto* a_cmd = app.add_subcommand("check-aut", "check the permutation-test validity condition");
  a_cmd->add_option("null", aut.null_graph, "null graph spec")->required();
  a_cmd->add_option("alt", aut.alt_graph, "alternative graph spec")->required();
  a_cmd->add_option("--censor-file", aut.censor_file, "restrict to censor-preserving symmetries");
  a_cmd->add_option("--max-n", aut.max_n, "largest graph searched exhaustively");
  a_cmd->add_option("--seed", aut.seed, "seed for random graph specs");
  a_cmd->add_flag("--json", aut.json, "machine-readable output");

  ExperimentArgs exp;
  auto* e_cmd = app.add_subcommand("experiment", "run a JSON experiment config");
  e_cmd->add_option("config", exp.config, "config file")->required();
  e_cmd->add_option("--out", exp.out, "risk table CSV (- for stdout)");
  e_cmd->add_option("--dist-out", exp.dist_out, "long-format statistic distribution CSV");
  e_cmd->add_option("--threads", exp.threads, "worker threads (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*s_cmd) return RunSimulate(sim);
    if (*t_cmd) return RunTest(test);
    if (*r_cmd) return RunRisk(risk);
    if (*b_cmd) return RunBaseline(base);
    if (*a_cmd) return RunCheckAut(aut);
    if (*e_cmd) return RunExperiment(exp);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return Main(argc, argv); }
