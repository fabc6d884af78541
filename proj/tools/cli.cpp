#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graph_spec.hpp"
#include "netcomm/centrality.hpp"
#include "netcomm/compare.hpp"
#include "netcomm/errors.hpp"
#include "netcomm/graph_io.hpp"
#include "netcomm/random.hpp"

namespace netcomm::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string input;
  std::string generate;
  int base = 0;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> seeds;
  std::size_t reps = 1;
  std::size_t bench_reps = 3;
  std::vector<std::string> methods;
  std::string function = "exp";
  double beta = 1.0;
  double alpha_fraction = 0.85;
  std::optional<double> alpha;
  double tol = 1e-12;
  int restart = 10;
  int max_restarts = 50;
  int quad_steps = 5;
  std::size_t exact_below = kDefaultExactBelow;
  std::vector<double> top_percents{10.0, 1.0};
  std::vector<std::size_t> top_k;
  bool curve = false;
  std::string format;
  std::string out;

  bool reps_given = false;
  bool seeds_given = false;
};

struct Instance {
  Graph graph;
  IndexBase base = IndexBase::zero;
  std::string id;
  std::optional<std::uint64_t> seed;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 6 significant digits, '.' decimal point regardless of locale.
std::string num(double x) {
  if (std::isnan(x)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", x);
  return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : "NA"; }

std::string key_of(double percent) {
  std::ostringstream s;
  s << percent;
  return s.str();
}

KrylovConfig krylov_config(const Options& o) {
  KrylovConfig cfg;
  cfg.tolerance = o.tol;
  cfg.restart_length = o.restart;
  cfg.max_restarts = o.max_restarts;
  cfg.quadrature_steps = o.quad_steps;
  cfg.validate();
  return cfg;
}

ScoreOptions score_options(const Options& o) {
  if (!(o.beta > 0.0)) throw std::invalid_argument("--beta must be > 0");
  ScoreOptions s;
  s.beta = o.beta;
  s.alpha = o.alpha ? AlphaChoice::literal(*o.alpha) : AlphaChoice::fraction(o.alpha_fraction);
  s.krylov = krylov_config(o);
  s.exact_below = o.exact_below;
  return s;
}

Method parse_method_or_throw(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) {
    throw std::invalid_argument("unknown method '" + name +
                                "' (exp-total, exp-subgraph, res-total, res-subgraph)");
  }
  return *m;
}

std::vector<std::uint64_t> resolve_seeds(const Options& o) {
  if (o.reps < 1) throw std::invalid_argument("--reps must be at least 1");
  if (o.seeds_given) {
    if (o.seeds.empty()) throw std::invalid_argument("--seeds is empty");
    if (o.reps_given && o.reps != o.seeds.size()) {
      throw std::invalid_argument("--seeds lists " + std::to_string(o.seeds.size()) +
                                  " values but --reps is " + std::to_string(o.reps));
    }
    return o.seeds;
  }
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < o.reps; ++r) out.push_back(o.seed + r);
  return out;
}

Instance load_one(const Options& o, std::uint64_t seed) {
  Instance inst;
  if (!o.input.empty()) {
    if (o.base != 0 && o.base != 1) throw std::invalid_argument("--base must be 0 or 1");
    LoadedGraph lg = load_graph_file(o.input, o.base == 1 ? IndexBase::one : IndexBase::zero);
    inst.graph = std::move(lg.graph);
    inst.base = lg.base;
    inst.id = o.input;
    return inst;
  }
  const GraphSpec spec = GraphSpec::parse(o.generate);
  inst.graph = spec.build(seed);
  inst.id = o.generate;
  if (spec.is_random()) {
    inst.seed = seed;
    inst.id += "#" + std::to_string(seed);
  }
  return inst;
}

// One instance per seed for --generate; a single instance for --input.
std::vector<Instance> load_instances(const Options& o) {
  const std::vector<std::uint64_t> seeds = resolve_seeds(o);
  if (!o.input.empty() && seeds.size() > 1) {
    throw std::invalid_argument("replication (--reps/--seeds) needs --generate, not --input");
  }
  std::vector<Instance> out;
  for (std::uint64_t s : seeds) out.push_back(load_one(o, s));
  return out;
}

Json graph_json(const Instance& inst) {
  Json j;
  j["id"] = inst.id;
  j["n"] = inst.graph.num_nodes();
  j["m"] = inst.graph.num_edges();
  j["seed"] = inst.seed ? Json(*inst.seed) : Json(nullptr);
  j["index_base"] = static_cast<int>(inst.base);
  return j;
}

Json report_json(const NetworkReport& r) {
  Json j;
  j["function"] = r.kind == MatrixFunction::Kind::exponential ? "exp" : "resolvent";
  j["parameter"] = r.parameter;
  j["n"] = r.n;
  j["m"] = r.m;
  j["C"] = r.C;
  j["EE"] = r.EE;
  j["C_over_n"] = r.C_over_n;
  j["C_over_m"] = r.C_over_m;  // NaN serializes as null
  j["EE_over_n"] = r.EE_over_n;
  j["lambda1"] = r.lambda1;
  j["lambda2"] = r.lambda2;
  j["upper_bound"] = r.upper_bound;
  j["upper_bound_per_node"] = r.upper_bound_per_node;
  j["bounds_ok"] = r.bounds_ok;
  j["trace_exact"] = r.trace_exact;
  return j;
}

NetworkReport make_report(const Graph& g, bool resolvent, const ScoreOptions& s) {
  return resolvent ? network_report_resolvent(g, s.alpha, s.krylov, s.exact_below)
                   : network_report_exp(g, s.beta, s.krylov, s.exact_below);
}

struct Stat {
  double mean = std::nan("");
  double std = std::nan("");
  std::size_t count = 0;
};

// Mean and sample standard deviation over the defined values.
Stat stat(const std::vector<std::optional<double>>& xs) {
  std::vector<double> v;
  for (const auto& x : xs)
    if (x && !std::isnan(*x)) v.push_back(*x);
  Stat s;
  s.count = v.size();
  if (v.empty()) return s;
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

Json stat_json(const Stat& s) {
  return Json{{"mean", s.mean}, {"std", s.std}, {"count", s.count}};
}

// Column-wise table with optional mean/std footer rows for replication.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::string> labels;

  void write(std::ostream& os, bool summary) const {
    os << "instance";
    for (const auto& h : header) os << ',' << h;
    os << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << labels[r];
      for (const auto& x : rows[r]) os << ',' << num(x);
      os << '\n';
    }
    if (!summary) return;
    std::vector<Stat> stats;
    for (std::size_t c = 0; c < header.size(); ++c) {
      std::vector<std::optional<double>> col;
      for (const auto& row : rows) col.push_back(row[c]);
      stats.push_back(stat(col));
    }
    os << "mean";
    for (const auto& s : stats) os << ',' << num(s.mean);
    os << "\nstd";
    for (const auto& s : stats) os << ',' << num(s.std);
    os << '\n';
  }

  Json summary_json() const {
    Json j = Json::object();
    for (std::size_t c = 0; c < header.size(); ++c) {
      std::vector<std::optional<double>> col;
      for (const auto& row : rows) col.push_back(row[c]);
      j[header[c]] = stat_json(stat(col));
    }
    return j;
  }
};

std::string instance_label(const Instance& inst, std::size_t index) {
  return inst.seed ? std::to_string(*inst.seed) : std::to_string(index + 1);
}

bool want_json(const Options& o, const char* default_format) {
  const std::string f = o.format.empty() ? default_format : o.format;
  if (f != "csv" && f != "json") throw std::invalid_argument("--format must be csv or json");
  return f == "json";
}

void require_one_source(const Options& o) {
  if (o.input.empty() == o.generate.empty()) {
    throw std::invalid_argument("exactly one of --input or --generate is required");
  }
}

// ---- commands ---------------------------------------------------------------

std::string cmd_generate(const Options& o) {
  if (o.generate.empty()) throw std::invalid_argument("generate needs --generate SPEC");
  if (!o.input.empty()) throw std::invalid_argument("generate takes --generate, not --input");
  const Instance inst = load_one(o, o.seed);
  std::ostringstream dump;
  write_edge_list(dump, inst.graph);
  if (!o.out.empty()) {
    Json side;
    side["spec"] = o.generate;
    side["seed"] = inst.seed ? Json(*inst.seed) : Json(nullptr);
    side["rng"] = std::string(Rng::kAlgorithm);
    side["n"] = inst.graph.num_nodes();
    side["m"] = inst.graph.num_edges();
    std::ofstream js(o.out + ".json");
    if (!js) throw InputError("cannot write '" + o.out + ".json'");
    js << side.dump(2) << '\n';
  }
  return dump.str();
}

std::string cmd_centrality(const Options& o) {
  require_one_source(o);
  if (o.methods.size() != 1) throw std::invalid_argument("centrality takes exactly one --method");
  const Method method = parse_method_or_throw(o.methods.front());
  const ScoreOptions sopts = score_options(o);
  const Instance inst = load_one(o, o.seed);

  ScoreVector scores = compute_scores(inst.graph, method, sopts);
  scores.graph_id = inst.id;
  const Ranking r = rank(scores);
  const std::vector<std::size_t> pos = r.positions();
  const auto offset = static_cast<std::size_t>(inst.base);

  std::ostringstream os;
  if (!want_json(o, "csv")) {
    os << "node_id,score,rank\n";
    for (std::size_t j = 0; j < r.order.size(); ++j) {
      const NodeId v = r.order[j];
      os << v + offset << ',' << num(scores.scores[v]) << ',' << j + 1 << '\n';
    }
    return os.str();
  }
  Json j;
  j["command"] = "centrality";
  j["graph"] = graph_json(inst);
  j["method"] = std::string(method_name(method));
  j["parameter"] = scores.parameter;
  j["report"] = report_json(make_report(inst.graph, is_resolvent(method), sopts));
  Json nodes = Json::array();
  for (std::size_t k = 0; k < r.order.size(); ++k) {
    const NodeId v = r.order[k];
    nodes.push_back({{"node_id", v + offset}, {"score", scores.scores[v]}, {"rank", pos[v] + 1}});
  }
  j["nodes"] = std::move(nodes);
  os << j.dump(2) << '\n';
  return os.str();
}

std::string cmd_compare(const Options& o) {
  require_one_source(o);
  if (o.methods.size() != 2) throw std::invalid_argument("compare takes exactly two --method values");
  const Method ma = parse_method_or_throw(o.methods[0]);
  const Method mb = parse_method_or_throw(o.methods[1]);
  const ScoreOptions sopts = score_options(o);
  CompareOptions copts;
  copts.percents = o.top_percents;
  copts.explicit_k = o.top_k;
  copts.with_curve = o.curve;
  const std::vector<Instance> instances = load_instances(o);

  Table table;
  table.header = {"n", "cc_full", "isim_full"};
  for (double p : o.top_percents) {
    table.header.push_back("cc_top_" + key_of(p));
    table.header.push_back("isim_top_" + key_of(p));
  }
  for (std::size_t k : o.top_k) {
    table.header.push_back("cc_k_" + std::to_string(k));
    table.header.push_back("isim_k_" + std::to_string(k));
  }

  Json runs = Json::array();
  std::vector<std::vector<double>> curves;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    const Ranking a = rank(compute_scores(inst.graph, ma, sopts));
    const Ranking b = rank(compute_scores(inst.graph, mb, sopts));
    const RankComparison c = compare_rankings(a, b, copts);

    std::vector<std::optional<double>> row{static_cast<double>(c.n), c.cc_full, c.isim_full};
    Json run;
    run["graph"] = graph_json(inst);
    run["cc_full"] = c.cc_full;
    run["isim_full"] = c.isim_full;
    Json cc_top = Json::object(), isim_top = Json::object();
    for (double p : o.top_percents) {
      const auto& cc = c.cc_top.at(p);
      row.push_back(cc);
      row.push_back(c.isim_top.at(p));
      cc_top[key_of(p)] = cc ? Json(*cc) : Json(nullptr);
      isim_top[key_of(p)] = c.isim_top.at(p);
    }
    Json cc_k = Json::object(), isim_k = Json::object();
    for (std::size_t k : o.top_k) {
      const auto& cc = c.cc_at_k.at(k);
      row.push_back(cc);
      row.push_back(c.isim_at_k.at(k));
      cc_k[std::to_string(k)] = cc ? Json(*cc) : Json(nullptr);
      isim_k[std::to_string(k)] = c.isim_at_k.at(k);
    }
    run["cc_top"] = std::move(cc_top);
    run["isim_top"] = std::move(isim_top);
    run["cc_at_k"] = std::move(cc_k);
    run["isim_at_k"] = std::move(isim_k);
    if (o.curve) {
      run["isim_curve"] = c.isim_curve;
      curves.push_back(c.isim_curve);
    }
    runs.push_back(std::move(run));
    table.rows.push_back(std::move(row));
    table.labels.push_back(instance_label(inst, i));
  }

  std::ostringstream os;
  if (want_json(o, "csv")) {
    Json j;
    j["command"] = "compare";
    j["methods"] = {std::string(method_name(ma)), std::string(method_name(mb))};
    j["instances"] = std::move(runs);
    j["summary"] = table.summary_json();
    os << j.dump(2) << '\n';
  } else if (o.curve) {
    // Curve mode: isim_k against k, averaged over instances of equal size.
    os << "k,isim_k\n";
    const std::size_t len = curves.front().size();
    for (const auto& c : curves) {
      if (c.size() != len) throw std::invalid_argument("--curve averaging needs instances of equal size");
    }
    for (std::size_t k = 0; k < len; ++k) {
      double sum = 0.0;
      for (const auto& c : curves) sum += c[k];
      os << k + 1 << ',' << num(sum / static_cast<double>(curves.size())) << '\n';
    }
  } else {
    table.write(os, instances.size() > 1);
  }
  return os.str();
}

std::string cmd_report(const Options& o) {
  require_one_source(o);
  if (o.function != "exp" && o.function != "resolvent") {
    throw std::invalid_argument("--function must be exp or resolvent");
  }
  const bool resolvent = o.function == "resolvent";
  const ScoreOptions sopts = score_options(o);
  const std::vector<Instance> instances = load_instances(o);

  Table table;
  table.header = {"n", "m", "parameter", "lambda1", "lambda2", "C", "EE",
                  "C_over_n", "C_over_m", "EE_over_n", "upper_bound_per_node", "bounds_ok"};
  Json runs = Json::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const NetworkReport r = make_report(instances[i].graph, resolvent, sopts);
    table.rows.push_back({static_cast<double>(r.n), static_cast<double>(r.m), r.parameter, r.lambda1,
                          r.lambda2, r.C, r.EE, r.C_over_n, r.C_over_m, r.EE_over_n,
                          r.upper_bound_per_node, r.bounds_ok ? 1.0 : 0.0});
    table.labels.push_back(instance_label(instances[i], i));
    runs.push_back({{"graph", graph_json(instances[i])}, {"report", report_json(r)}});
  }
  std::ostringstream os;
  if (want_json(o, "json")) {
    Json j;
    j["command"] = "report";
    j["function"] = o.function;
    j["instances"] = std::move(runs);
    j["summary"] = table.summary_json();
    os << j.dump(2) << '\n';
  } else {
    table.write(os, instances.size() > 1);
  }
  return os.str();
}

std::string cmd_bench(const Options& o) {
  require_one_source(o);
  if (o.methods.size() != 1) throw std::invalid_argument("bench takes exactly one --method");
  if (o.bench_reps < 1) throw std::invalid_argument("--reps must be at least 1");
  const Method method = parse_method_or_throw(o.methods.front());
  const ScoreOptions sopts = score_options(o);

  Table table;
  table.header = {"load_s", "lambda1_s", "kernel_s", "total_s"};
  Json reps = Json::array();
  Json graph;
  for (std::size_t r = 0; r < o.bench_reps; ++r) {
    const auto t0 = Clock::now();
    const Instance inst = load_one(o, o.seed);
    const double load = seconds_since(t0);
    const auto t1 = Clock::now();
    const SpectralEstimate est = dominant_eigs(inst.graph);
    const double lambda1 = seconds_since(t1);
    ScoreOptions fixed = sopts;
    // The kernel phase reuses the lambda1 just measured.
    if (is_resolvent(method) && sopts.alpha.is_fraction()) {
      fixed.alpha = AlphaChoice::literal(sopts.alpha.resolve(est.lambda1));
    }
    const auto t2 = Clock::now();
    const ScoreVector s = compute_scores(inst.graph, method, fixed);
    const double kernel = seconds_since(t2);
    const double total = seconds_since(t0);
    if (s.scores.size() != inst.graph.num_nodes()) throw std::logic_error("score length mismatch");
    graph = graph_json(inst);
    table.rows.push_back({load, lambda1, kernel, total});
    table.labels.push_back(std::to_string(r + 1));
    reps.push_back({{"rep", r + 1}, {"load", load}, {"lambda1", lambda1}, {"kernel", kernel}, {"total", total}});
  }
  std::ostringstream os;
  if (want_json(o, "json")) {
    Json j;
    j["command"] = "bench";
    j["graph"] = std::move(graph);
    j["method"] = std::string(method_name(method));
    j["reps"] = std::move(reps);
    os << j.dump(2) << '\n';
  } else {
    table.write(os, false);
  }
  return os.str();
}

// ---- option wiring ----------------------------------------------------------

void add_source(CLI::App* app, Options& o) {
  auto* in = app->add_option("--input", o.input, "Matrix Market or edge-list file");
  auto* gen = app->add_option("--generate", o.generate,
                              "generator spec, e.g. pref:n=1000,d=2 | smallw:n=5000,d=1,p=0.1 | ring:n=5000");
  in->excludes(gen);
  app->add_option("--base", o.base, "index base of an edge-list input (0 or 1)")->capture_default_str();
}

void add_replication(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "first seed for random generators")->capture_default_str();
  app->add_option("--seeds", o.seeds, "explicit seed list, comma separated")->delimiter(',');
  app->add_option("--reps", o.reps, "number of generated instances (seed, seed+1, ...)")->capture_default_str();
}

void add_numerics(CLI::App* app, Options& o) {
  app->add_option("--beta", o.beta, "inverse temperature for exp methods")->capture_default_str();
  app->add_option("--alpha-fraction", o.alpha_fraction, "resolvent alpha as a fraction of 1/lambda1")
      ->capture_default_str();
  app->add_option("--alpha", o.alpha, "literal resolvent alpha (overrides --alpha-fraction)");
  app->add_option("--tol", o.tol, "Krylov / CG relative tolerance")->capture_default_str();
  app->add_option("--restart", o.restart, "Krylov restart length")->capture_default_str();
  app->add_option("--max-restarts", o.max_restarts, "Krylov restart cycles")->capture_default_str();
  app->add_option("--quad-steps", o.quad_steps, "Lanczos steps per node for quadrature")->capture_default_str();
  app->add_option("--exact-below", o.exact_below, "dense diagonal when n <= this")->capture_default_str();
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "csv or json");
  app->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Communicability centralities on sparse graphs", "netcomm"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "write a generated graph as a canonical edge list");
  gen->add_option("--generate", o.generate, "generator spec")->required();
  gen->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  gen->add_option("--out", o.out, "edge-list path; a .json sidecar is written next to it");

  auto* cen = app.add_subcommand("centrality", "score and rank every node");
  add_source(cen, o);
  cen->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  cen->add_option("--method", o.methods, "exp-total | exp-subgraph | res-total | res-subgraph")->required();
  add_numerics(cen, o);
  add_output(cen, o);

  auto* cmp = app.add_subcommand("compare", "compare the rankings of two methods");
  add_source(cmp, o);
  add_replication(cmp, o);
  cmp->add_option("--method", o.methods, "two methods, repeated or comma separated")->required()->delimiter(',');
  add_numerics(cmp, o);
  cmp->add_option("--top-percents", o.top_percents, "top-p% cutoffs")->delimiter(',')->capture_default_str();
  cmp->add_option("--top-k", o.top_k, "explicit top-k cutoffs")->delimiter(',');
  cmp->add_flag("--curve", o.curve, "emit isim_k for every k");
  add_output(cmp, o);

  auto* rep = app.add_subcommand("report", "network communicability C, EE and bounds");
  add_source(rep, o);
  add_replication(rep, o);
  rep->add_option("--function", o.function, "exp or resolvent")->capture_default_str();
  add_numerics(rep, o);
  add_output(rep, o);

  auto* bench = app.add_subcommand("bench", "time the load, lambda1 and kernel phases");
  add_source(bench, o);
  bench->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  bench->add_option("--reps", o.bench_reps, "repetitions")->capture_default_str();
  bench->add_option("--method", o.methods, "method to time")->required();
  add_numerics(bench, o);
  add_output(bench, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  for (auto* sub : {cmp, rep}) {
    o.reps_given = o.reps_given || sub->count("--reps") > 0;
    o.seeds_given = o.seeds_given || sub->count("--seeds") > 0;
  }

  try {
    std::string result;
    if (gen->parsed()) result = cmd_generate(o);
    else if (cen->parsed()) result = cmd_centrality(o);
    else if (cmp->parsed()) result = cmd_compare(o);
    else if (rep->parsed()) result = cmd_report(o);
    else result = cmd_bench(o);

    if (o.out.empty()) {
      out << result;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw InputError("cannot write '" + o.out + "'");
      f << result;
    }
    return kOk;
  } catch (const ConvergenceError& e) {
    err << "error: not converged: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace netcomm::cli
