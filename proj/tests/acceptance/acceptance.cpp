// Acceptance suite: one PASS/FAIL line per criterion, with wall time.
// Exit status is the number of failed criteria that are expected to pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netcomm/centrality.hpp"
#include "netcomm/compare.hpp"
#include "netcomm/generators.hpp"
#include "netcomm/graph_io.hpp"
#include "netcomm/krylov.hpp"
#include "netcomm/reference.hpp"

using namespace netcomm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> misses;

  // Records a sub-check; the criterion passes only if all of them do.
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      misses.push_back(what);
    }
  }
};

struct Criterion {
  std::string id;
  std::string name;
  double limit_s;
  std::function<void(Outcome&)> run;
  // Set when the target cannot be met by any implementation; reported but
  // not counted in the exit status.
  std::string unattainable;
};

const KrylovConfig kCfg{};

Graph karate() {
  std::ifstream in(std::string(NETCOMM_DATA_DIR) + "/karate.mtx");
  return load_matrix_market(in);
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }
bool within_rel(double x, double target, double rel) { return std::abs(x - target) <= rel * std::abs(target); }
bool within_abs(double x, double target, double tol) { return std::abs(x - target) <= tol; }

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

Vector ones(const Graph& g) { return Vector::Ones(static_cast<Eigen::Index>(g.num_nodes())); }

double rel_inf(const Vector& x, const Vector& ref) {
  return (x - ref).lpNorm<Eigen::Infinity>() / std::max(ref.lpNorm<Eigen::Infinity>(), 1e-300);
}

double rel_max(const Eigen::MatrixXd& x, const Eigen::MatrixXd& ref) {
  return (x - ref).cwiseAbs().maxCoeff() / std::max(ref.cwiseAbs().maxCoeff(), 1e-300);
}

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

struct Named {
  std::string name;
  Graph graph;
};

std::vector<Named> reference_graphs() {
  std::vector<Named> out;
  for (std::size_t n : {2u, 5u, 20u, 100u}) {
    out.push_back({"complete" + std::to_string(n), generate_reference(ReferenceKind::complete, n)});
  }
  for (std::size_t n : {3u, 12u, 200u}) {
    out.push_back({"star" + std::to_string(n), generate_reference(ReferenceKind::star, n)});
    out.push_back({"path" + std::to_string(n), generate_reference(ReferenceKind::path, n)});
  }
  for (std::size_t n : {3u, 11u, 500u}) out.push_back({"cycle" + std::to_string(n), generate_reference(ReferenceKind::cycle, n)});
  out.push_back({"ring100x3", generate_reference(ReferenceKind::ring_lattice, 100, 3)});
  out.push_back({"ring1000x1", generate_reference(ReferenceKind::ring_lattice, 1000, 1)});
  out.push_back({"empty7", generate_reference(ReferenceKind::empty, 7)});
  return out;
}

// ---- criteria -----------------------------------------------------------------

void karate_golden(Outcome& o) {
  const Graph g = karate();
  const SpectralEstimate est = dominant_eigs(g);
  o.expect(round3(est.lambda1) == 6.726, "lambda1");
  o.expect(round3(est.lambda2) == 4.977, "lambda2");
  const NetworkReport r = network_report_exp(g, 1.0, kCfg);
  o.expect(within_rel(r.EE_over_n, 30.62, 0.005), "EE/n");
  o.expect(within_rel(r.C_over_n, 608.79, 0.005), "C/n");
  o.expect(within_rel(r.upper_bound_per_node, 833.81, 0.005), "e^lambda1");
  const Ranking sc = rank(subgraph_centrality(g, 1.0, kCfg));
  const Ranking tc = rank(total_communicability(g, 1.0, kCfg));
  // node ids in the file are 1-based: 34 -> 33, 1 -> 0
  o.expect(sc.order[0] == 33 && sc.order[1] == 0, "subgraph top two");
  o.expect(tc.order[0] == 33 && tc.order[1] == 0, "total top two");
  o.detail << "lambda1=" << fmt(est.lambda1, 7) << " lambda2=" << fmt(est.lambda2, 7)
           << " EE/n=" << fmt(r.EE_over_n, 6) << " C/n=" << fmt(r.C_over_n, 6)
           << " e^lambda1=" << fmt(r.upper_bound_per_node, 6) << " top=(" << sc.order[0] + 1 << ","
           << sc.order[1] + 1 << ")/(" << tc.order[0] + 1 << "," << tc.order[1] + 1 << ")";
}

void karate_metrics(Outcome& o) {
  const Graph g = karate();
  CompareOptions opts;
  opts.explicit_k = {2};
  const RankComparison c = compare_rankings(rank(subgraph_centrality(g, 1.0, kCfg)),
                                            rank(total_communicability(g, 1.0, kCfg)), opts);
  o.expect(within_abs(c.cc_full, 0.420, 0.01), "cc_full");
  o.expect(within_abs(c.isim_full, 0.044, 0.005), "isim_full");
  o.expect(within_abs(c.isim_top.at(10.0), 0.111, 0.01), "isim_10%");
  o.expect(c.isim_at_k.at(2) == 0.0, "isim_k=2");
  o.detail << "cc=" << fmt(c.cc_full) << " isim=" << fmt(c.isim_full) << " isim_10%=" << fmt(c.isim_top.at(10.0))
           << " isim_k2=" << fmt(c.isim_at_k.at(2));
}

void karate_resolvent(Outcome& o) {
  const Graph g = karate();
  const AlphaChoice alpha = AlphaChoice::fraction(0.85);
  const NetworkReport r = network_report_resolvent(g, alpha, kCfg);
  o.expect(within_rel(r.EE_over_n, 1.21, 0.01), "EE_r/n");
  o.expect(within_rel(r.C_over_n, 5.13, 0.01), "C_r/n");
  CompareOptions opts;
  opts.explicit_k = {2};
  const RankComparison c = compare_rankings(rank(katz_subgraph(g, alpha, kCfg)), rank(katz_total(g, alpha, kCfg)), opts);
  o.expect(within_abs(c.cc_full, 0.589, 0.02), "cc_full");
  o.expect(c.isim_at_k.at(2) == 0.0, "isim_k=2");
  o.detail << "EE_r/n=" << fmt(r.EE_over_n, 6) << " C_r/n=" << fmt(r.C_over_n, 6) << " cc=" << fmt(c.cc_full)
           << " isim_k2=" << fmt(c.isim_at_k.at(2));
}

void ring_lattice(Outcome& o) {
  const Graph g = generate_reference(ReferenceKind::ring_lattice, 5000, 1);
  const double c_over_n = sum(total_communicability(g, 1.0, kCfg).scores) / 5000.0;
  o.expect(within_abs(c_over_n, std::exp(2.0), 1e-6), "C/n = e^2");
  o.detail << "C/n=" << fmt(c_over_n, 12) << " |C/n - e^2|=" << fmt(std::abs(c_over_n - std::exp(2.0)), 3);
}

void small_world_trend(Outcome& o) {
  const double ps[] = {0.0, 0.1, 0.2, 0.3};
  const double targets[] = {7.4, 9.7, 12.4, 15.8};
  std::vector<double> means;
  for (int k = 0; k < 4; ++k) {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = generate_smallw(5000, 1, ps[k], seed);
      total += sum(total_communicability(g, 1.0, kCfg).scores) / 5000.0;
    }
    means.push_back(total / 20.0);
    o.expect(within_rel(means.back(), targets[k], 0.10), "p=" + fmt(ps[k]));
    if (k > 0) o.expect(means[k] > means[k - 1], "increasing at p=" + fmt(ps[k]));
    o.detail << (k ? " " : "") << "p=" << fmt(ps[k]) << ":" << fmt(means.back());
  }
}

void pref_trend(Outcome& o) {
  const std::size_t ds[] = {1, 2, 3, 4, 5, 6, 7, 8, 10};
  std::vector<double> cc, isim;
  for (std::size_t d : ds) {
    double cc_sum = 0.0, isim_sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = generate_pref(1000, d, seed);
      const Ranking a = rank(subgraph_centrality(g, 1.0, kCfg));
      const Ranking b = rank(total_communicability(g, 1.0, kCfg));
      CompareOptions opts;
      opts.percents = {};
      const RankComparison c = compare_rankings(a, b, opts);
      cc_sum += c.cc_full;
      isim_sum += c.isim_full;
    }
    cc.push_back(cc_sum / 20.0);
    isim.push_back(isim_sum / 20.0);
    o.detail << (d == 1 ? "" : " ") << "d=" << d << ":" << fmt(cc.back(), 3) << "/" << fmt(isim.back(), 2);
  }
  for (std::size_t k = 1; k < cc.size(); ++k) {
    const bool both_one = round3(cc[k]) == 1.0 && round3(cc[k - 1]) == 1.0;
    o.expect(cc[k] > cc[k - 1] || both_one, "cc increasing at d=" + std::to_string(ds[k]));
  }
  o.expect(cc[4] > 0.9, "cc > 0.9 at d=5");
  for (std::size_t k = 7; k < cc.size(); ++k) {
    o.expect(round3(cc[k]) == 1.0, "cc = 1.000 at d=" + std::to_string(ds[k]));
    o.expect(round3(isim[k]) == 0.0, "isim = 0 at d=" + std::to_string(ds[k]));
  }
  o.detail << " (cc/isim)";
}

void communicability_bounds(Outcome& o) {
  std::vector<Named> corpus = reference_graphs();
  for (std::uint64_t s = 1; s <= 20; ++s) {
    corpus.push_back({"pref" + std::to_string(s), generate_pref(1000, 1 + (s - 1) % 5, s)});
    corpus.push_back({"smallw" + std::to_string(s), generate_smallw(1000, 1 + (s - 1) % 2, 0.1 * static_cast<double>(1 + (s - 1) % 3), s)});
  }
  corpus.push_back({"karate", karate()});
  const std::filesystem::path minnesota = std::filesystem::path(NETCOMM_DATA_DIR) / "minnesota.mtx";
  const bool have_minnesota = std::filesystem::exists(minnesota);
  if (have_minnesota) corpus.push_back({"minnesota", load_graph_file(minnesota).graph});

  std::size_t checked = 0;
  for (const auto& [name, g] : corpus) {
    const NetworkReport e = network_report_exp(g, 1.0, kCfg);
    const NetworkReport r = network_report_resolvent(g, AlphaChoice::fraction(0.85), kCfg);
    // independent re-check of the 1e-8 slack rather than trusting bounds_ok
    auto holds = [](const NetworkReport& x) {
      const double slack = 1e-8 * std::abs(x.C);
      return x.EE <= x.C + slack && x.C <= x.upper_bound + slack && x.bounds_ok;
    };
    o.expect(holds(e), name + " exp");
    o.expect(holds(r), name + " resolvent");
    checked += 2;
  }
  o.detail << checked << " bound checks on " << corpus.size() << " graphs"
           << (have_minnesota ? " (Minnesota included)" : " (Minnesota not present)");
}

// Beyond this lambda1 the 60-term Taylor tail lambda1^61/61! e^-lambda1 is
// above 1e-10 and the exponential series check moves to #8b.
constexpr double kSeriesLambdaLimit = 25.0;

std::vector<Named> oracle_corpus() {
  std::vector<Named> out = reference_graphs();
  out.erase(std::remove_if(out.begin(), out.end(), [](const Named& x) { return x.graph.num_nodes() > 500; }), out.end());
  out.push_back({"karate", karate()});
  for (std::uint64_t s : {3u, 4u, 5u}) {
    out.push_back({"pref300x2#" + std::to_string(s), generate_pref(300, 2, s)});
    out.push_back({"smallw400#" + std::to_string(s), generate_smallw(400, 2, 0.2, s)});
  }
  out.push_back({"pref80x3", generate_pref(80, 3, 9)});
  out.push_back({"smallw90", generate_smallw(90, 1, 0.3, 2)});
  out.push_back({"pref500x3", generate_pref(500, 3, 1)});
  return out;
}

void oracle_equivalence(Outcome& o) {
  double worst_expm = 0.0, worst_quad = 0.0, worst_cg = 0.0, worst_exp_series = 0.0, worst_res_series = 0.0;
  std::size_t graphs = 0;
  for (const auto& [name, g] : oracle_corpus()) {
    const std::size_t n = g.num_nodes();
    const DenseSpectrum spec(g);
    const double lambda1 = spec.eigenvalues().maxCoeff();
    const MatrixFunction ex = MatrixFunction::exponential(1.0);
    ++graphs;

    const double e1 = rel_inf(expm_multiply(g, ones(g), 1.0, kCfg), spec.apply(ex, ones(g)));
    worst_expm = std::max(worst_expm, e1);
    o.expect(e1 <= 1e-8, name + " expm_multiply");

    if (lambda1 > 0.0) {
      const double alpha = 0.85 / lambda1;
      const MatrixFunction res = MatrixFunction::resolvent(alpha);
      const double e2 = rel_inf(cg_solve_resolvent(g, alpha, ones(g), 1e-12), spec.apply(res, ones(g)));
      worst_cg = std::max(worst_cg, e2);
      o.expect(e2 <= 1e-8, name + " cg");
    }

    // k >= n Lanczos steps make the Gauss rule exact
    if (n <= 100) {
      for (const MatrixFunction& f : {ex, MatrixFunction::resolvent(lambda1 > 0 ? 0.85 / lambda1 : 0.5)}) {
        const Vector diag = spec.diagonal(f);
        for (NodeId i = 0; i < n; ++i) {
          const double q = quadrature_diag(g, i, f, n);
          const double err = std::abs(q - diag[i]) / std::abs(diag[i]);
          worst_quad = std::max(worst_quad, err);
          if (err > 1e-10) o.expect(false, name + " quadrature node " + std::to_string(i));
        }
      }
      if (lambda1 <= kSeriesLambdaLimit) {
        const double e3 = rel_max(reference::truncated_exp_series(g, 60), spec.function(ex));
        worst_exp_series = std::max(worst_exp_series, e3);
        o.expect(e3 <= 1e-10, name + " exp series");
      }
      if (lambda1 > 0.0) {
        for (double frac : {0.1, 0.3, 0.5, 0.7}) {
          const double alpha = frac / lambda1;
          const double e4 = rel_max(reference::truncated_resolvent_series(g, alpha, 60),
                                    spec.function(MatrixFunction::resolvent(alpha)));
          worst_res_series = std::max(worst_res_series, e4);
          o.expect(e4 <= 1e-8, name + " resolvent series " + fmt(frac));
        }
      }
    }
  }
  o.detail << graphs << " graphs; worst rel err: expm " << fmt(worst_expm, 2) << ", cg " << fmt(worst_cg, 2)
           << ", quadrature " << fmt(worst_quad, 2) << ", exp series " << fmt(worst_exp_series, 2)
           << ", resolvent series " << fmt(worst_res_series, 2);
}

// Series checks outside the reach of 60 terms: the resolvent at
// alpha lambda1 = 0.9 (tail 0.9^61 of the leading term) and the exponential
// on graphs with large lambda1 (Taylor terms still growing at k = 60).
void series_out_of_range(Outcome& o) {
  double worst_res = 0.0, worst_exp = 0.0;
  for (const auto& [name, g] : oracle_corpus()) {
    if (g.num_nodes() > 100) continue;
    const DenseSpectrum spec(g);
    const double lambda1 = spec.eigenvalues().maxCoeff();
    if (lambda1 <= 0.0) continue;
    const double alpha = 0.9 / lambda1;
    const double err = rel_max(reference::truncated_resolvent_series(g, alpha, 60),
                               spec.function(MatrixFunction::resolvent(alpha)));
    worst_res = std::max(worst_res, err);
    o.expect(err <= 1e-8, name + " resolvent 0.9");
    if (lambda1 > kSeriesLambdaLimit) {
      const double e = rel_max(reference::truncated_exp_series(g, 60), spec.function(MatrixFunction::exponential(1.0)));
      worst_exp = std::max(worst_exp, e);
      o.expect(e <= 1e-10, name + " exp (lambda1=" + fmt(lambda1) + ")");
    }
  }
  o.detail << "resolvent worst rel err " << fmt(worst_res, 3) << " vs 1e-8 (0.9^61 = " << fmt(std::pow(0.9, 61), 3)
           << "); exp worst rel err " << fmt(worst_exp, 3) << " vs 1e-10";
}

Ranking from_order(std::vector<NodeId> order) {
  Ranking r;
  r.order = std::move(order);
  return r;
}

double isim_by_sets(const std::vector<NodeId>& x, const std::vector<NodeId>& y, std::size_t k) {
  double total = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::set<NodeId> xs(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
    const std::set<NodeId> ys(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<NodeId> d;
    std::set_symmetric_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(d));
    total += static_cast<double>(d.size()) / (2.0 * static_cast<double>(i));
  }
  return total / static_cast<double>(k);
}

void metric_suite(Outcome& o) {
  const Ranking abc = from_order({0, 1, 2}), bac = from_order({1, 0, 2});
  const Ranking six = from_order({0, 1, 2, 3, 4, 5}), shifted = from_order({3, 4, 5, 0, 1, 2});
  o.expect(intersection_distance(six, six, 6) == 0.0, "identical -> 0");
  o.expect(within_abs(intersection_distance(six, shifted, 3), 1.0, 1e-15), "disjoint -> 1");
  o.expect(within_abs(intersection_distance(abc, bac, 3), 1.0 / 3.0, 1e-15), "hand case 1/3");
  o.expect(within_abs(rank_correlation(six, six), 1.0, 1e-15), "cc identical");
  o.expect(within_abs(rank_correlation(six, from_order({5, 4, 3, 2, 1, 0})), -1.0, 1e-15), "cc reversed");
  o.expect(within_abs(rank_correlation(from_order({0, 1, 2, 3}), from_order({0, 1, 3, 2})), 0.8, 1e-15), "cc 0.8");

  // isim is invariant under relabelling the nodes, so fixing x as the
  // identity and running y over all n! permutations covers every pair.
  std::size_t pairs = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<NodeId> x(n);
    std::iota(x.begin(), x.end(), NodeId{0});
    std::vector<NodeId> y = x;
    const Ranking rx = from_order(x);
    do {
      const Ranking ry = from_order(y);
      const std::vector<double> fwd = intersection_curve(rx, ry), bwd = intersection_curve(ry, rx);
      for (std::size_t k = 1; k <= n; ++k) {
        if (fwd[k - 1] != isim_by_sets(x, y, k) || bwd[k - 1] != fwd[k - 1]) ++mismatches;
      }
      if (n >= 2 && rank_correlation(rx, ry) != rank_correlation(ry, rx)) ++mismatches;
      ++pairs;
    } while (std::next_permutation(y.begin(), y.end()));
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " brute-force mismatches");
  o.detail << "identities ok; " << pairs << " permutations (n <= 8) checked exactly, " << mismatches << " mismatches";
}

void large_graph(Outcome& o) {
  const auto t0 = Clock::now();
  const Graph g = generate_pref(200000, 2, 1);
  const double gen = std::chrono::duration<double>(Clock::now() - t0).count();
  const auto t1 = Clock::now();
  const ScoreVector s = total_communicability(g, 1.0, kCfg);
  const double kernel = std::chrono::duration<double>(Clock::now() - t1).count();
  const auto top = std::max_element(s.scores.begin(), s.scores.end()) - s.scores.begin();
  o.expect(s.scores.size() == 200000, "score length");
  o.detail << "n=" << g.num_nodes() << " m=" << g.num_edges() << " generate " << fmt(gen, 3) << " s, exp-total "
           << fmt(kernel, 3) << " s, top node " << top;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {"1", "Karate golden values", 5, karate_golden, {}},
      {"2", "Karate comparison metrics", 5, karate_metrics, {}},
      {"3", "Karate resolvent", 5, karate_resolvent, {}},
      {"4", "Ring lattice n=5000", 30, ring_lattice, {}},
      {"5", "Small-world trend", 600, small_world_trend, {}},
      {"6", "Preferential-attachment convergence", 900, pref_trend, {}},
      {"7", "Communicability bounds on corpus", 600, communicability_bounds, {}},
      {"8", "Oracle equivalence (n <= 500)", 600, oracle_equivalence, {}},
      {"8b", "Truncated series beyond the reach of k_max = 60", 60, series_out_of_range,
       "the 60-term tail alone exceeds the tolerance"},
      {"9", "Metric unit suite", 120, metric_suite, {}},
      {"10", "Large graph pref(200000, 2) exp-total", 120, large_graph, {}},
  };

  // Optional filter: criterion ids on the command line.
  std::set<std::string> only(argv + 1, argv + argc);
  int failures = 0, ran = 0, passed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    ++ran;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    o.expect(secs < c.limit_s, "runtime over " + fmt(c.limit_s) + " s");
    const char* tag = o.pass ? "PASS" : (c.unattainable.empty() ? "FAIL" : "FAIL (unattainable)");
    std::printf("%-20s #%-3s %-52s %8.2f s / %g s  %s\n", tag, c.id.c_str(), c.name.c_str(), secs, c.limit_s,
                o.detail.str().c_str());
    if (!o.misses.empty()) {
      std::string list;
      for (std::size_t i = 0; i < o.misses.size() && i < 12; ++i) list += (i ? ", " : "") + o.misses[i];
      if (o.misses.size() > 12) list += ", ... (" + std::to_string(o.misses.size()) + " total)";
      std::printf("%26s missed: %s\n", "", list.c_str());
    }
    if (!o.pass && !c.unattainable.empty()) std::printf("%26s reason: %s\n", "", c.unattainable.c_str());
    std::fflush(stdout);
    if (o.pass) ++passed;
    else if (c.unattainable.empty()) ++failures;
  }
  std::printf("%d/%d criteria passed, %d unexpected failures\n", passed, ran, failures);
  return failures;
}
