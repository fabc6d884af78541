#include <cmath>
#include <limits>
#include <stdexcept>

#include "netcomm/centrality.hpp"

namespace netcomm {
namespace {

double ordered_sum(const Vector& v) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v[i];
  return s;
}

struct TraceResult {
  double value;
  bool exact;
};

TraceResult trace_of(const Graph& g, const MatrixFunction& f, const KrylovConfig& cfg,
                     std::size_t exact_below) {
  if (g.num_nodes() <= exact_below) {
    return {ordered_sum(DenseSpectrum(g, exact_below).diagonal(f)), true};
  }
  return {ordered_sum(quadrature_diagonal(g, f, cfg)), false};
}

void finish(NetworkReport& r) {
  const double n = static_cast<double>(r.n);
  r.C_over_n = r.C / n;
  r.EE_over_n = r.EE / n;
  r.C_over_m = r.m > 0 ? r.C / static_cast<double>(r.m) : std::numeric_limits<double>::quiet_NaN();
  r.upper_bound = n * r.upper_bound_per_node;
  const double slack = 1e-8 * std::abs(r.C);
  r.bounds_ok = r.EE - r.C <= slack && r.C - r.upper_bound <= slack;
}

}  // namespace

NetworkReport network_report_exp(const Graph& g, double beta, const KrylovConfig& cfg,
                                 std::size_t exact_below) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  cfg.validate();
  const auto f = MatrixFunction::exponential(beta);
  const SpectralEstimate spec = dominant_eigs(g);

  NetworkReport r;
  r.kind = MatrixFunction::Kind::exponential;
  r.parameter = beta;
  r.n = g.num_nodes();
  r.m = g.num_edges();
  // C = 1^T (f(A) 1): only the row-sum vector is needed.
  r.C = ordered_sum(expm_multiply(g, Vector::Ones(static_cast<Eigen::Index>(r.n)), beta, cfg));
  const TraceResult tr = trace_of(g, f, cfg, exact_below);
  r.EE = tr.value;
  r.trace_exact = tr.exact;
  r.lambda1 = spec.lambda1;
  r.lambda2 = spec.lambda2;
  r.upper_bound_per_node = std::exp(beta * spec.lambda1);
  finish(r);
  return r;
}

NetworkReport network_report_resolvent(const Graph& g, const AlphaChoice& alpha,
                                       const KrylovConfig& cfg, std::size_t exact_below) {
  cfg.validate();
  const SpectralEstimate spec = dominant_eigs(g);
  const double a = alpha.resolve(spec.lambda1);
  const auto f = MatrixFunction::resolvent(a);

  NetworkReport r;
  r.kind = MatrixFunction::Kind::resolvent;
  r.parameter = a;
  r.n = g.num_nodes();
  r.m = g.num_edges();
  r.C = ordered_sum(
      cg_solve_resolvent(g, a, Vector::Ones(static_cast<Eigen::Index>(r.n)), cfg.tolerance));
  const TraceResult tr = trace_of(g, f, cfg, exact_below);
  r.EE = tr.value;
  r.trace_exact = tr.exact;
  r.lambda1 = spec.lambda1;
  r.lambda2 = spec.lambda2;
  r.upper_bound_per_node = 1.0 / (1.0 - a * spec.lambda1);
  finish(r);
  return r;
}

double log_normalized_C(double C, std::size_t n) {
  if (n < 2) throw std::domain_error("normalized communicability needs n >= 2");
  const double nd = static_cast<double>(n);
  if (!(C > nd)) {
    throw std::domain_error("normalized communicability undefined: C(A) <= n (no walks of positive length)");
  }
  // log(n^2 e^{n-1} - 2n) = 2 log n + (n - 1) + log1p(-2 e^{-(n-1)} / n)
  const double log_denominator =
      2.0 * std::log(nd) + (nd - 1.0) + std::log1p(-2.0 * std::exp(-(nd - 1.0)) / nd);
  return std::log(C - nd) - log_denominator;
}

double log_normalized_C(const NetworkReport& report) { return log_normalized_C(report.C, report.n); }

double direct_normalized_C(double C, std::size_t n) {
  const double nd = static_cast<double>(n);
  return (C - nd) / (nd * nd * std::exp(nd - 1.0) - 2.0 * nd);
}

}  // namespace netcomm
