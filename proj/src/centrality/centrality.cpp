#include "netcomm/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace netcomm {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::exp_subgraph: return "exp-subgraph";
    case Method::exp_total: return "exp-total";
    case Method::res_subgraph: return "res-subgraph";
    case Method::res_total: return "res-total";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::exp_subgraph, Method::exp_total, Method::res_subgraph, Method::res_total}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool is_resolvent(Method m) { return m == Method::res_subgraph || m == Method::res_total; }

AlphaChoice AlphaChoice::fraction(double f) {
  if (!(f > 0.0 && f < 1.0)) {
    std::ostringstream os;
    os << "alpha fraction must lie in (0, 1), got " << f;
    throw std::invalid_argument(os.str());
  }
  return {true, f};
}

AlphaChoice AlphaChoice::literal(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream os;
    os << "alpha must satisfy 0 < alpha < 1/lambda1, got " << alpha;
    throw std::invalid_argument(os.str());
  }
  return {false, alpha};
}

double AlphaChoice::resolve(double lambda1) const {
  // Edgeless graph: A = 0 and every alpha gives the identity. The constraint
  // is vacuous, so the fraction itself is recorded as alpha.
  if (lambda1 <= 0.0) return value_;
  if (is_fraction_) return value_ / lambda1;
  if (value_ * lambda1 >= 1.0 - 1e-10) {
    std::ostringstream os;
    os.precision(10);
    os << "alpha = " << value_ << " violates 0 < alpha < 1/lambda1 = " << 1.0 / lambda1;
    throw std::invalid_argument(os.str());
  }
  return value_;
}

namespace {

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be a positive finite number");
  }
}

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

Vector diagonal_of(const Graph& g, const MatrixFunction& f, const KrylovConfig& cfg,
                   std::size_t exact_below) {
  if (g.num_nodes() <= exact_below) return DenseSpectrum(g, exact_below).diagonal(f);
  return quadrature_diagonal(g, f, cfg);
}

}  // namespace

ScoreVector total_communicability(const Graph& g, double beta, const KrylovConfig& cfg) {
  require_beta(beta);
  const Vector ones = Vector::Ones(static_cast<Eigen::Index>(g.num_nodes()));
  return {to_std(expm_multiply(g, ones, beta, cfg)), Method::exp_total, beta, {}};
}

ScoreVector subgraph_centrality(const Graph& g, double beta, const KrylovConfig& cfg,
                                std::size_t exact_below) {
  require_beta(beta);
  cfg.validate();
  const Vector d = diagonal_of(g, MatrixFunction::exponential(beta), cfg, exact_below);
  return {to_std(d), Method::exp_subgraph, beta, {}};
}

ScoreVector katz_total(const Graph& g, const AlphaChoice& alpha, const KrylovConfig& cfg) {
  cfg.validate();
  const double a = alpha.resolve(dominant_eigs(g).lambda1);
  const Vector ones = Vector::Ones(static_cast<Eigen::Index>(g.num_nodes()));
  return {to_std(cg_solve_resolvent(g, a, ones, cfg.tolerance)), Method::res_total, a, {}};
}

ScoreVector katz_subgraph(const Graph& g, const AlphaChoice& alpha, const KrylovConfig& cfg,
                          std::size_t exact_below) {
  cfg.validate();
  const double a = alpha.resolve(dominant_eigs(g).lambda1);
  const Vector d = diagonal_of(g, MatrixFunction::resolvent(a), cfg, exact_below);
  return {to_std(d), Method::res_subgraph, a, {}};
}

ScoreVector compute_scores(const Graph& g, Method method, const ScoreOptions& opts) {
  switch (method) {
    case Method::exp_subgraph: return subgraph_centrality(g, opts.beta, opts.krylov, opts.exact_below);
    case Method::exp_total: return total_communicability(g, opts.beta, opts.krylov);
    case Method::res_subgraph: return katz_subgraph(g, opts.alpha, opts.krylov, opts.exact_below);
    case Method::res_total: return katz_total(g, opts.alpha, opts.krylov);
  }
  throw std::logic_error("unknown method");
}

std::vector<std::size_t> Ranking::positions() const {
  std::vector<std::size_t> pos(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) pos[order[r]] = r;
  return pos;
}

Ranking rank(const ScoreVector& scores) {
  Ranking r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  const auto& s = scores.scores;
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](NodeId a, NodeId b) { return s[a] > s[b]; });
  r.scores = scores;
  return r;
}

}  // namespace netcomm
