#include "netcomm/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace netcomm::reference {
namespace {

void require_small(const Graph& g) {
  if (g.num_nodes() > kMaxNodes) {
    throw std::invalid_argument("reference series limited to " + std::to_string(kMaxNodes) +
                                " nodes (graph has " + std::to_string(g.num_nodes()) + ")");
  }
}

}  // namespace

WalkTable walk_table(const Graph& g, std::size_t k_max) {
  require_small(g);
  const std::size_t n = g.num_nodes();
  WalkTable t;
  t.k_max = k_max;
  t.counts.resize(k_max + 1);
  t.counts[0].assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) t.counts[0][i][i] = 1;
  // A^k = A * A^{k-1}: row i of A^k is the sum of rows j of A^{k-1} over
  // neighbours j of i.
  for (std::size_t k = 1; k <= k_max; ++k) {
    t.counts[k].assign(n, std::vector<BigInt>(n, 0));
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j : g.neighbors(i)) {
        const auto& src = t.counts[k - 1][j];
        auto& dst = t.counts[k][i];
        for (std::size_t c = 0; c < n; ++c) dst[c] += src[c];
      }
    }
  }
  return t;
}

Eigen::MatrixXd truncated_exp_series(const Graph& g, std::size_t k_max) {
  if (k_max < 1) throw std::invalid_argument("truncated_exp_series: k_max must be at least 1");
  const WalkTable t = walk_table(g, k_max);
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const double inv_factorial = 1.0 / std::tgamma(static_cast<double>(k) + 1.0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        out(i, j) += t.counts[k][i][j].convert_to<double>() * inv_factorial;
  }
  return out;
}

Eigen::MatrixXd truncated_resolvent_series(const Graph& g, double alpha, std::size_t k_max) {
  require_small(g);
  if (!(alpha >= 0.0)) throw std::invalid_argument("truncated_resolvent_series: alpha must be >= 0");
  if (g.num_nodes() > 0 && alpha > 0.0) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.num_nodes()),
                                              static_cast<Eigen::Index>(g.num_nodes()));
    for (NodeId i = 0; i < g.num_nodes(); ++i)
      for (NodeId j : g.neighbors(i)) a(i, j) = 1.0;
    const double lambda1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly)
                               .eigenvalues()
                               .maxCoeff();
    if (alpha * lambda1 >= 1.0) {
      throw std::invalid_argument("truncated_resolvent_series: geometric series diverges (alpha * lambda1 >= 1)");
    }
  }
  const WalkTable t = walk_table(g, k_max);
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  double weight = 1.0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        out(i, j) += t.counts[k][i][j].convert_to<double>() * weight;
    weight *= alpha;
  }
  return out;
}

}  // namespace netcomm::reference
