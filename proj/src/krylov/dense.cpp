#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "netcomm/krylov.hpp"

namespace netcomm {

Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    for (NodeId j : g.neighbors(i)) a(i, j) = 1.0;
  }
  return a;
}

DenseSpectrum::DenseSpectrum(const Graph& g, std::size_t cap) {
  if (g.num_nodes() > cap) {
    throw std::invalid_argument("dense eigendecomposition limited to " + std::to_string(cap) +
                                " nodes (graph has " + std::to_string(g.num_nodes()) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_adjacency(g));
  eigenvalues_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
}

Vector DenseSpectrum::spectrum_values(const MatrixFunction& f) const {
  Vector out(eigenvalues_.size());
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    if (f.kind() == MatrixFunction::Kind::resolvent && f.parameter() * eigenvalues_[j] >= 1.0) {
      throw std::invalid_argument("resolvent parameter violates 0 < alpha < 1/lambda1");
    }
    out[j] = f(eigenvalues_[j]);
  }
  return out;
}

Eigen::MatrixXd DenseSpectrum::function(const MatrixFunction& f) const {
  const Vector fv = spectrum_values(f);
  return eigenvectors_ * fv.asDiagonal() * eigenvectors_.transpose();
}

Vector DenseSpectrum::diagonal(const MatrixFunction& f) const {
  const Vector fv = spectrum_values(f);
  return eigenvectors_.array().square().matrix() * fv;
}

Vector DenseSpectrum::apply(const MatrixFunction& f, const Vector& v) const {
  const Vector fv = spectrum_values(f);
  return eigenvectors_ * (fv.asDiagonal() * (eigenvectors_.transpose() * v));
}

Eigen::MatrixXd dense_oracle(const Graph& g, const MatrixFunction& f, std::size_t cap) {
  return DenseSpectrum(g, cap).function(f);
}

}  // namespace netcomm
