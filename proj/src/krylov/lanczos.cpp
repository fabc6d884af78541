#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "netcomm/krylov.hpp"
#include "krylov_internal.hpp"

namespace netcomm {

Vector spmv(const Graph& g, const Vector& x) {
  if (static_cast<std::size_t>(x.size()) != g.num_nodes()) {
    throw std::invalid_argument("spmv: vector has " + std::to_string(x.size()) +
                                " entries, graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
  Vector y(x.size());
  const auto offsets = g.row_offsets();
  const auto cols = g.col_indices();
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    double s = 0.0;
    for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) s += x[cols[p]];
    y[static_cast<Eigen::Index>(i)] = s;
  }
  return y;
}

namespace detail {

double breakdown_threshold(const Graph& g) {
  std::size_t max_row = 1;
  for (NodeId i = 0; i < g.num_nodes(); ++i) max_row = std::max(max_row, g.row_length(i));
  return 1e-12 * static_cast<double>(max_row);
}

void orthogonalize(Vector& w, const Eigen::Ref<const Eigen::MatrixXd>& basis) {
  if (basis.cols() == 0) return;
  for (int pass = 0; pass < 2; ++pass) w.noalias() -= basis * (basis.transpose() * w);
}

}  // namespace detail

Eigen::MatrixXd LanczosDecomposition::tridiagonal() const {
  const auto k = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    t(j, j) = alpha[j];
    if (j + 1 < k) t(j, j + 1) = t(j + 1, j) = beta[j];
  }
  return t;
}

LanczosDecomposition lanczos(const Graph& g, const Vector& start, std::size_t steps) {
  const std::size_t n = g.num_nodes();
  if (static_cast<std::size_t>(start.size()) != n) {
    throw std::invalid_argument("lanczos: start vector has wrong dimension");
  }
  if (steps == 0 || steps > n) {
    throw std::invalid_argument("lanczos: steps must lie in [1, n] (got " + std::to_string(steps) + ")");
  }
  const double start_norm = start.norm();
  if (start_norm == 0.0) throw std::invalid_argument("lanczos: zero start vector");

  const double tiny = detail::breakdown_threshold(g);
  LanczosDecomposition out;
  out.basis.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(steps));
  out.alpha.reserve(steps);
  out.beta.reserve(steps);

  Vector q = start / start_norm;
  for (std::size_t j = 0; j < steps; ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    out.basis.col(jj) = q;
    Vector w = spmv(g, q);
    const double a = q.dot(w);
    w -= a * q;
    if (j > 0) w -= out.beta[j - 1] * out.basis.col(jj - 1);
    detail::orthogonalize(w, out.basis.leftCols(jj + 1));
    out.alpha.push_back(a);
    const double b = w.norm();

    if (b <= tiny) {
      out.basis.conservativeResize(Eigen::NoChange, jj + 1);
      out.invariant = true;
      out.residual_norm = 0.0;
      out.next_vector = Vector::Zero(static_cast<Eigen::Index>(n));
      return out;
    }
    q = w / b;
    if (j + 1 < steps) {
      out.beta.push_back(b);
    } else {
      out.residual_norm = b;
      out.next_vector = q;
    }
  }
  return out;
}

}  // namespace netcomm
