#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "netcomm/krylov.hpp"
#include "netcomm/random.hpp"
#include "krylov_internal.hpp"

namespace netcomm {
namespace {

constexpr std::uint64_t kStartSeed = 0x5eed'1a2c'0b5e'ed01ULL;
constexpr std::size_t kMinStagnationBasis = 20;
constexpr Eigen::Index kKeptRitzVectors = 8;

Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform01() - 0.5;
  return v;
}

// Perturbed all-ones vector. Close to the Perron vector of near-regular
// graphs, so clusters just below lambda1 carry little weight.
Vector start_vector(Rng& rng, std::size_t n) {
  return Vector::Ones(static_cast<Eigen::Index>(n)) + 0.01 * random_vector(rng, n);
}

}  // namespace

// Thick-restart Lanczos. The projected matrix T = V^T A V is assembled column
// by column (full reorthogonalization makes it tridiagonal apart from the
// arrowhead left by a restart), and A V = V T + beta v_next e_last^T holds
// throughout, so beta |s_last,i| is the residual of Ritz pair i.
SpectralEstimate dominant_eigs(const Graph& g, double tol, std::size_t max_basis, int max_restarts) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("dominant_eigs: empty graph");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("dominant_eigs: tolerance must lie in (0, 1)");
  const auto cap = static_cast<Eigen::Index>(std::min(n, std::max<std::size_t>(max_basis, 4)));
  const Eigen::Index keep = std::min(kKeptRitzVectors, cap / 2);
  const double tiny = detail::breakdown_threshold(g);
  const double loose = std::sqrt(tol);

  Rng rng(kStartSeed);
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(n), cap);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(cap, cap);
  basis.col(0) = start_vector(rng, n).normalized();
  Eigen::Index dim = 1;

  SpectralEstimate est;
  int restarts = 0;
  double prev1 = 0.0, prev2 = 0.0;
  bool have_prev = false;

  for (;;) {
    const Eigen::Index j = dim - 1;
    Vector w = spmv(g, basis.col(j));
    const Vector h = basis.leftCols(dim).transpose() * w;
    t.col(j).head(dim) = h;
    t.row(j).head(dim) = h.transpose();
    w.noalias() -= basis.leftCols(dim) * h;
    detail::orthogonalize(w, basis.leftCols(dim));
    ++est.iterations;

    // beta couples the basis to the next vector; zero after a breakdown,
    // where the run continues in the orthogonal complement of the invariant
    // subspace found so far.
    double beta = w.norm();
    Vector next;
    bool exhausted = false;
    if (beta <= tiny) {
      beta = 0.0;
      if (static_cast<std::size_t>(dim) == n) {
        exhausted = true;
      } else {
        Vector fresh = random_vector(rng, n);
        detail::orthogonalize(fresh, basis.leftCols(dim));
        if (fresh.norm() <= 1e-8) {
          exhausted = true;
        } else {
          next = fresh.normalized();
        }
      }
    } else {
      next = w / beta;
    }
    if (static_cast<std::size_t>(dim) == n) exhausted = true;

    if (exhausted || dim == cap || dim % 5 == 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t.topLeftCorner(dim, dim));
      const Vector& theta = eig.eigenvalues();
      const Eigen::MatrixXd& s = eig.eigenvectors();
      const Eigen::Index top = dim - 1;
      const Eigen::Index second = std::max<Eigen::Index>(top - 1, 0);
      auto residual = [&](Eigen::Index idx) { return beta * std::abs(s(top, idx)); };
      auto scale = [&](Eigen::Index idx) { return std::max(1.0, std::abs(theta[idx])); };

      // lambda1 by residual or, inside a tight cluster where residuals stall,
      // by its Ritz value having settled. lambda2 is only reported, and its
      // Ritz vector mixes any cluster it sits in, so it uses sqrt(tol).
      const bool settled = have_prev && dim >= static_cast<Eigen::Index>(kMinStagnationBasis);
      const bool first_ok = residual(top) <= tol * scale(top) ||
                            (settled && std::abs(theta[top] - prev1) <= tol * scale(top));
      const bool second_ok = residual(second) <= loose * scale(second) ||
                             (settled && std::abs(theta[second] - prev2) <= loose * scale(second));
      const bool converged = exhausted || (dim >= 2 && first_ok && second_ok);
      prev1 = theta[top];
      prev2 = theta[second];
      have_prev = dim >= 2;

      if (converged || (dim == cap && restarts >= max_restarts)) {
        est.converged = converged;
        est.lambda1 = theta[top];
        est.lambda2 = dim >= 2 ? theta[second] : theta[top];
        est.v1 = basis.leftCols(dim) * s.col(top);
        est.v1.normalize();
        if (est.v1.sum() < 0.0) est.v1 = -est.v1;
        est.lambda1_repeated =
            n >= 2 && est.lambda1 - est.lambda2 <= std::max(tol, 1e-8) * std::max(1.0, std::abs(est.lambda1));
        return est;
      }

      if (dim == cap) {
        // Keep the leading Ritz vectors; the new vector couples to them
        // through the arrowhead beta * s_last,i.
        const Eigen::MatrixXd kept = basis.leftCols(dim) * s.rightCols(keep);
        basis.leftCols(keep) = kept;
        t.setZero();
        for (Eigen::Index i = 0; i < keep; ++i) {
          t(i, i) = theta[dim - keep + i];
          t(keep, i) = t(i, keep) = beta * s(top, dim - keep + i);
        }
        basis.col(keep) = next;
        dim = keep + 1;
        ++restarts;
        continue;
      }
    }
    basis.col(dim) = next;
    ++dim;
  }
}

}  // namespace netcomm
