#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netcomm/errors.hpp"
#include "netcomm/krylov.hpp"

namespace netcomm {

Vector cg_solve_resolvent(const Graph& g, double alpha, const Vector& b, double tol,
                          std::size_t max_iterations) {
  const std::size_t n = g.num_nodes();
  if (static_cast<std::size_t>(b.size()) != n) {
    throw std::invalid_argument("cg_solve_resolvent: right-hand side has wrong dimension");
  }
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("cg_solve_resolvent: alpha must satisfy 0 < alpha < 1/lambda1");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("cg_solve_resolvent: tolerance must be positive");
  if (alpha == 0.0) return b;
  const double b_norm = b.norm();
  if (b_norm == 0.0) return Vector::Zero(b.size());
  if (max_iterations == 0) max_iterations = 10 * n + 100;

  auto apply = [&](const Vector& x) -> Vector { return x - alpha * spmv(g, x); };

  Vector x = Vector::Zero(b.size());
  Vector r = b;
  Vector p = r;
  double rr = r.squaredNorm();
  int true_residual_checks = 0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    const Vector ap = apply(p);
    const double curvature = p.dot(ap);
    if (!(curvature > 0.0)) {
      std::ostringstream os;
      os << "I - alpha A is not positive definite for alpha = " << alpha
         << ": the resolvent requires 0 < alpha < 1/lambda1";
      throw std::invalid_argument(os.str());
    }
    const double step = rr / curvature;
    x += step * p;
    r -= step * ap;
    const double rr_next = r.squaredNorm();
    if (std::sqrt(rr_next) <= tol * b_norm) {
      // The recursive residual can drift from the true one; confirm.
      const Vector true_r = b - apply(x);
      if (true_r.norm() <= tol * b_norm || ++true_residual_checks > 3) {
        if (true_r.norm() <= tol * b_norm) return x;
        break;
      }
      r = true_r;
      p = r;
      rr = r.squaredNorm();
      continue;
    }
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }
  const double achieved = (b - apply(x)).norm() / b_norm;
  std::ostringstream os;
  os << "conjugate gradients did not reach relative residual " << tol << " (achieved " << achieved
     << ")";
  throw ConvergenceError(os.str(), x, achieved);
}

}  // namespace netcomm
