#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "netcomm/errors.hpp"
#include "netcomm/krylov.hpp"

namespace netcomm {

void KrylovConfig::validate() const {
  if (restart_length < 1) throw std::invalid_argument("restart_length must be positive");
  if (max_restarts < 1) throw std::invalid_argument("max_restarts must be positive");
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw std::invalid_argument("tolerance must lie in (0, 1)");
  }
  if (quadrature_steps < 1) throw std::invalid_argument("quadrature_steps must be positive");
}

MatrixFunction MatrixFunction::exponential(double beta) {
  if (!std::isfinite(beta)) throw std::invalid_argument("exponential: beta must be finite");
  return {Kind::exponential, beta};
}

MatrixFunction MatrixFunction::resolvent(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::invalid_argument("resolvent: alpha must be finite and nonnegative");
  }
  return {Kind::resolvent, alpha};
}

double MatrixFunction::operator()(double x) const {
  if (kind_ == Kind::exponential) return std::exp(parameter_ * x);
  return 1.0 / (1.0 - parameter_ * x);
}

std::string MatrixFunction::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::exponential) {
    os << "exp(" << parameter_ << " x)";
  } else {
    os << "1/(1 - " << parameter_ << " x)";
  }
  return os.str();
}

namespace {

// First column of f(H) for a small (generally nonsymmetric) H.
Vector first_column(const Eigen::MatrixXd& h, const MatrixFunction& f) {
  const Eigen::Index k = h.rows();
  if (f.kind() == MatrixFunction::Kind::exponential) {
    const Eigen::MatrixXd scaled = f.parameter() * h;
    const Eigen::MatrixXd e = scaled.exp();
    return e.col(0);
  }
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(k, k) - f.parameter() * h;
  return m.partialPivLu().solve(Vector::Unit(k, 0));
}

}  // namespace

KrylovResult apply_matrix_function(const Graph& g, const Vector& v, const MatrixFunction& f,
                                   const KrylovConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  if (static_cast<std::size_t>(v.size()) != n) {
    throw std::invalid_argument("apply_matrix_function: vector has wrong dimension");
  }
  const double v_norm = v.norm();
  if (v_norm == 0.0) throw std::invalid_argument("apply_matrix_function: zero vector");

  const std::size_t cycle_steps = std::min<std::size_t>(static_cast<std::size_t>(cfg.restart_length), n);
  KrylovResult result;
  result.values = Vector::Zero(static_cast<Eigen::Index>(n));

  // H collects every cycle's tridiagonal on its block diagonal, linked by the
  // previous cycle's residual norm just below the diagonal.
  Eigen::MatrixXd h;
  Vector start = v / v_norm;
  double coupling = 0.0;

  for (int cycle = 1; cycle <= cfg.max_restarts; ++cycle) {
    const LanczosDecomposition dec = lanczos(g, start, cycle_steps);
    const Eigen::Index prev = h.rows();
    const auto k = static_cast<Eigen::Index>(dec.steps());

    Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(prev + k, prev + k);
    grown.topLeftCorner(prev, prev) = h;
    grown.bottomRightCorner(k, k) = dec.tridiagonal();
    if (prev > 0) grown(prev, prev - 1) = coupling;
    h = std::move(grown);

    const Vector coeffs = first_column(h, f);
    const Vector update = v_norm * (dec.basis * coeffs.tail(k));
    result.values += update;
    result.cycles = cycle;

    const double value_norm = result.values.norm();
    result.relative_update = value_norm > 0.0 ? update.norm() / value_norm : update.norm();
    if (!std::isfinite(result.relative_update)) {
      throw ConvergenceError("Krylov evaluation of " + f.describe() + " produced non-finite values",
                             result.values, result.relative_update);
    }
    if (dec.invariant) {
      result.exhausted = true;
      return result;
    }
    if (cycle > 1 && result.relative_update <= cfg.tolerance) return result;

    start = dec.next_vector;
    coupling = dec.residual_norm;
  }
  std::ostringstream os;
  os << "Krylov evaluation of " << f.describe() << " did not converge in " << cfg.max_restarts
     << " restarts (last relative update " << result.relative_update << ", tolerance "
     << cfg.tolerance << ")";
  throw ConvergenceError(os.str(), result.values, result.relative_update);
}

Vector expm_multiply(const Graph& g, const Vector& v, double beta, const KrylovConfig& cfg) {
  return apply_matrix_function(g, v, MatrixFunction::exponential(beta), cfg).values;
}

double quadrature_diag(const Graph& g, NodeId i, const MatrixFunction& f, std::size_t steps) {
  const std::size_t n = g.num_nodes();
  if (i >= n) throw std::invalid_argument("quadrature_diag: node " + std::to_string(i) + " out of range");
  if (steps == 0) throw std::invalid_argument("quadrature_diag: steps must be positive");
  const Vector e = Vector::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i));
  const LanczosDecomposition dec = lanczos(g, e, std::min(steps, n));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dec.tridiagonal());
  const Vector& theta = eig.eigenvalues();
  const auto first_row = eig.eigenvectors().row(0);
  double estimate = 0.0;
  for (Eigen::Index j = 0; j < theta.size(); ++j) {
    if (f.kind() == MatrixFunction::Kind::resolvent && f.parameter() * theta[j] >= 1.0) {
      throw std::invalid_argument("quadrature_diag: resolvent parameter violates 0 < alpha < 1/lambda1");
    }
    estimate += first_row[j] * first_row[j] * f(theta[j]);
  }
  return estimate;
}

double quadrature_diag(const Graph& g, NodeId i, const MatrixFunction& f, const KrylovConfig& cfg) {
  cfg.validate();
  return quadrature_diag(g, i, f, static_cast<std::size_t>(cfg.quadrature_steps));
}

Vector quadrature_diagonal(const Graph& g, const MatrixFunction& f, const KrylovConfig& cfg,
                           unsigned workers) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  Vector out(static_cast<Eigen::Index>(n));
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < n; i += workers) {
        out[static_cast<Eigen::Index>(i)] = quadrature_diag(g, static_cast<NodeId>(i), f, cfg);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace netcomm
