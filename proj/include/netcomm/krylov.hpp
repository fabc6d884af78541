#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "netcomm/graph.hpp"

namespace netcomm {

using Vector = Eigen::VectorXd;

struct KrylovConfig {
  /// Lanczos steps per restart cycle.
  int restart_length = 10;
  int max_restarts = 50;
  /// A restarted evaluation stops once the correction added in a cycle has
  /// norm <= tolerance * ||result||.
  double tolerance = 1e-12;
  /// Lanczos steps per node for Gauss-rule diagonal estimates.
  int quadrature_steps = 5;

  /// Throws std::invalid_argument if a field is out of range.
  void validate() const;
};

/// Scalar function applied to a symmetric matrix through its spectrum.
class MatrixFunction {
 public:
  enum class Kind { exponential, resolvent };

  /// x -> exp(beta * x)
  static MatrixFunction exponential(double beta);
  /// x -> 1 / (1 - alpha * x)
  static MatrixFunction resolvent(double alpha);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  double operator()(double x) const;
  std::string describe() const;

 private:
  MatrixFunction(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
};

/// y = A x.
Vector spmv(const Graph& g, const Vector& x);

/// k-step Lanczos with full reorthogonalization:
///   A V = V T + residual_norm * next_vector * e_k^T,
/// T tridiagonal with diagonal `alpha` and off-diagonal `beta`.
/// If the recurrence breaks down (invariant subspace found) the
/// decomposition is shorter than requested and `invariant` is set.
struct LanczosDecomposition {
  Eigen::MatrixXd basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  double residual_norm = 0.0;
  Vector next_vector;
  bool invariant = false;

  std::size_t steps() const { return alpha.size(); }
  Eigen::MatrixXd tridiagonal() const;
};

LanczosDecomposition lanczos(const Graph& g, const Vector& start,
                             std::size_t steps);

struct KrylovResult {
  Vector values;
  int cycles = 0;
  /// ||last correction|| / ||values||.
  double relative_update = 0.0;
  /// True when the Krylov space became invariant (result exact up to
  /// rounding).
  bool exhausted = false;
};

/// Restarted Krylov evaluation of f(A) v. Each cycle runs `restart_length`
/// Lanczos steps from the previous cycle's residual direction; the cycle
/// tridiagonals are chained into one block bidiagonal matrix H and the
/// correction for the cycle is read off f(H) e_1. Throws ConvergenceError
/// after `max_restarts` cycles without meeting the tolerance.
KrylovResult apply_matrix_function(const Graph& g, const Vector& v,
                                   const MatrixFunction& f,
                                   const KrylovConfig& cfg);

/// exp(beta A) v.
Vector expm_multiply(const Graph& g, const Vector& v, double beta,
                     const KrylovConfig& cfg);

/// Gauss-rule estimate of e_i^T f(A) e_i from a `steps`-step Lanczos run
/// started at e_i: e_1^T f(T) e_1. For the exponential the estimate is a
/// lower bound that increases with `steps`; it is exact once the Krylov
/// space is invariant.
double quadrature_diag(const Graph& g, NodeId i, const MatrixFunction& f,
                       std::size_t steps);
double quadrature_diag(const Graph& g, NodeId i, const MatrixFunction& f,
                       const KrylovConfig& cfg);

/// quadrature_diag for every node. Nodes are split across worker threads;
/// each result lands in its own slot so the output does not depend on
/// scheduling.
Vector quadrature_diagonal(const Graph& g, const MatrixFunction& f,
                           const KrylovConfig& cfg, unsigned workers = 0);

struct SpectralEstimate {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  /// Unit-norm dominant eigenvector, sign chosen so its entries sum >= 0.
  Vector v1;
  bool converged = false;
  /// lambda1 == lambda2 within tolerance: the dominant eigenvalue is
  /// repeated (e.g. two identical components) and v1 is not unique.
  bool lambda1_repeated = false;
  int iterations = 0;

  double spectral_gap() const { return lambda1 - lambda2; }
};

/// Two largest eigenvalues of A by Lanczos with full reorthogonalization,
/// from a fixed pseudo-random start vector. Breakdowns are continued with a
/// fresh vector orthogonal to the current basis so repeated eigenvalues are
/// seen. `max_basis` bounds memory; past it the run restarts from the two
/// leading Ritz vectors.
SpectralEstimate dominant_eigs(const Graph& g, double tol = 1e-10,
                               std::size_t max_basis = 150,
                               int max_restarts = 100);

/// Conjugate gradients on (I - alpha A) x = b. alpha = 0 returns b. A
/// non-positive curvature p^T (I - alpha A) p <= 0 means alpha is outside
/// (0, 1/lambda1) and raises std::invalid_argument.
Vector cg_solve_resolvent(const Graph& g, double alpha, const Vector& b,
                          double tol, std::size_t max_iterations = 0);

/// Full eigendecomposition of a small adjacency matrix.
class DenseSpectrum {
 public:
  static constexpr std::size_t kDefaultCap = 3000;

  /// Throws std::invalid_argument when g has more than `cap` nodes.
  explicit DenseSpectrum(const Graph& g, std::size_t cap = kDefaultCap);

  const Vector& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  /// f(A) = V f(Lambda) V^T.
  Eigen::MatrixXd function(const MatrixFunction& f) const;
  /// diag(f(A)) without forming the matrix.
  Vector diagonal(const MatrixFunction& f) const;
  /// f(A) v.
  Vector apply(const MatrixFunction& f, const Vector& v) const;

 private:
  Vector spectrum_values(const MatrixFunction& f) const;

  Vector eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

/// Dense f(A), the reference route used to check the Krylov kernels.
Eigen::MatrixXd dense_oracle(const Graph& g, const MatrixFunction& f,
                             std::size_t cap = DenseSpectrum::kDefaultCap);

/// Dense 0/1 adjacency matrix.
Eigen::MatrixXd dense_adjacency(const Graph& g);

}  // namespace netcomm
