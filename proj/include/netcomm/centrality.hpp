#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netcomm/graph.hpp"
#include "netcomm/krylov.hpp"

namespace netcomm {

enum class Method { exp_subgraph, exp_total, res_subgraph, res_total };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
bool is_resolvent(Method m);

struct ScoreVector {
  std::vector<double> scores;
  Method method = Method::exp_total;
  /// beta for the exponential methods, the realized alpha for the resolvent.
  double parameter = 0.0;
  std::string graph_id;

  std::size_t size() const { return scores.size(); }
};

/// Resolvent parameter, given either as a fraction of 1/lambda1 (the usual
/// route, alpha = fraction / lambda1) or as a literal alpha.
class AlphaChoice {
 public:
  static AlphaChoice fraction(double f);
  static AlphaChoice literal(double alpha);

  /// Validates against lambda1 and returns alpha. A literal alpha must
  /// satisfy 0 < alpha and alpha * lambda1 < 1 - 1e-10.
  double resolve(double lambda1) const;

  bool is_fraction() const { return is_fraction_; }
  double value() const { return value_; }

 private:
  AlphaChoice(bool is_fraction, double value) : is_fraction_(is_fraction), value_(value) {}

  bool is_fraction_;
  double value_;
};

inline constexpr std::size_t kDefaultExactBelow = DenseSpectrum::kDefaultCap;

/// [exp(beta A) 1]_i.
ScoreVector total_communicability(const Graph& g, double beta,
                                  const KrylovConfig& cfg);

/// [exp(beta A)]_ii. Exact (dense eigendecomposition) when
/// n <= exact_below, otherwise per-node Gauss quadrature.
ScoreVector subgraph_centrality(const Graph& g, double beta,
                                const KrylovConfig& cfg,
                                std::size_t exact_below = kDefaultExactBelow);

/// [(I - alpha A)^{-1} 1]_i by conjugate gradients.
ScoreVector katz_total(const Graph& g, const AlphaChoice& alpha,
                       const KrylovConfig& cfg);

/// [(I - alpha A)^{-1}]_ii, exact or by quadrature as for
/// subgraph_centrality.
ScoreVector katz_subgraph(const Graph& g, const AlphaChoice& alpha,
                          const KrylovConfig& cfg,
                          std::size_t exact_below = kDefaultExactBelow);

struct ScoreOptions {
  double beta = 1.0;
  AlphaChoice alpha = AlphaChoice::fraction(0.85);
  KrylovConfig krylov;
  std::size_t exact_below = kDefaultExactBelow;
};

/// Dispatch on `method`.
ScoreVector compute_scores(const Graph& g, Method method,
                           const ScoreOptions& opts);

/// Network-level communicability: total communicability C = 1^T f(A) 1,
/// its trace counterpart EE = tr f(A), and the bounds
///   EE <= C <= n exp(beta lambda1)         (exponential)
///   EE <= C <= n / (1 - alpha lambda1)     (resolvent).
struct NetworkReport {
  MatrixFunction::Kind kind = MatrixFunction::Kind::exponential;
  /// beta or realized alpha.
  double parameter = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  double C = 0.0;
  double EE = 0.0;
  double C_over_n = 0.0;
  /// NaN for an edgeless graph.
  double C_over_m = 0.0;
  double EE_over_n = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double upper_bound = 0.0;
  /// upper_bound / n, i.e. exp(beta lambda1) or 1 / (1 - alpha lambda1).
  double upper_bound_per_node = 0.0;
  /// EE <= C <= upper_bound, each with 1e-8 * C relative slack.
  bool bounds_ok = false;
  bool trace_exact = false;
};

NetworkReport network_report_exp(const Graph& g, double beta,
                                 const KrylovConfig& cfg,
                                 std::size_t exact_below = kDefaultExactBelow);
NetworkReport network_report_resolvent(const Graph& g, const AlphaChoice& alpha,
                                       const KrylovConfig& cfg,
                                       std::size_t exact_below = kDefaultExactBelow);

/// log of the normalized communicability
///   C_hat = (C - n) / (n^2 e^{n-1} - 2n)
/// evaluated in the log domain; the direct quotient underflows to 0 once
/// e^{n-1} overflows (n around 710). The denominator is the published
/// normalizer; for K_n the eigendecomposition gives C = n e^{n-1}, so C_hat
/// of a complete graph is about 1/n rather than 1. Requires n >= 2 and
/// C > n, otherwise std::domain_error.
double log_normalized_C(double C, std::size_t n);
double log_normalized_C(const NetworkReport& report);
/// Same quantity evaluated directly in double precision.
double direct_normalized_C(double C, std::size_t n);

struct Ranking {
  /// Node ids, best first. Equal scores are ordered by ascending node id;
  /// only bitwise-equal scores count as equal.
  std::vector<NodeId> order;
  ScoreVector scores;

  std::size_t size() const { return order.size(); }
  /// position[i] = rank index (0-based) of node i.
  std::vector<std::size_t> positions() const;
};

Ranking rank(const ScoreVector& scores);

}  // namespace netcomm
